"""Laurent polynomials in one variable zeta over Q(i)(s)."""

from __future__ import annotations

from typing import Mapping

from .linalg import Matrix
from .scalars import ONE, ZERO, ExactScalar, as_scalar, render

__all__ = ["ZetaLaurent", "ZETA"]


class ZetaLaurent:
    """Sparse map from integer exponent to nonzero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        out = {}
        for e, c in (coeffs or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                out[int(e)] = c
        self.coeffs = out

    @classmethod
    def const(cls, c) -> "ZetaLaurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=ONE) -> "ZetaLaurent":
        return cls({e: c})

    @classmethod
    def from_roots(cls, roots, shift: int = 0) -> "ZetaLaurent":
        """zeta**shift * prod (zeta - r)."""
        out = cls.monomial(shift)
        for r in roots:
            out = out * cls({1: ONE, 0: -as_scalar(r)})
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> ExactScalar:
        return self.coeffs.get(e, ZERO)

    @property
    def degree(self) -> int:
        """Highest exponent."""
        if not self.coeffs:
            raise ValueError("degree of zero Laurent polynomial")
        return max(self.coeffs)

    @property
    def low_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero Laurent polynomial")
        return min(self.coeffs)

    def window(self) -> tuple[int, int]:
        return self.degree, self.low_degree

    def _coerce(self, other):
        if isinstance(other, ZetaLaurent):
            return other
        c = as_scalar(other)
        if c is NotImplemented:
            return c
        return ZetaLaurent.const(c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return ZetaLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaLaurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, ZERO) + c1 * c2
        return ZetaLaurent(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c).inverse()
        return self * c

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self.coeffs.items()
            return ZetaLaurent({-e * (-n): c.inverse() ** (-n)})
        out = ZetaLaurent.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def shift(self, k: int) -> "ZetaLaurent":
        """Multiply by zeta**k."""
        return ZetaLaurent({e + k: c for e, c in self.coeffs.items()})

    def reflect(self) -> "ZetaLaurent":
        """zeta -> zeta**-1."""
        return ZetaLaurent({-e: c for e, c in self.coeffs.items()})

    def conjugate(self) -> "ZetaLaurent":
        """Conjugate the coefficients only."""
        return ZetaLaurent({e: c.conjugate() for e, c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        return self == self.reflect()

    def __call__(self, z):
        """Evaluate at a scalar."""
        z = as_scalar(z)
        zi = z.inverse() if any(e < 0 for e in self.coeffs) else None
        total = ZERO
        for e, c in self.coeffs.items():
            total = total + c * (z**e if e >= 0 else zi ** (-e))
        return total

    def apply(self, X: Matrix, vec, X_inv: Matrix | None = None) -> list:
        """f(X) vec, built from the powers X**j vec."""
        vec = [as_scalar(v) for v in vec]
        out = [ZERO] * len(vec)
        if not self.coeffs:
            return out
        hi = max(max(self.coeffs), 0)
        lo = min(min(self.coeffs), 0)
        pos = [vec]
        for _ in range(hi):
            pos.append(X.apply(pos[-1]))
        neg = [vec]
        if lo < 0:
            X_inv = X.inverse() if X_inv is None else X_inv
            for _ in range(-lo):
                neg.append(X_inv.apply(neg[-1]))
        for e, c in self.coeffs.items():
            w = pos[e] if e >= 0 else neg[-e]
            out = [o + c * x for o, x in zip(out, w)]
        return out

    def __repr__(self):
        if not self.coeffs:
            return "ZetaLaurent(0)"
        terms = ", ".join(f"{e}: {render(self.coeffs[e])}" for e in sorted(self.coeffs, reverse=True))
        return f"ZetaLaurent({{{terms}}})"


ZETA = ZetaLaurent.monomial(1)
