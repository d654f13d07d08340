"""Small finite fields GF(p^e), q <= 16, by lookup tables."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["FiniteField", "prime_power", "GF", "CONWAY"]

# Conway polynomials, lowest coefficient first (monic, leading 1 omitted)
CONWAY = {
    4: (2, (1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0)),     # x^3 + x + 1
    9: (3, (2, 2)),        # x^2 + 2x + 2
    16: (2, (1, 1, 0, 0)), # x^4 + x + 1
}

MAX_Q = 16


def prime_power(q: int):
    """Return (p, e) with q = p**e, or None."""
    if not isinstance(q, int) or q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


class FiniteField:
    """GF(q) with elements encoded as 0..q-1.

    For q = p^e an element is the integer whose base-p digits are the
    coefficients of a polynomial in the generator modulo the fixed
    irreducible polynomial.  0 and 1 are the additive and multiplicative
    identities.
    """

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None:
            raise ValueError(f"{q} is not a prime power")
        if q > MAX_Q:
            raise ValueError(f"q = {q} exceeds the supported limit {MAX_Q}")
        self.q = q
        self.p, self.e = pe
        self.add = np.zeros((q, q), dtype=np.int64)
        self.mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                self.add[a, b] = self._add(a, b)
                self.mul[a, b] = self._mul(a, b)
        self.neg = np.array([int(np.where(self.add[a] == 0)[0][0]) for a in range(q)])
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.where(self.mul[a] == 1)[0][0])
        self.sub = self.add[:, self.neg]
        self.check_axioms()

    def _digits(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, d):
        return sum(c * self.p**k for k, c in enumerate(d))

    def _add(self, a, b):
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return (a * b) % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        low = CONWAY[self.q][1]
        # reduce using x^e = -(low)
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j, l in enumerate(low):
                    prod[k - e + j] = (prod[k - e + j] - c * l) % p
        return self._from_digits(prod[:e])

    def check_axioms(self):
        q = self.q
        r = range(q)
        A, M = self.add, self.mul
        assert (A == A.T).all() and (M == M.T).all(), "commutativity"
        assert (A[0] == np.arange(q)).all() and (M[1] == np.arange(q)).all(), "identities"
        for a in r:
            assert sorted(A[a]) == list(r), "additive group"
            if a:
                assert sorted(M[a, 1:]) == list(range(1, q)), "multiplicative group"
        # associativity and distributivity, exhaustive
        for a in r:
            assert (A[A[a]] == A[a][A]).all(), "additive associativity"
            assert (M[M[a]] == M[a][M]).all(), "multiplicative associativity"
            assert (M[a][A] == A[M[a]][:, M[a]]).all(), "distributivity"

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    # vector helpers, all on numpy int arrays
    def vadd(self, x, y):
        return self.add[x, y]

    def smul(self, c, x):
        return self.mul[c, x]

    def rref(self, rows):
        """Reduced row echelon form of a 2D int array; returns (matrix, pivots)."""
        m = np.array(rows, dtype=np.int64).copy()
        if m.size == 0:
            return m, []
        nr, nc = m.shape
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            k = r + nz[0]
            if k != r:
                m[[r, k]] = m[[k, r]]
            m[r] = self.mul[self.inv[m[r, c]], m[r]]
            for k in range(nr):
                if k != r and m[k, c]:
                    f = self.neg[m[k, c]]
                    m[k] = self.add[m[k], self.mul[f, m[r]]]
            pivots.append(c)
            r += 1
        return m[:r], pivots

    def rank(self, rows) -> int:
        return len(self.rref(rows)[1])

    def null_space(self, rows):
        """Basis of {v : rows @ v = 0}."""
        m, piv = self.rref(rows)
        nc = np.array(rows).shape[1]
        free = [c for c in range(nc) if c not in piv]
        basis = []
        for f in free:
            v = np.zeros(nc, dtype=np.int64)
            v[f] = 1
            for r, pc in enumerate(piv):
                v[pc] = self.neg[m[r, f]]
            basis.append(v)
        return basis


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    return FiniteField(q)
