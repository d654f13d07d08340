"""Check records shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Matrix
from .scalars import ExactScalar, as_scalar, render

__all__ = ["Check", "zero_check", "equal_check", "all_ok", "failures"]


@dataclass
class Check:
    id: str
    anchor: str
    ok: bool
    witness: str | None = None
    seconds: float = 0.0
    skipped: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.ok else "fail"

    def as_dict(self) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "witness": self.witness,
            "seconds": round(self.seconds, 3),
        }
        if self.extra:
            out["extra"] = self.extra
        return out


def _show(x) -> str:
    if isinstance(x, ExactScalar):
        return render(x)
    c = as_scalar(x) if not isinstance(x, (list, tuple, dict)) else NotImplemented
    return render(c) if isinstance(c, ExactScalar) else repr(x)


def zero_check(cid: str, anchor: str, M: Matrix) -> Check:
    """Pass when the residual matrix is identically zero."""
    w = M.first_nonzero()
    return Check(cid, anchor, w is None, None if w is None else f"residual {w}")


def equal_check(cid: str, anchor: str, got, want) -> Check:
    """Compare matrices, vectors or scalars exactly."""
    if isinstance(got, Matrix):
        return zero_check(cid, anchor, got - want)
    if isinstance(got, (list, tuple)):
        for j, (a, b) in enumerate(zip(got, want)):
            if a != b:
                return Check(cid, anchor, False, f"entry {j}: {_show(a)} != {_show(b)}")
        if len(got) != len(want):
            return Check(cid, anchor, False, f"length {len(got)} != {len(want)}")
        return Check(cid, anchor, True)
    ok = got == want
    return Check(cid, anchor, ok, None if ok else f"{_show(got)} != {_show(want)}")


def all_ok(checks) -> bool:
    return all(c.ok or c.skipped for c in checks)


def failures(checks) -> list:
    return [c for c in checks if not c.ok and not c.skipped]
