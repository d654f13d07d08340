"""Exact computations for the Grassmann graph J_q(N, D) with a Delsarte clique:
Leonard systems of dual q-Hahn type, the confluent Cherednik algebra H_V on
the module W, and the non-symmetric dual q-Hahn polynomials."""

from .scalars import ExactScalar, I, ONE, Q, S, ZERO, parse, qpow, render, specialize_q
from .laurent import ZETA, ZetaLaurent
from .linalg import Matrix
from .qcomb import gauss_binom, grassmann_scalars, q_pochhammer, qint

__version__ = "0.1.0"

__all__ = [
    "ExactScalar", "I", "ONE", "Q", "S", "ZERO", "parse", "qpow", "render", "specialize_q",
    "ZETA", "ZetaLaurent", "Matrix", "gauss_binom", "grassmann_scalars", "q_pochhammer", "qint",
]
