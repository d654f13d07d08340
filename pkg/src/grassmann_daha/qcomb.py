"""q-Pochhammer symbols, Gaussian binomials, terminating 3phi2 sums, and the
scalar data of the Grassmann graph J_q(N, D) with a Delsarte clique."""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import I, ONE, Q, ZERO, ExactScalar, ScalarError, as_scalar, qpow

__all__ = [
    "q_pochhammer",
    "qint",
    "gauss_binom",
    "phi32",
    "NonTerminatingSeries",
    "GrassmannScalars",
    "grassmann_scalars",
    "validate_nd",
]


class NonTerminatingSeries(ScalarError):
    pass


def q_pochhammer(alpha, n: int) -> ExactScalar:
    """(alpha; q)_n = (1 - alpha)(1 - alpha q)...(1 - alpha q^(n-1))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = as_scalar(alpha)
    out = ONE
    term = alpha
    for _ in range(n):
        out = out * (ONE - term)
        term = term * Q
    return out


def qint(n: int) -> ExactScalar:
    """[n] = (q^n - 1)/(q - 1), valid for negative n as well."""
    return (qpow(n) - 1) / (Q - 1)


def gauss_binom(n: int, m: int) -> ExactScalar:
    """Gaussian binomial [n, m]_q; zero outside 0 <= m <= n."""
    if m < 0 or n < 0 or m > n:
        return ZERO
    num = ONE
    den = ONE
    for j in range(m):
        num = num * (qpow(n - j) - 1)
        den = den * (qpow(j + 1) - 1)
    return num / den


def _terminating_order(params) -> int | None:
    # smallest n with a parameter equal to q^(-n)
    best = None
    for p in params:
        p = as_scalar(p)
        if p == ONE:
            return 0
        inv = p.inverse() if not p.is_zero() else None
        if inv is None:
            continue
        # inv must be a pure power q^n with n >= 1
        for n in range(1, 200):
            if inv == qpow(n):
                best = n if best is None else min(best, n)
                break
    return best


def phi32(a1, a2, a3, b1, b2, arg, order: int | None = None) -> ExactScalar:
    """Terminating 3phi2 sum.

    The series must terminate: one of the top parameters is q^(-n) for
    some n >= 0.  ``order`` can be given to skip the detection.
    """
    tops = [as_scalar(a) for a in (a1, a2, a3)]
    bots = [as_scalar(b) for b in (b1, b2)]
    arg = as_scalar(arg)
    n = _terminating_order(tops) if order is None else order
    if n is None:
        raise NonTerminatingSeries("no top parameter of the form q^(-n)")
    total = ONE
    term = ONE
    for j in range(n):
        num = ONE
        for a in tops:
            num = num * (ONE - a * qpow(j))
        den = (ONE - qpow(j + 1))
        for b in bots:
            den = den * (ONE - b * qpow(j))
        if den.is_zero():
            raise ZeroDivisionError(f"denominator Pochhammer vanishes at term {j + 1}")
        term = term * num / den * arg
        total = total + term
    return total


def validate_nd(N: int, D: int) -> None:
    if D < 3:
        raise ValueError(f"need D >= 3, got D = {D}")
    if N < 2 * D:
        raise ValueError(f"need N >= 2D, got N = {N}, D = {D}")


@dataclass
class GrassmannScalars:
    """Intersection numbers, eigenvalues and related scalars of J_q(N, D).

    Values with the tilde refer to the Delsarte clique C.  ``n[i]`` is the
    number of clique members at distance i from a vertex of C_i.
    """

    N: int
    D: int
    a: list = field(default_factory=list)
    b: list = field(default_factory=list)
    c: list = field(default_factory=list)
    theta: list = field(default_factory=list)
    theta_star: list = field(default_factory=list)
    a_tilde: list = field(default_factory=list)
    b_tilde: list = field(default_factory=list)
    c_tilde: list = field(default_factory=list)
    theta_star_tilde: list = field(default_factory=list)
    n: list = field(default_factory=list)
    clique_size: ExactScalar = ZERO
    num_vertices: ExactScalar = ZERO
    tau: ExactScalar = ZERO
    k: ExactScalar = ZERO
    k_prime: ExactScalar = ZERO
    u: ExactScalar = ZERO
    cell_minus: list = field(default_factory=list)
    cell_plus: list = field(default_factory=list)


def _a_closed(N, D, i):
    # a_i = [i](-[i] + q^{i+1}[D-i] + q[N-D]); the same as b_0 - b_i - c_i
    return qint(i) * (-qint(i) + qpow(i + 1) * qint(D - i) + Q * qint(N - D))


def _a_tilde_closed(N, D, i):
    return (
        (qpow(D + 1) - qpow(i + 1) + 1) * qint(i)
        + qpow(N - D + 1) * qint(i + 1)
        - Q * qint(2 * i + 1)
    ) / (Q - 1)


def cell_sizes(N: int, D: int):
    """|C_i^-| and |C_i^+| from their closed product forms."""
    minus, plus = [], []
    for i in range(D):
        m = qpow(i * (i + 1))
        p = qpow((i + 1) ** 2) * (qpow(N - D) - 1) / (Q - 1)
        for j in range(1, i + 1):
            m = m * (qpow(D - j) - 1) * (qpow(N - D + 1 - j) - 1) / (qpow(j) - 1) ** 2
            p = p * (qpow(D - j) - 1) * (qpow(N - D - j) - 1) / ((qpow(j) - 1) * (qpow(j + 1) - 1))
        minus.append(m)
        plus.append(p)
    return minus, plus


def grassmann_scalars(N: int, D: int) -> GrassmannScalars:
    validate_nd(N, D)
    g = GrassmannScalars(N, D)
    g.a = [_a_closed(N, D, i) for i in range(D + 1)]
    g.b = [qpow(2 * i + 1) * qint(D - i) * qint(N - D - i) for i in range(D + 1)]
    g.c = [qint(i) ** 2 for i in range(D + 1)]
    g.theta = [qpow(i + 1) * qint(D - i) * qint(N - D - i) - qint(i) for i in range(D + 1)]
    den = (Q - 1) * (qpow(D) - 1) * (qpow(N - D) - 1)
    a_star = (qpow(N) - Q) * (2 - qpow(D) - qpow(N - D)) / den
    b_star = (qpow(N) - Q) * (qpow(N) - 1) / den
    g.theta_star = [a_star + b_star * qpow(-i) for i in range(D + 1)]
    g.a_tilde = [_a_tilde_closed(N, D, i) for i in range(D)]
    g.b_tilde = [qpow(2 * i + 2) * qint(D - i - 1) * qint(N - D - i) for i in range(D)]
    g.c_tilde = [qint(i + 1) * qint(i) for i in range(D)]
    den_t = (Q - 1) * (qpow(D) - 1) * (qpow(N - D + 1) - 1)
    g.theta_star_tilde = [
        (qpow(N - 1) - 1) * (Q + Q**2 - qpow(D + 1) - qpow(N - D + 2)) / den_t
        + (qpow(N) - Q) * (qpow(N) - 1) / den_t * qpow(-i)
        for i in range(D)
    ]
    g.n = [qint(i + 1) for i in range(D)]
    g.clique_size = qint(N - D + 1)
    g.num_vertices = gauss_binom(N, D)
    g.tau = -qpow(-(N + 1) / 2)
    g.k = I * qpow((D - N - 1) / 2)
    g.k_prime = I * qpow(-D / 2)
    g.u = qpow(D - N / 2)
    g.cell_minus, g.cell_plus = cell_sizes(N, D)
    return g
