"""Leonard systems of dual q-Hahn type and the four systems living on W.

The module W has ordered basis (C_0^-, C_0^+, ..., C_{D-1}^-, C_{D-1}^+),
cell C_i^sign at index 2i (sign -) or 2i+1 (sign +).  All matrices act on
column coordinate vectors.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .laurent import ZetaLaurent
from .linalg import Matrix, rank_at
from .qcomb import grassmann_scalars, phi32, q_pochhammer, qint, validate_nd
from .scalars import ONE, Q, ZERO, ExactScalar, ScalarError, as_scalar, eval_numeric, qpow, render, specialize_q

__all__ = [
    "ParameterSequence",
    "LeonardData",
    "PolyFamily",
    "DerivationMismatch",
    "derive",
    "four_systems",
    "polynomials",
    "duality_check",
    "module_matrices",
    "module_matrices_from_counts",
    "projections",
    "projection_ranks",
    "standard_bases",
    "check_standard_basis",
    "poly_eval",
    "poly_at_matrix",
    "poly_at_laurent",
    "system_table",
]


class DerivationMismatch(ScalarError):
    """Two independent routes to the same quantity disagree."""


# -- polynomials in lambda as coefficient lists (index = degree) ------------


def _trim(p):
    p = list(p)
    while p and as_scalar(p[-1]).is_zero():
        p.pop()
    return p


def poly_add(p, r):
    n = max(len(p), len(r))
    return _trim([(p[i] if i < len(p) else ZERO) + (r[i] if i < len(r) else ZERO) for i in range(n)])


def poly_scale(p, c):
    return _trim([x * c for x in p])


def poly_mul(p, r):
    if not p or not r:
        return []
    out = [ZERO] * (len(p) + len(r) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(r):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def poly_eval(p, x) -> ExactScalar:
    x = as_scalar(x)
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_at_matrix(p, M: Matrix) -> Matrix:
    n = M.nrows
    acc = Matrix.zeros(n)
    for c in reversed(p):
        acc = acc @ M + Matrix.identity(n) * c
    return acc


def poly_at_laurent(p, lam: ZetaLaurent) -> ZetaLaurent:
    acc = ZetaLaurent()
    for c in reversed(p):
        acc = acc * lam + c
    return acc


# -- parameter sequences ----------------------------------------------------


@dataclass
class ParameterSequence:
    """(a, a*, b, b*, c, r; q, d) with a fixed square root t of c/b."""

    a: ExactScalar
    a_star: ExactScalar
    b: ExactScalar
    b_star: ExactScalar
    c: ExactScalar
    r: ExactScalar
    d: int
    t: ExactScalar
    name: str = "Phi"

    def validate(self):
        for nm in ("b", "b_star", "c", "r"):
            if getattr(self, nm).is_zero():
                raise ValueError(f"{self.name}: parameter {nm} must be nonzero")
        if self.t * self.t != self.c / self.b:
            raise ValueError(f"{self.name}: t^2 != c/b")
        for i in range(1, self.d + 1):
            if self.r * qpow(i) == ONE:
                raise ValueError(f"{self.name}: r q^{i} = 1")
            if self.c / (self.b * self.r) * qpow(i - 1) == ONE:
                raise ValueError(f"{self.name}: c b^-1 r^-1 q^{i - 1} = 1")
        return self


@dataclass
class LeonardData:
    ps: ParameterSequence
    theta: list
    theta_star: list
    varphi: list      # index 1..d, entry 0 unused
    phi: list         # index 1..d, entry 0 unused
    a: list
    b: list
    c: list
    k: list
    m: list

    @property
    def d(self):
        return self.ps.d


def _prod(xs):
    out = ONE
    for x in xs:
        out = out * x
    return out


def derive(ps: ParameterSequence) -> LeonardData:
    """Parameter array, intersection numbers and weights.

    b_i, c_i are computed from their closed forms and again from the split
    sequences; m_i from the closed q-product and from the parameter array.
    Any disagreement raises DerivationMismatch.
    """
    ps.validate()
    d = ps.d
    a, a_s, b, b_s, c, r = ps.a, ps.a_star, ps.b, ps.b_star, ps.c, ps.r
    theta = [a + b * qpow(-i) + c * qpow(i) for i in range(d + 1)]
    ths = [a_s + b_s * qpow(-i) for i in range(d + 1)]
    varphi = [None] + [
        b * b_s * qpow(1 - 2 * i) * (1 - qpow(i)) * (1 - qpow(i - d - 1)) * (1 - r * qpow(i))
        for i in range(1, d + 1)
    ]
    phi = [None] + [
        c * b_s * qpow(d + 1 - 2 * i) * (1 - qpow(i)) * (1 - qpow(i - d - 1)) * (1 - b * r / c * qpow(i - d))
        for i in range(1, d + 1)
    ]
    bb = [b * (1 - qpow(i - d)) * (1 - r * qpow(i + 1)) for i in range(d + 1)]
    cc = [(1 - qpow(i)) * (c - b * r * qpow(i - d)) for i in range(d + 1)]
    for i in range(d):
        alt = varphi[i + 1] * _prod(ths[i] - ths[j] for j in range(i)) / _prod(ths[i + 1] - ths[j] for j in range(i + 1))
        if alt != bb[i]:
            raise DerivationMismatch(f"{ps.name}: b_{i} closed form {render(bb[i])} vs split sequence {render(alt)}")
    for i in range(1, d + 1):
        alt = phi[i] * _prod(ths[i] - ths[j] for j in range(i + 1, d + 1)) / _prod(ths[i - 1] - ths[j] for j in range(i, d + 1))
        if alt != cc[i]:
            raise DerivationMismatch(f"{ps.name}: c_{i} closed form {render(cc[i])} vs split sequence {render(alt)}")
    if not bb[d].is_zero() or not cc[0].is_zero():
        raise DerivationMismatch(f"{ps.name}: boundary b_d or c_0 nonzero")
    aa = [theta[0] - bb[i] - cc[i] for i in range(d + 1)]
    kk = [ONE]
    for i in range(1, d + 1):
        kk.append(kk[-1] * bb[i - 1] / cc[i])
    t2 = ps.t * ps.t
    m = []
    for i in range(d + 1):
        closed = (
            qpow(d - i) * r ** (d - i)
            * q_pochhammer(qpow(i + 1), d - i) * q_pochhammer(t2 * qpow(i) / r, d - i)
            * q_pochhammer(r * Q, i) * (1 - t2 * qpow(2 * i))
            / (q_pochhammer(Q, d - i) * q_pochhammer(t2 * qpow(i), d + 1))
        )
        pa = (
            _prod(varphi[1:i + 1]) * _prod(phi[1:d - i + 1])
            / (_prod(ths[0] - ths[j] for j in range(1, d + 1)) * _prod(theta[i] - theta[j] for j in range(d + 1) if j != i))
        )
        if closed != pa:
            raise DerivationMismatch(f"{ps.name}: m_{i} closed form {render(closed)} vs parameter array {render(pa)}")
        m.append(closed)
    return LeonardData(ps, theta, ths, varphi, phi, aa, bb, cc, kk, m)


def four_systems(N: int, D: int):
    """The systems Phi, Phi-perp, Phi-tilde, Phi-tilde-perp on W.

    Square roots of c/b: tau for Phi and Phi-tilde, tau*q for the two
    perp systems (their b and c are b/q and cq).
    """
    validate_nd(N, D)
    g = grassmann_scalars(N, D)
    den = (Q - 1) * (qpow(D) - 1) * (qpow(N - D) - 1)
    a = (Q - qpow(N - D + 1) - qpow(D + 1) - 1) / (Q - 1) ** 2
    a_s = (qpow(N) - Q) * (2 - qpow(D) - qpow(N - D)) / den
    b = qpow(N + 1) / (Q - 1) ** 2
    b_s = (qpow(N) - Q) * (qpow(N) - 1) / den
    c = ONE / (Q - 1) ** 2
    r = qpow(D - N - 1)
    tau = g.tau
    ratio = (Q - 1) / (qpow(N - D + 1) - 1)
    at_s = a_s + ratio * b_s
    bt_s = (qpow(N - D) - 1) / (qpow(N - D + 1) - 1) * b_s
    phi = ParameterSequence(a, a_s, b, b_s, c, r, D, tau, "Phi")
    perp = ParameterSequence(a, a_s, b / Q, b_s / Q, c * Q, r * Q, D - 2, tau * Q, "Phi_perp")
    til = ParameterSequence(a, at_s, b, bt_s, c, r, D - 1, tau, "Phi_tilde")
    til_perp = ParameterSequence(a, at_s, b / Q, bt_s, c * Q, r * Q, D - 1, tau * Q, "Phi_tilde_perp")
    return tuple(s.validate() for s in (phi, perp, til, til_perp))


@dataclass
class PolyFamily:
    v: list
    f: list
    h: list
    hprefactor: list   # h_i(X) = prefactor_i * v_i(A) on the module


def _lambda_laurent(ps) -> ZetaLaurent:
    return ZetaLaurent({0: ps.a, -1: ps.b * ps.t, 1: ps.c / ps.t})


def polynomials(ps: ParameterSequence, ld: LeonardData) -> PolyFamily:
    """v_i by recurrence, f_i by the closed sum, h_i by two routes."""
    d = ps.d
    v = [[ONE]]
    for i in range(d):
        nxt = poly_mul([-ld.a[i], ONE], v[i])
        if i > 0:
            nxt = poly_add(nxt, poly_scale(v[i - 1], -ld.b[i - 1]))
        v.append(poly_scale(nxt, ld.c[i + 1].inverse()))
    f = []
    for i in range(d + 1):
        closed = []
        lam_part = [ONE]
        th_part = ONE
        phi_part = ONE
        for n in range(i + 1):
            closed = poly_add(closed, poly_scale(lam_part, th_part / phi_part))
            lam_part = poly_mul(lam_part, [-ld.theta[n], ONE])
            th_part = th_part * (ld.theta_star[i] - ld.theta_star[n])
            if n < d:
                phi_part = phi_part * ld.varphi[n + 1]
        rec = poly_scale(v[i], ld.k[i].inverse())
        if _trim(rec) != _trim(closed):
            raise DerivationMismatch(f"{ps.name}: f_{i} recurrence and closed sum disagree")
        f.append(closed)
    lam = _lambda_laurent(ps)
    h = []
    pre = []
    tq = ps.t
    for i in range(d + 1):
        scale = q_pochhammer(ps.r * Q, i) * q_pochhammer(qpow(-d), i) / tq**i
        by_sub = poly_at_laurent(f[i], lam) * scale
        by_sum = _h_by_phi32(ps, i) * scale
        if by_sub != by_sum:
            raise DerivationMismatch(f"{ps.name}: h_{i} substitution and 3phi2 expansion disagree")
        if by_sub.window() != (i, -i) or by_sub[i] != ONE or not by_sub.is_symmetric():
            raise DerivationMismatch(f"{ps.name}: h_{i} is not monic symmetric of window ({i},{-i})")
        h.append(by_sub)
        pre.append(tq**i * q_pochhammer(Q, i) * q_pochhammer(ps.r * qpow(1 - d) / (tq * tq), i))
    return PolyFamily(v, f, h, pre)


def _h_by_phi32(ps, i) -> ZetaLaurent:
    """Terminating 3phi2(q^-i, t/zeta, t zeta; rq, q^-d; q, q) in zeta."""
    t = ps.t
    total = ZetaLaurent.const(ONE)
    top = ZetaLaurent.const(ONE)
    for n in range(i):
        qn = qpow(n)
        top = top * (1 - qpow(-i) * qn)
        top = top * ZetaLaurent({0: ONE, -1: -t * qn}) * ZetaLaurent({0: ONE, 1: -t * qn})
        top = top / ((1 - ps.r * Q * qn) * (1 - qpow(-ps.d) * qn) * (1 - qpow(n + 1)))
        total = total + top * qpow(n + 1)
    return total


def duality_check(ps: ParameterSequence, ld: LeonardData, pf: PolyFamily) -> list:
    """Mismatches between f_i(theta_j), the 3phi2 value and the dual polynomial."""
    d = ps.d
    t2 = ps.t * ps.t
    bad = []
    for i in range(d + 1):
        for j in range(d + 1):
            lhs = poly_eval(pf.f[i], ld.theta[j])
            rhs = phi32(qpow(-i), qpow(-j), t2 * qpow(j), ps.r * Q, qpow(-d), Q, order=min(i, j))
            # dual polynomial f*_j at theta*_i, same parameter array read the other way
            dual = ZERO
            prod = ONE
            for n in range(j + 1):
                dual = dual + prod
                if n < d:
                    prod = prod * (ld.theta[j] - ld.theta[n]) * (ld.theta_star[i] - ld.theta_star[n]) / ld.varphi[n + 1]
            if lhs != rhs or lhs != dual:
                bad.append((i, j, render(lhs), render(rhs), render(dual)))
    return bad


# -- module matrices on W ---------------------------------------------------


def module_matrices(N: int, D: int):
    """A_W, A*_W, tilde A*_W on W from the closed coefficient tables.

    The same A_W is also assembled from the intersection numbers of the graph
    and of the clique; the two constructions must agree.
    """
    validate_nd(N, D)
    g = grassmann_scalars(N, D)
    n = 2 * D
    A = Matrix.zeros(n)

    def put(M, row, col, val):
        if 0 <= row < n:
            M.rows[row][col] = as_scalar(val)

    qi = qint
    for i in range(D):
        m, p = 2 * i, 2 * i + 1
        # image of C_i^-
        put(A, 2 * i - 2, m, qpow(2 * i) * qi(D - i) * qi(N - D + 1 - i))
        put(A, 2 * i - 1, m, qpow(2 * i) * qi(D - i))
        put(A, m, m, Q * qi(D) * qi(N - D) - qpow(2 * i + 1) * qi(D - i) * qi(N - D - i) - qi(i + 1) * qi(i))
        put(A, p, m, qpow(i) * qi(i + 1))
        if i + 1 < D:
            put(A, 2 * i + 2, m, qi(i + 1) ** 2)
        # image of C_i^+
        put(A, 2 * i - 1, p, qpow(2 * i + 1) * qi(D - i) * qi(N - D - i))
        put(A, m, p, qpow(2 * i + 1) * qi(N - D - i))
        put(A, p, p, Q * qi(D) * qi(N - D) - qpow(2 * i + 2) * qi(D - 1 - i) * qi(N - D - i) - qi(i + 1) ** 2)
        if i + 1 < D:
            put(A, 2 * i + 2, p, qpow(i + 1) * qi(i + 1))
            put(A, 2 * i + 3, p, qi(i + 2) * qi(i + 1))
    alt = module_matrices_from_counts(g)
    if alt != A:
        diff = (alt - A).first_nonzero()
        raise DerivationMismatch(f"A_W closed table disagrees with intersection-number form at {diff}")
    Astar = Matrix.diag([g.theta_star[i + s] for i in range(D) for s in (0, 1)])
    Atil = Matrix.diag([g.theta_star_tilde[i] for i in range(D) for _ in (0, 1)])
    return A, Astar, Atil


def module_matrices_from_counts(g) -> Matrix:
    """A_W built from b_i, c_i and the clique numbers."""
    D = g.D
    n = 2 * D
    A = Matrix.zeros(n)
    bt, ct, at = g.b_tilde, g.c_tilde, g.a_tilde
    b, c = g.b, g.c

    def at_(lst, i):
        return lst[i] if 0 <= i < len(lst) else ZERO

    for i in range(D):
        m, p = 2 * i, 2 * i + 1
        col = {
            2 * i - 2: at_(bt, i - 1),
            2 * i - 1: at_(bt, i - 1) - b[i] if i > 0 else ZERO,
            m: at[i] - b[i] + bt[i],
            p: c[i + 1] - ct[i],
            2 * i + 2: c[i + 1],
        }
        for row, val in col.items():
            if 0 <= row < n:
                A.rows[row][m] = val
        col = {
            2 * i - 1: b[i] if i > 0 else ZERO,
            m: b[i] - bt[i],
            p: at[i] - c[i + 1] + ct[i],
            2 * i + 2: at_(ct, i + 1) - c[i + 1] if i + 1 < D else ZERO,
            2 * i + 3: at_(ct, i + 1),
        }
        for row, val in col.items():
            if 0 <= row < n:
                A.rows[row][p] = val
    return A


def projections(N: int, D: int):
    """pi (onto M x) and tilde pi (onto M C) on W."""
    validate_nd(N, D)
    n = 2 * D
    P = Matrix.zeros(n)
    P.rows[0][0] = ONE
    P.rows[n - 1][n - 1] = ONE
    for i in range(1, D):
        plus, minus = 2 * i - 1, 2 * i   # C_{i-1}^+ and C_i^-
        x = (qpow(i) - 1) / (qpow(D) - 1)
        y = (qpow(D) - qpow(i)) / (qpow(D) - 1)
        for row in (plus, minus):
            P.rows[row][plus] = x
            P.rows[row][minus] = y
    Pt = Matrix.zeros(n)
    den = qpow(N - D + 1) - 1
    for i in range(D):
        m, p = 2 * i, 2 * i + 1
        x = (qpow(i + 1) - 1) / den
        y = (qpow(N - D + 1) - qpow(i + 1)) / den
        for row in (m, p):
            Pt.rows[row][m] = x
            Pt.rows[row][p] = y
    return P, Pt


def standard_bases(N: int, D: int):
    """Coordinate vectors of the four standard bases, keyed by system name."""
    n = 2 * D

    def vec(entries):
        v = [ZERO] * n
        for j, val in entries.items():
            if 0 <= j < n:
                v[j] = v[j] + as_scalar(val)
        return v

    return {
        "Phi": [vec({2 * i - 1: ONE, 2 * i: ONE}) for i in range(D + 1)],
        "Phi_perp": [vec({2 * i + 1: qpow(D - i - 1) - 1, 2 * i + 2: qpow(-i - 1) - 1}) for i in range(D - 1)],
        "Phi_tilde": [vec({2 * i: ONE, 2 * i + 1: ONE}) for i in range(D)],
        "Phi_tilde_perp": [vec({2 * i: qpow(N - D - i) - 1, 2 * i + 1: qpow(-i - 1) - 1}) for i in range(D)],
    }


def check_standard_basis(A: Matrix, Astar: Matrix, vectors, ld: LeonardData) -> list:
    """A acts three-term on the vectors with the system's intersection numbers,
    the dual operator acts diagonally by theta*_i, and the sum of the vectors
    is a theta_0 eigenvector of A."""
    d = ld.d
    bad = []
    n = len(vectors[0])
    for i in range(d + 1):
        lhs = A.apply(vectors[i])
        rhs = [ld.a[i] * x for x in vectors[i]]
        if i > 0:
            rhs = [r + ld.b[i - 1] * x for r, x in zip(rhs, vectors[i - 1])]
        if i < d:
            rhs = [r + ld.c[i + 1] * x for r, x in zip(rhs, vectors[i + 1])]
        if lhs != rhs:
            bad.append(f"{ld.ps.name}: A on standard vector {i}")
        if Astar.apply(vectors[i]) != [ld.theta_star[i] * x for x in vectors[i]]:
            bad.append(f"{ld.ps.name}: dual operator on standard vector {i}")
    total = [sum((v[j] for v in vectors), ZERO) for j in range(n)]
    if A.apply(total) != [ld.theta[0] * x for x in total]:
        bad.append(f"{ld.ps.name}: sum of standard vectors is not a theta_0 eigenvector")
    return bad


def projection_ranks(N: int, D: int, s_value=None):
    P, Pt = projections(N, D)
    kw = {} if s_value is None else {"s_value": s_value}
    return rank_at(P.transpose().rows, **kw), rank_at(Pt.transpose().rows, **kw)


# -- tables -----------------------------------------------------------------


def system_table(ld: LeonardData, q=None) -> list:
    """Rows of (quantity, index, symbolic value, value at q) for one system."""
    rows = []

    def val(x):
        if q is None:
            return ""
        try:
            return str(specialize_q(x, q))
        except ScalarError:
            z = eval_numeric(x, q)
            return f"~{z.real:.12g}" if abs(z.imag) < 1e-15 else f"~{z:.12g}"

    for nm, seq, start in (
        ("theta", ld.theta, 0),
        ("theta_star", ld.theta_star, 0),
        ("varphi", ld.varphi, 1),
        ("phi", ld.phi, 1),
        ("b", ld.b, 0),
        ("c", ld.c, 0),
        ("m", ld.m, 0),
    ):
        for i in range(start, len(seq)):
            rows.append({"quantity": nm, "i": i, "symbolic": render(seq[i]), "numeric": val(seq[i])})
    return rows


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else ["quantity"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def table_json(rows) -> str:
    return json.dumps(rows, sort_keys=True, indent=1)
