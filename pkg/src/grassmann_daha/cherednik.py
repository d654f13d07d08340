"""The confluent Cherednik algebra H_V acting on W.

W is the span of the cell vectors C_i^-, C_i^+ (0 <= i <= D-1), ordered
C_0^-, C_0^+, C_1^-, C_1^+, ...  The four generators T, T', U, U' act by
block-diagonal matrices; everything else (X, its eigenvectors, the second
basis built from primitive idempotents) is derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from flint import fmpq, fmpq_mat

from .checks import Check, equal_check, zero_check
from .laurent import ZetaLaurent
from .leonard import (
    four_systems,
    module_matrices,
    poly_at_matrix,
    polynomials,
    derive,
    projections,
    standard_bases,
)
from .linalg import Matrix, block_diag
from .qcomb import grassmann_scalars, q_pochhammer, validate_nd
from .scalars import ONE, Q, S, ZERO, as_scalar, eval_at_s, qpow, render

__all__ = [
    "HvContext",
    "Generators",
    "Spectral",
    "hv_context",
    "build_generators",
    "verify_hv_relations",
    "build_spectral",
    "verify_spectral",
    "verify_t_action",
    "verify_projections",
    "dual_basis",
    "expected_in_dual_basis",
    "verify_dual_basis_matrices",
    "verify_nildaha",
    "action_table",
    "table_matrix",
    "verify_action_tables",
    "verify_h_identity",
    "irreducibility_probe",
    "word_span",
    "eigenvalues",
    "omega_closed",
    "inner",
    "cell_weights",
    "laurent_at_matrix",
]


def _m(rows) -> Matrix:
    return Matrix(rows)


@dataclass
class HvContext:
    """Scalars and the small blocks of the four generators."""

    N: int
    D: int
    k: object
    k_prime: object
    u: object
    tau: object
    t: dict = field(default_factory=dict)        # 0..D-1, 2x2
    u_prime: dict = field(default_factory=dict)  # 0..D-1, 2x2
    t_prime: dict = field(default_factory=dict)  # 0..D, 1x1 at the ends
    u_blk: dict = field(default_factory=dict)    # 0..D, 1x1 at the ends


def hv_context(N: int, D: int, uncorrected_u_prime: bool = False) -> HvContext:
    """Scalars and blocks.

    The lower-left entry of u'(i) is q^(-i-1) - 1; both mixed relations
    force this value.  ``uncorrected_u_prime=True`` drops the -1, a variant kept
    only so its failure can be demonstrated.
    """
    validate_nd(N, D)
    g = grassmann_scalars(N, D)
    k, kp, u = g.k, g.k_prime, g.u
    ctx = HvContext(N, D, k, kp, u, g.tau)
    for i in range(D):
        ctx.t[i] = _m([
            [1 - qpow(i + 1) + qpow(N - D + 1), qpow(N - D + 1) * (qpow(D - N + i) - 1)],
            [1 - qpow(i + 1), qpow(i + 1)],
        ]) * k
        low = qpow(-i - 1) if uncorrected_u_prime else qpow(-i - 1) - 1
        ctx.u_prime[i] = _m([[-1, 0], [low, 0]])
    ctx.t_prime[0] = _m([[kp]])
    ctx.t_prime[D] = _m([[kp]])
    ctx.u_blk[0] = _m([[0]])
    ctx.u_blk[D] = _m([[-u.inverse()]])
    for i in range(1, D):
        ctx.t_prime[i] = _m([
            [1 - qpow(i) + qpow(D), qpow(i) - qpow(D)],
            [1 - qpow(i), qpow(i)],
        ]) * kp
        ctx.u_blk[i] = _m([[-1, 1 - qpow(D - i)], [0, 0]]) / u
    return ctx


@dataclass
class Generators:
    ctx: HvContext
    T: Matrix
    Tp: Matrix
    U: Matrix
    Up: Matrix

    @property
    def dim(self):
        return 2 * self.ctx.D

    def as_tuple(self):
        return self.T, self.Tp, self.U, self.Up


def build_generators(N: int, D: int, uncorrected_u_prime: bool = False) -> Generators:
    """T, T', U, U' on W in the cell basis."""
    ctx = hv_context(N, D, uncorrected_u_prime)
    T = block_diag(*(ctx.t[i] for i in range(D)))
    Up = block_diag(*(ctx.u_prime[i] for i in range(D)))
    Tp = block_diag(*(ctx.t_prime[i] for i in range(D + 1)))
    U = block_diag(*(ctx.u_blk[i] for i in range(D + 1)))
    for M in (T, Tp, U, Up):
        assert M.shape == (2 * D, 2 * D)
    return Generators(ctx, T, Tp, U, Up)


def verify_hv_relations(gens: Generators) -> list:
    """The six defining relations and the trace/determinant of each block."""
    ctx = gens.ctx
    T, Tp, U, Up = gens.as_tuple()
    k, kp, u = ctx.k, ctx.k_prime, ctx.u
    out = [
        zero_check("hv.T-quadratic", "hv-relations", (T - k) @ (T + k.inverse())),
        zero_check("hv.Up-quadratic", "hv-relations", Up @ (Up + 1)),
        zero_check("hv.Tp-quadratic", "hv-relations", (Tp - kp) @ (Tp + kp.inverse())),
        zero_check("hv.U-quadratic", "hv-relations", U @ (U + u.inverse())),
        zero_check("hv.TpTUp", "hv-relations", (Tp @ T @ Up) * S - U - u.inverse()),
        zero_check("hv.UTpT", "hv-relations", (U @ Tp @ T) * S - Up - 1),
    ]
    bad = []
    for i, blk in ctx.t.items():
        tr = blk[0, 0] + blk[1, 1]
        det = blk[0, 0] * blk[1, 1] - blk[0, 1] * blk[1, 0]
        if tr != k - k.inverse() or det != -ONE:
            bad.append(f"t({i})")
    for i in range(1, ctx.D):
        blk = ctx.t_prime[i]
        tr = blk[0, 0] + blk[1, 1]
        det = blk[0, 0] * blk[1, 1] - blk[0, 1] * blk[1, 0]
        if tr != kp - kp.inverse() or det != -ONE:
            bad.append(f"t'({i})")
    out.append(Check("hv.block-trace-det", "hv-blocks", not bad, ", ".join(bad) or None))
    return out


# -- spectral data -----------------------------------------------------------


def cell_weights(N: int, D: int) -> list:
    """|C_i^-|, |C_i^+| in cell-basis order."""
    g = grassmann_scalars(N, D)
    return [w for i in range(D) for w in (g.cell_minus[i], g.cell_plus[i])]


def inner(v, w, weights) -> object:
    """<v, w> on W, the restriction of the standard form on the vertex space."""
    total = ZERO
    for a, b, c in zip(v, w, weights):
        if not a.is_zero() and not b.is_zero():
            total = total + a * b.conjugate() * c
    return total


def _lagrange_apply(A: Matrix, theta, i, vec):
    out = list(vec)
    den = ONE
    for j, th in enumerate(theta):
        if j != i:
            out = [x - th * y for x, y in zip(A.apply(out), out)]
            den = den * (theta[i] - th)
    return [x / den for x in out]


def dual_basis(N: int, D: int):
    """The second basis of W as columns of a matrix in cell coordinates.

    Order: E_0 x, then E_i x, E_i u_0 for 1 <= i <= D-1, then E_D x, where
    E_i are the primitive idempotents of A_W and u_0 is the first vector of
    the standard basis of M x-perp.
    """
    A, _, _ = module_matrices(N, D)
    g = grassmann_scalars(N, D)
    n = 2 * D
    x = [ONE] + [ZERO] * (n - 1)
    u0 = standard_bases(N, D)["Phi_perp"][0]
    cols = [_lagrange_apply(A, g.theta, 0, x)]
    for i in range(1, D):
        cols.append(_lagrange_apply(A, g.theta, i, x))
        cols.append(_lagrange_apply(A, g.theta, i, u0))
    cols.append(_lagrange_apply(A, g.theta, D, x))
    return Matrix(cols).transpose()


@dataclass
class Spectral:
    X: Matrix
    X_inv: Matrix
    A: Matrix
    A_star: Matrix
    A_star_tilde: Matrix
    P: Matrix            # dual basis, columns in cell coordinates
    P_inv: Matrix
    lam: dict            # i -> lambda_i, -D <= i <= D-1
    y: dict              # i -> eigenvector in cell coordinates
    y_dual: dict         # i -> eigenvector in dual-basis coordinates
    weights: list
    omega: dict          # from inner products
    omega_vee: dict


def eigenvalues(N: int, D: int) -> dict:
    tau = grassmann_scalars(N, D).tau
    lam = {i: tau * qpow(i) for i in range(D)}
    lam.update({i: tau.inverse() * qpow(i) for i in range(-D, 0)})
    return lam


def _eigvec_coeffs(N, D, i):
    den = (qpow(D) - 1) * (qpow(N - 2 * i + 1) - 1)
    pos = ((qpow(D - i) - 1) * (qpow(N - i + 1) - 1) / den, qpow(D + 1 - i) * (Q - 1) / den)
    neg = (qpow(D - i) * (qpow(i) - 1) * (qpow(N - D - i + 1) - 1) / den, -qpow(D - i + 1) * (Q - 1) / den)
    return pos, neg


def build_spectral(gens: Generators) -> Spectral:
    ctx = gens.ctx
    N, D = ctx.N, ctx.D
    T, Tp, U, Up = gens.as_tuple()
    n = 2 * D
    X = Tp @ T
    X_inv = T.inverse() @ Tp.inverse()
    qk = Q * ctx.k
    A_star = (U @ Tp * S.inverse() + T @ Up) * qk
    A_star_tilde = (U @ Tp * S + T @ Up) * qk
    P = dual_basis(N, D)
    P_inv = P.inverse()
    lam = eigenvalues(N, D)
    y_dual = {}
    e = lambda j: [ONE if r == j else ZERO for r in range(n)]  # noqa: E731
    y_dual[0] = e(0)
    y_dual[-D] = e(n - 1)
    for i in range(1, D):
        (a, b), (c, d) = _eigvec_coeffs(N, D, i)
        y_dual[i] = [a if r == 2 * i - 1 else b if r == 2 * i else ZERO for r in range(n)]
        y_dual[-i] = [c if r == 2 * i - 1 else d if r == 2 * i else ZERO for r in range(n)]
    y = {i: P.apply(v) for i, v in y_dual.items()}
    w = cell_weights(N, D)
    omega = {i: inner(y[i], y[i], w) for i in y}
    omega_vee = {i: inner(y[i], y[-i], w) for i in range(1, D)}
    return Spectral(X, X_inv, X + X_inv, A_star, A_star_tilde, P, P_inv, lam, y, y_dual, w, omega, omega_vee)


def omega_closed(N: int, D: int):
    """Closed forms of |y_i|^2 and <y_i, y_-i>."""
    poch = q_pochhammer
    om, ov = {}, {}
    om[0] = poch(Q, D) / poch(qpow(N - D + 1), D)
    om[-D] = qpow(D) * (qpow(N - 2 * D + 1) - 1) / (qpow(N - D + 1) - 1)
    for i in range(1, D):
        common = poch(qpow(i), D - i) / poch(qpow(N - D + 1), D - i)
        om[i] = (
            (qpow(D - i) - 1) * (qpow(N + 1) + qpow(D) - qpow(D + i) - qpow(i))
            / ((qpow(i) - 1) * (qpow(N - 2 * i + 1) - 1)) * common
        )
        om[-i] = (
            qpow(D + N - 2 * i + 1) * (qpow(N - D - i + 1) - 1) * (qpow(D) - qpow(D - N + i - 1) - qpow(i) + 1)
            / ((qpow(N + 1 - i) - 1) * (qpow(N + 1 - 2 * i) - 1)) * common
        )
        ov[i] = (
            qpow(D) * (1 - qpow(D - i)) * (1 - qpow(N - D - i + 1))
            / (1 - qpow(N - 2 * i + 1)) * common
        )
    return om, ov


def laurent_at_matrix(f: ZetaLaurent, X: Matrix, X_inv: Matrix | None = None) -> Matrix:
    n = X.nrows
    cols = [f.apply(X, [ONE if r == j else ZERO for r in range(n)], X_inv) for j in range(n)]
    return Matrix._raw([list(r) for r in zip(*cols)])


def verify_spectral(gens: Generators, sp: Spectral | None = None) -> list:
    ctx = gens.ctx
    N, D = ctx.N, ctx.D
    n = 2 * D
    sp = sp or build_spectral(gens)
    out = []
    out.append(zero_check("spectral.X-inverse", "x-operator", sp.X @ sp.X_inv - 1))
    want = [ONE] + [qpow(-((j + 1) // 2)) for j in range(1, n)]
    out.append(equal_check("spectral.A*-diagonal", "dual-adjacency-diagonal", sp.A_star, Matrix.diag(want)))
    want_t = [qpow(-(j // 2)) for j in range(n)]
    out.append(equal_check("spectral.A*tilde-diagonal", "dual-adjacency-diagonal", sp.A_star_tilde, Matrix.diag(want_t)))
    lam = sorted(sp.lam.items())
    vals = [v for _, v in lam]
    distinct = all(vals[a] != vals[b] for a in range(len(vals)) for b in range(a))
    out.append(Check("spectral.eigenvalues-distinct", "x-eigenvalues", distinct))
    mu = ZetaLaurent.from_roots(vals)
    out.append(zero_check("spectral.mu-annihilates", "x-minimal-polynomial", laurent_at_matrix(mu, sp.X)))
    proper = []
    for j in range(len(vals)):
        f = ZetaLaurent.from_roots(vals[:j] + vals[j + 1:])
        if laurent_at_matrix(f, sp.X).is_zero():
            proper.append(str(lam[j][0]))
    out.append(Check("spectral.mu-minimal", "x-minimal-polynomial", not proper,
                     f"divisor without root index {','.join(proper)} annihilates" if proper else None))
    bad = [i for i, v in sp.y.items() if sp.X.apply(v) != [sp.lam[i] * x for x in v]]
    out.append(Check("spectral.eigenvectors", "x-eigenvectors", not bad, f"indices {bad}" if bad else None))
    total = [sum((v[r] for v in sp.y.values()), ZERO) for r in range(n)]
    out.append(equal_check("spectral.sum-is-x", "x-eigenvectors", total, [ONE] + [ZERO] * (n - 1)))
    pair = []
    for i in range(1, D):
        s = [a + b for a, b in zip(sp.y_dual[i], sp.y_dual[-i])]
        if s != [ONE if r == 2 * i - 1 else ZERO for r in range(n)]:
            pair.append(i)
    out.append(Check("spectral.pair-sum", "x-eigenvectors", not pair, f"indices {pair}" if pair else None))
    real = all(x.conjugate() == x for v in sp.y.values() for x in v)
    out.append(Check("spectral.real", "x-eigenvectors", real))
    nz = []
    for i in sp.y:
        for j in sp.y:
            val = inner(sp.y[i], sp.y[j], sp.weights)
            if val.is_zero() == (j in (i, -i)):
                nz.append((i, j))
    out.append(Check("spectral.orthogonality-pattern", "x-eigenvector-norms", not nz, f"pairs {nz[:4]}" if nz else None))
    om, ov = omega_closed(N, D)
    badw = [f"omega_{i}" for i in om if om[i] != sp.omega[i]]
    badw += [f"omega_vee_{i}" for i in ov if ov[i] != sp.omega_vee[i]]
    out.append(Check("spectral.norms", "x-eigenvector-norms", not badw, ", ".join(badw) or None))
    return out


# -- the generators A, A*, tilde A* and the projections ---------------------


def verify_t_action(N: int, D: int, gens: Generators | None = None) -> list:
    """A_W, A*_W and tilde A*_W as affine expressions in the H_V operators."""
    gens = gens or build_generators(N, D)
    sp = build_spectral(gens)
    A, Astar, Atil = module_matrices(N, D)
    phi, _, til, _ = four_systems(N, D)
    tau = gens.ctx.tau
    return [
        equal_check("action.A", "adjacency-from-x", sp.A * (tau * phi.b) + phi.a, A),
        equal_check("action.A*", "adjacency-from-x", sp.A_star * phi.b_star + phi.a_star, Astar),
        equal_check("action.A*tilde", "adjacency-from-x", sp.A_star_tilde * til.b_star + til.a_star, Atil),
    ]


def verify_projections(N: int, D: int, gens: Generators | None = None) -> list:
    gens = gens or build_generators(N, D)
    ctx = gens.ctx
    P, Pt = projections(N, D)
    kp, k = ctx.k_prime, ctx.k
    pi = (gens.Tp + kp.inverse()) / (kp + kp.inverse())
    pit = (gens.T + k.inverse()) / (k + k.inverse())
    return [
        equal_check("projection.pi", "projections", pi, P),
        equal_check("projection.pi-tilde", "projections", pit, Pt),
        zero_check("projection.pi-idempotent", "projections", pi @ pi - pi),
        zero_check("projection.pi-tilde-idempotent", "projections", pit @ pit - pit),
    ]


def expected_in_dual_basis(N: int, D: int) -> dict:
    """pi, tilde pi, T, T' and X in the dual basis, from their closed forms."""
    g = grassmann_scalars(N, D)
    k, kp, tau = g.k, g.k_prime, g.tau
    ki = k.inverse()
    one = lambda x: _m([[x]])  # noqa: E731
    pi = [one(1)] + [_m([[1, 0], [0, 0]]) for _ in range(1, D)] + [one(1)]
    dq = qpow(D) - 1
    dn = qpow(N - D + 1) - 1
    pit, T, Tp, X = [one(1)], [one(k)], [one(kp)], [one(tau)]
    for i in range(1, D):
        qi, qd_i, qn_i1, qnd_i1 = qpow(i), qpow(D - i), qpow(N - i + 1), qpow(N - D - i + 1)
        long = (qi - 1) * (qd_i - 1) * (qn_i1 - 1) * (qnd_i1 - 1)
        pit.append(_m([
            [qi * (qd_i - 1) * (qnd_i1 - 1) / (dq * dn), qpow(i - 1) * long / ((Q - 1) * dq * dn)],
            [Q * (Q - 1) / (dn * dq), (qi - 1) * (qn_i1 - 1) / (dn * dq)],
        ]))
        T.append(_m([
            [k * (qpow(N + 1) + qpow(D) - qi - qn_i1) / dq, -k * qpow(i - 1) * long / ((Q - 1) * dq)],
            [-k * Q * (Q - 1) / dq, k * (qn_i1 + qi - qpow(N - D + 1) - 1) / dq],
        ]))
        Tp.append(_m([[kp, 0], [0, -kp.inverse()]]))
        X.append(_m([
            [tau * (qpow(N + 1) - qi + qpow(D) - qpow(N + 1 - i)) / dq,
             tau * (qi - 1) * (qd_i - 1) * (qn_i1 - 1) * (qpow(i - 1) - qpow(N - D)) / ((Q - 1) * dq)],
            [tau * qpow(D + 1) * (1 - Q) / dq,
             tau * (qpow(N + D + 1 - i) + qpow(D + i) - qpow(N + 1) - qpow(D)) / dq],
        ]))
    pit.append(one(0))
    T.append(one(-ki))
    Tp.append(one(kp))
    X.append(one(tau.inverse() * qpow(-D)))
    return {name: block_diag(*blocks) for name, blocks in
            (("pi", pi), ("pi_tilde", pit), ("T", T), ("T_prime", Tp), ("X", X))}


def verify_dual_basis_matrices(N: int, D: int, gens: Generators | None = None) -> list:
    gens = gens or build_generators(N, D)
    P = dual_basis(N, D)
    Pi = P.inverse()
    P_pi, P_pit = projections(N, D)
    ops = {"pi": P_pi, "pi_tilde": P_pit, "T": gens.T, "T_prime": gens.Tp, "X": gens.Tp @ gens.T}
    want = expected_in_dual_basis(N, D)
    out = []
    for name, M in ops.items():
        out.append(equal_check(f"dual-basis.{name}", "dual-basis-matrices", Pi @ M @ P, want[name]))
    # orthogonality of the dual basis itself
    w = cell_weights(N, D)
    cols = [P.col(j) for j in range(P.ncols)]
    off = [(a, b) for a in range(len(cols)) for b in range(a) if not inner(cols[a], cols[b], w).is_zero()]
    out.append(Check("dual-basis.orthogonal", "dual-basis-matrices", not off, f"pairs {off[:4]}" if off else None))
    return out


def verify_nildaha(gens: Generators) -> list:
    ctx = gens.ctx
    T, Tp, U, Up = gens.as_tuple()
    X = Tp @ T
    Xi = X.inverse()
    ui = ctx.u.inverse()
    return [
        zero_check("nildaha.Tp", "nil-daha", X @ T.inverse() - Tp),
        zero_check("nildaha.Up", "nil-daha", Xi @ (U + ui) / S - Up),
        zero_check("nildaha.UX", "nil-daha", (U @ X) * S - Up - 1),
        zero_check("nildaha.U-quadratic", "nil-daha", U @ (U + ui)),
        zero_check("nildaha.T-quadratic", "nil-daha", (T - ctx.k) @ (T + ctx.k.inverse())),
    ]


# -- coefficient tables of X, X^-1 and X + X^-1 on cell vectors --------------


def action_table(N: int, D: int, op: str, i: int, sign: str) -> dict:
    """Image of C_i^sign under op in {'X', 'Xinv', 'A'} as {(j, sign'): coeff}.

    Targets with j = D are kept (the polynomial side needs them); targets with
    j < 0 are dropped.
    """
    tau = grassmann_scalars(N, D).tau
    q = qpow
    if op == "X" and sign == "-":
        t = {
            (i - 1, "+"): (q(i) - q(D)) * (q(N - D + 1) - q(i + 1) + 1),
            (i, "-"): q(i) * (q(N - D + 1) - q(i + 1) + 1),
            (i, "+"): (1 - q(i + 1)) * (q(D) - q(i + 1) + 1),
            (i + 1, "-"): (q(i + 1) - 1) ** 2,
        }
    elif op == "Xinv" and sign == "-":
        t = {
            (i - 1, "-"): (1 - q(i - D)) * (q(N + 1) - q(D + i)),
            (i - 1, "+"): (q(D) - q(i)) * (q(N - D + 1) - q(i) + 1),
            (i, "-"): q(i + 1) * (q(D) - q(i) + 1),
            (i, "+"): (q(i + 1) - 1) * (q(D) - q(i) + 1),
        }
    elif op == "X" and sign == "+":
        t = {
            (i - 1, "+"): q(N + 1) * (q(i - D) - 1) * (q(D - N + i) - 1),
            (i, "-"): q(N - D + 1 + i) * (q(D - N + i) - 1),
            (i, "+"): q(i + 1) * (q(D) - q(i + 1) + 1),
            (i + 1, "-"): q(i + 1) * (1 - q(i + 1)),
        }
    elif op == "Xinv" and sign == "+":
        t = {
            (i, "-"): q(N - D + 2 + i) * (1 - q(D - N + i)),
            (i, "+"): q(i + 1) * (q(N - D + 1) - q(i + 1) + 1),
            (i + 1, "-"): q(i + 2) * (q(i + 1) - 1),
            (i + 1, "+"): (q(i + 1) - 1) * (q(i + 2) - 1),
        }
    elif op == "A" and sign == "-":
        t = {
            (i - 1, "-"): q(2 * i) * (q(D - i) - 1) * (q(N - D - i + 1) - 1),
            (i - 1, "+"): q(2 * i) * (Q - 1) * (q(D - i) - 1),
            (i, "-"): q(i) * (q(N - D + 1) + q(D + 1) - 2 * q(i + 1) + Q + 1),
            (i, "+"): q(i) * (Q - 1) * (q(i + 1) - 1),
            (i + 1, "-"): (q(i + 1) - 1) ** 2,
        }
    elif op == "A" and sign == "+":
        t = {
            (i - 1, "+"): q(2 * i + 1) * (q(D - i) - 1) * (q(N - D - i) - 1),
            (i, "-"): q(2 * i + 1) * (Q - 1) * (q(N - D - i) - 1),
            (i, "+"): q(i + 1) * (q(N - D + 1) + q(D) - 2 * q(i + 1) + 2),
            (i + 1, "-"): q(i + 1) * (Q - 1) * (q(i + 1) - 1),
            (i + 1, "+"): (q(i + 1) - 1) * (q(i + 2) - 1),
        }
    else:
        raise ValueError(f"unknown table {op}{sign}")
    return {key: tau * c for key, c in t.items() if key[0] >= 0 and not c.is_zero()}


def _cell_index(j: int, sign: str) -> int:
    return 2 * j + (sign == "+")


def table_matrix(N: int, D: int, op: str) -> Matrix:
    """The operator assembled column by column from action_table."""
    n = 2 * D
    M = Matrix.zeros(n)
    for i in range(D):
        for sign in "-+":
            for (j, s2), c in action_table(N, D, op, i, sign).items():
                if j < D:
                    M.rows[_cell_index(j, s2)][_cell_index(i, sign)] = c
    return M


def verify_action_tables(N: int, D: int, gens: Generators | None = None) -> list:
    gens = gens or build_generators(N, D)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    return [
        equal_check("tables.X", "x-action-table", table_matrix(N, D, "X"), X),
        equal_check("tables.Xinv", "x-action-table", table_matrix(N, D, "Xinv"), Xi),
        equal_check("tables.A", "x-action-table", table_matrix(N, D, "A"), X + Xi),
        zero_check("tables.X-inverse-product", "x-action-table", gens.T.inverse() @ gens.Tp.inverse() - Xi),
    ]


def verify_h_identity(N: int, D: int, gens: Generators | None = None) -> list:
    """h_i(X) = prefactor_i * v_i(A_W) for each of the four systems."""
    gens = gens or build_generators(N, D)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    A, _, _ = module_matrices(N, D)
    out = []
    for ps in four_systems(N, D):
        ld = derive(ps)
        pf = polynomials(ps, ld)
        Aprime = (X + Xi) * (ps.b * ps.t) + ps.a
        bad = []
        if Aprime != A:
            bad.append("A' != A_W")
        for i in range(ps.d + 1):
            lhs = laurent_at_matrix(pf.h[i], X, Xi)
            rhs = poly_at_matrix(pf.v[i], Aprime) * pf.hprefactor[i]
            if lhs != rhs:
                bad.append(f"i={i}")
        out.append(Check(f"h-identity.{ps.name}", "h-of-x", not bad, ", ".join(bad) or None))
    return out


# -- irreducibility --------------------------------------------------------


def _specialize_complex(M: Matrix, s_value) -> fmpq_mat:
    """Realified specialization: a + bi becomes [[a, -b], [b, a]]."""
    n = M.nrows
    out = fmpq_mat(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            a = M.rows[i][j]
            if a.is_zero():
                continue
            v = eval_at_s(a, s_value)
            re = fmpq(v.re.numerator, v.re.denominator)
            im = fmpq(v.im.numerator, v.im.denominator)
            out[2 * i, 2 * j] = re
            out[2 * i, 2 * j + 1] = -im
            out[2 * i + 1, 2 * j] = im
            out[2 * i + 1, 2 * j + 1] = re
    return out


def _flatten_rows(R: fmpq_mat):
    """Two real rows encoding the complex matrix R (realified) and i*R."""
    m = R.nrows()
    n = m // 2
    re = [R[2 * a, 2 * b] for a in range(n) for b in range(n)]
    im = [R[2 * a + 1, 2 * b] for a in range(n) for b in range(n)]
    return [re + [-x for x in im], im + re]


def word_span(gens, max_len: int | None = None, s_value=Fraction(3, 2)):
    """Span of the words of length <= max_len (default 2 dim W) in the generators.

    ``gens`` is a Generators object or a list of matrices.  Words are grown
    breadth first; only words that enlarge the span are extended.  The rank
    is computed at the specialization s = s_value, a lower bound for the rank
    over Q(i)(s).  Returns (spans_everything, span_dimension, word_length_used).
    """
    mats = list(gens.as_tuple()) if isinstance(gens, Generators) else list(gens)
    n = mats[0].nrows
    if max_len is None:
        max_len = 2 * n
    target = n * n
    spec = [_specialize_complex(M, s_value) for M in mats]
    ident = fmpq_mat(2 * n, 2 * n)
    for r in range(2 * n):
        ident[r, r] = 1
    rows = []
    rank = 0

    def try_add(R):
        nonlocal rows, rank
        cand = rows + _flatten_rows(R)
        mat = fmpq_mat(len(cand), 2 * n * n, [x for r in cand for x in r])
        _, r = mat.rref()
        if r // 2 > rank:
            rows, rank = cand, r // 2
            return True
        return False

    try_add(ident)
    frontier = [ident]
    length = 0
    while frontier and rank < target and length < max_len:
        length += 1
        nxt = []
        for W in frontier:
            for G in spec:
                R = G * W
                if try_add(R):
                    nxt.append(R)
                    if rank == target:
                        break
            if rank == target:
                break
        frontier = nxt
    return rank == target, rank, length


def irreducibility_probe(gens, max_len: int | None = None, s_value=Fraction(3, 2)) -> bool:
    """True when the words span End(W), which forces W to be irreducible.

    False only means the bound was reached without a full span.
    """
    return word_span(gens, max_len, s_value)[0]

