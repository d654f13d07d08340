"""Non-symmetric dual q-Hahn Laurent polynomials attached to J_q(N, D).

The 2D polynomials l_i^-, l_i^+ (0 <= i <= D-1) form a basis of
L = span{zeta^-D, ..., zeta^(D-1)} and satisfy C_i^sign = l_i^sign(X) x on
W.  They are built twice (from the families of M x and of M C), expanded
against X and X^-1, and shown orthogonal for a Hermitian form on L whose
nodes are the eigenvalues of X.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .checks import Check, equal_check, zero_check
from .cherednik import (
    Generators,
    action_table,
    build_generators,
    build_spectral,
    cell_weights,
    eigenvalues,
    inner,
    laurent_at_matrix,
    omega_closed,
)
from .laurent import ZETA, ZetaLaurent
from .leonard import derive, four_systems, polynomials, standard_bases
from .linalg import Matrix
from .qcomb import grassmann_scalars, q_pochhammer, validate_nd
from .scalars import ONE, Q, ZERO, as_scalar, eval_numeric, qpow, render, specialize_q

__all__ = [
    "Auxiliaries",
    "NonSymFamily",
    "HermitianForm",
    "FamilyMismatch",
    "build_auxiliaries",
    "build_family",
    "verify_family",
    "verify_module_realization",
    "expand",
    "recurrence_tables",
    "verify_recurrences",
    "regenerate_by_recurrence",
    "build_form",
    "gram_matrix",
    "verify_orthogonality",
    "quadrature_check",
    "basis_matrix",
]

SIGNS = ("-", "+")


class FamilyMismatch(ArithmeticError):
    pass


@dataclass
class Auxiliaries:
    p_perp: ZetaLaurent
    p_tilde: ZetaLaurent
    p_tilde_perp: ZetaLaurent
    h_perp_last: ZetaLaurent   # h-perp of index D-1
    mu: ZetaLaurent


def build_auxiliaries(N: int, D: int) -> Auxiliaries:
    validate_nd(N, D)
    tau = grassmann_scalars(N, D).tau
    ti = tau.inverse()
    p_perp = ZetaLaurent.from_roots([tau, ti * qpow(-D)], shift=-1)
    p_tilde = ZetaLaurent.from_roots([ti * qpow(-D)], shift=-1)
    p_tilde_perp = ZetaLaurent.from_roots([tau], shift=-1)
    roots = []
    for j in range(1, D):
        roots += [tau * qpow(j), ti * qpow(-j)]
    h_last = ZetaLaurent.from_roots(roots, shift=1 - D)
    mu = (p_perp * h_last).shift(D)
    return Auxiliaries(p_perp, p_tilde, p_tilde_perp, h_last, mu)


@dataclass
class NonSymFamily:
    N: int
    D: int
    minus: list          # l_i^-, 0 <= i <= D-1
    plus: list           # l_i^+
    minus_D: ZetaLaurent
    plus_D: ZetaLaurent
    aux: Auxiliaries
    minus_tilde: list = field(default_factory=list)
    plus_tilde: list = field(default_factory=list)

    def get(self, i: int, sign: str) -> ZetaLaurent:
        if i < 0:
            return ZetaLaurent()
        if i == self.D:
            return self.minus_D if sign == "-" else self.plus_D
        return (self.minus if sign == "-" else self.plus)[i]

    def basis(self) -> list:
        """l_0^-, l_0^+, l_1^-, ... in cell order."""
        return [self.get(i, s) for i in range(self.D) for s in SIGNS]


def _h_families(N, D):
    out = {}
    for ps in four_systems(N, D):
        out[ps.name] = polynomials(ps, derive(ps)).h
    return out


def build_family(N: int, D: int, strict: bool = True) -> NonSymFamily:
    """Both constructions of l_i^sign; with ``strict`` they must coincide."""
    g = grassmann_scalars(N, D)
    tau = g.tau
    aux = build_auxiliaries(N, D)
    hs = _h_families(N, D)
    h, hp, ht, htp = hs["Phi"], hs["Phi_perp"], hs["Phi_tilde"], hs["Phi_tilde_perp"]
    hp = list(hp) + [aux.h_perp_last]
    pp, pt, ptp = aux.p_perp, aux.p_tilde, aux.p_tilde_perp
    qq = lambda n: q_pochhammer(Q, n)  # noqa: E731
    qD = qpow(D)
    minus, plus = [], []
    for i in range(D):
        pre = (qD - qpow(i)) / (tau**i * (qD - 1) * qq(i) ** 2)
        body = h[i]
        if i > 0:
            body = body - pp * hp[i - 1] * ((1 - qpow(i)) / (qD - qpow(i)))
        minus.append(body * pre)
        pre = (qpow(i + 1) - 1) / (tau ** (i + 1) * (qD - 1) * qq(i + 1) ** 2)
        plus.append((h[i + 1] - pp * hp[i]) * pre)
    tail = pp * aux.h_perp_last
    minus_D = tail / (tau**D * qq(D) ** 2)
    plus_D = ZetaLaurent({0: tau * qpow(D + 1), -1: -ONE}) * tail / (tau ** (D + 1) * qq(D) * qq(D + 1))
    qn = qpow(N - D + 1)
    mt, pl = [], []
    for i in range(D):
        mt.append((pt * ht[i] - ptp * htp[i] * qn) / (tau**i * (1 - qn) * qq(i) ** 2))
        ratio = (1 - qpow(D - N + i)) / (1 - qpow(i + 1))
        pl.append((pt * ht[i] * ratio - ptp * htp[i]) * (qn / (tau**i * (qn - 1) * qq(i) ** 2)))
    fam = NonSymFamily(N, D, minus, plus, minus_D, plus_D, aux, mt, pl)
    if strict:
        bad = _tilde_disagreements(fam)
        if bad:
            raise FamilyMismatch("the two constructions differ at " + ", ".join(bad))
    return fam


def _tilde_disagreements(fam: NonSymFamily) -> list:
    bad = []
    for i in range(fam.D):
        if fam.minus[i] != fam.minus_tilde[i]:
            bad.append(f"l_{i}^-")
        if fam.plus[i] != fam.plus_tilde[i]:
            bad.append(f"l_{i}^+")
    return bad


def basis_matrix(fam: NonSymFamily) -> Matrix:
    """Coefficients of the l's on zeta^-D .. zeta^(D-1); column per polynomial."""
    D = fam.D
    exps = range(-D, D)
    return Matrix([[f[e] for f in fam.basis()] for e in exps])


def verify_family(fam: NonSymFamily) -> list:
    D = fam.D
    out = []
    bad = _tilde_disagreements(fam)
    out.append(Check("family.two-constructions", "nonsym-definition", not bad, ", ".join(bad) or None))
    wins = []
    for i in range(D):
        if fam.minus[i].window() != (i, -i):
            wins.append(f"l_{i}^- {fam.minus[i].window()}")
        if fam.plus[i].window() != (i, -i - 1):
            wins.append(f"l_{i}^+ {fam.plus[i].window()}")
    out.append(Check("family.degree-windows", "nonsym-degrees", not wins, "; ".join(wins) or None))
    try:
        basis_matrix(fam).inverse()
        ok, w = True, None
    except ZeroDivisionError:
        ok, w = False, "coefficient matrix is singular"
    out.append(Check("family.basis-of-L", "nonsym-degrees", ok, w))
    out.append(equal_check("family.l0-minus-is-one", "nonsym-definition", fam.minus[0], ZetaLaurent.const(ONE)))
    aux = fam.aux
    lam = list(eigenvalues(fam.N, D).values())
    out.append(equal_check("aux.mu-roots", "x-minimal-polynomial", aux.mu, ZetaLaurent.from_roots(lam)))
    out.append(equal_check("aux.mu-polynomial", "x-minimal-polynomial", (aux.mu.degree, aux.mu.low_degree), (2 * D, 0)))
    out.append(equal_check("aux.p-tilde-product", "nonsym-auxiliaries", aux.p_tilde * aux.p_tilde_perp, aux.p_perp.shift(-1)))
    out.append(equal_check("aux.h-perp-symmetric", "nonsym-auxiliaries", aux.h_perp_last, aux.h_perp_last.reflect()))
    return out


def verify_module_realization(N: int, D: int, fam: NonSymFamily | None = None,
                              gens: Generators | None = None) -> list:
    """C_i^sign = l_i^sign(X) x, plus the auxiliary actions on x."""
    fam = fam or build_family(N, D)
    gens = gens or build_generators(N, D)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    n = 2 * D
    x = [ONE] + [ZERO] * (n - 1)
    e = lambda j: [ONE if r == j else ZERO for r in range(n)]  # noqa: E731
    out = []
    bad = []
    for i in range(D):
        for si, sign in enumerate(SIGNS):
            if fam.get(i, sign).apply(X, x, Xi) != e(2 * i + si):
                bad.append(f"l_{i}^{sign}")
    out.append(Check("realization.cells", "cells-from-x", not bad, ", ".join(bad) or None))
    bnd = [nm for nm, f in (("l_D^-", fam.minus_D), ("l_D^+", fam.plus_D)) if any(not a.is_zero() for a in f.apply(X, x, Xi))]
    out.append(Check("realization.boundary-vanish", "cells-from-x", not bnd, ", ".join(bnd) or None))
    tau = gens.ctx.tau
    aux = fam.aux
    sb = standard_bases(N, D)
    u0 = sb["Phi_perp"][0]
    ut0 = sb["Phi_tilde_perp"][0]
    chat = [ONE, ONE] + [ZERO] * (n - 2)
    out.append(equal_check("realization.p-perp", "nonsym-auxiliaries", aux.p_perp.apply(X, x, Xi),
                           [tau * Q * (1 - Q) * a for a in u0]))
    out.append(equal_check("realization.p-tilde", "nonsym-auxiliaries", aux.p_tilde.apply(X, x, Xi),
                           [(1 - Q) * a for a in chat]))
    out.append(equal_check("realization.p-tilde-perp", "nonsym-auxiliaries", aux.p_tilde_perp.apply(X, x, Xi),
                           [qpow(D - N) * a for a in ut0]))
    H = laurent_at_matrix(aux.h_perp_last, X, Xi)
    kill = [j for j, v in enumerate(sb["Phi_perp"]) if any(not a.is_zero() for a in H.apply(v))]
    out.append(Check("realization.h-perp-kills", "nonsym-auxiliaries", not kill, f"u-perp {kill}" if kill else None))
    return out


# -- expansions against X and X^-1 ------------------------------------------


def _expansion_basis(fam: NonSymFamily):
    keys = [(i, s) for i in range(fam.D + 1) for s in SIGNS]
    exps = list(range(-fam.D - 1, fam.D + 1))
    M = Matrix([[fam.get(i, s)[e] for (i, s) in keys] for e in exps])
    return keys, exps, M.inverse()


def expand(f: ZetaLaurent, fam: NonSymFamily, _cache=None) -> dict:
    """Coordinates of f in {l_j^sign : 0 <= j <= D}.  f must lie in their span."""
    keys, exps, Minv = _cache or _expansion_basis(fam)
    if f.coeffs and (f.degree > exps[-1] or f.low_degree < exps[0]):
        raise ValueError(f"window {f.window()} outside the span")
    coords = Minv.apply([f[e] for e in exps])
    return {k: c for k, c in zip(keys, coords) if not c.is_zero()}


def recurrence_tables(N: int, D: int, fam: NonSymFamily | None = None) -> dict:
    """The four tables zeta^(+-1) l_i^sign, each as {(i, sign): {(j, sign'): coeff}}."""
    fam = fam or build_family(N, D)
    cache = _expansion_basis(fam)
    tables = {}
    for op, shift in (("X", 1), ("Xinv", -1)):
        for sign in SIGNS:
            tables[op + sign] = {
                (i, sign): expand(fam.get(i, sign).shift(shift), fam, cache) for i in range(D)
            }
    return tables


def verify_recurrences(N: int, D: int, fam: NonSymFamily | None = None) -> list:
    fam = fam or build_family(N, D)
    tau = grassmann_scalars(N, D).tau
    tables = recurrence_tables(N, D, fam)
    out = []
    for name, table in sorted(tables.items()):
        op, sign = name[:-1], name[-1]
        bad = []
        for i in range(D):
            got = table[(i, sign)]
            want = action_table(N, D, op, i, sign)
            if got != want:
                extra = sorted(set(got) ^ set(want))
                diff = [k for k in set(got) & set(want) if got[k] != want[k]]
                bad.append(f"i={i} keys {extra} values {diff}")
        out.append(Check(f"recurrence.{name}", "recurrence-tables", not bad, "; ".join(bad) or None))
    # the three boundary statements, each as an explicit congruence modulo L
    qD = qpow(D)
    mD, pD = fam.minus_D, fam.plus_D
    last_m, last_p = fam.minus[D - 1], fam.plus[D - 1]
    cases = {
        "zeta l_(D-1)^-": last_m.shift(1) - mD * (tau * (1 - qD) ** 2),
        "zeta l_(D-1)^+": last_p.shift(1) - mD * (tau * qD * (1 - qD)),
        "zeta^-1 l_(D-1)^+": last_p.shift(-1) - mD * (tau * qpow(D + 1) * (qD - 1))
        - pD * (tau * (qD - 1) * (qpow(D + 1) - 1)),
    }
    for nm, r in cases.items():
        ok = r.is_zero() or (r.degree <= D - 1 and r.low_degree >= -D)
        out.append(Check(f"recurrence.boundary {nm}", "recurrence-boundary", ok,
                         None if ok else f"remainder window {r.window()}"))
    regen = regenerate_by_recurrence(N, D)
    bad = [f"l_{i}^{s}" for i in range(D + 1) for s in SIGNS if regen[(i, s)] != fam.get(i, s)]
    out.append(Check("recurrence.transfer", "recurrence-tables", not bad, ", ".join(bad) or None))
    return out


def regenerate_by_recurrence(N: int, D: int) -> dict:
    """Rebuild every l from l_0^- = 1 using only the coefficient tables.

    zeta^-1 l_i^- involves l_i^+ as its only new term, and zeta l_i^- then
    involves l_(i+1)^- as its only new term.
    """
    got = {(0, "-"): ZetaLaurent.const(ONE)}

    def known_part(tab, skip):
        acc = ZetaLaurent()
        for key, c in tab.items():
            if key != skip:
                acc = acc + got[key] * c
        return acc

    for i in range(D):
        tab = action_table(N, D, "Xinv", i, "-")
        key = (i, "+")
        got[key] = (got[(i, "-")].shift(-1) - known_part(tab, key)) / tab[key]
        tab = action_table(N, D, "X", i, "-")
        key = (i + 1, "-")
        got[key] = (got[(i, "-")].shift(1) - known_part(tab, key)) / tab[key]
    tab = action_table(N, D, "Xinv", D - 1, "+")
    key = (D, "+")
    got[key] = (got[(D - 1, "+")].shift(-1) - known_part(tab, key)) / tab[key]
    return got


# -- the Hermitian form and orthogonality ------------------------------------


@dataclass
class HermitianForm:
    D: int
    lam: dict
    omega: dict
    omega_vee: dict

    def __call__(self, f: ZetaLaurent, g: ZetaLaurent):
        fv = {i: f(l) for i, l in self.lam.items()}
        gv = {i: g(l).conjugate() for i, l in self.lam.items()}
        return self.from_values(fv, gv)

    def from_values(self, fv: dict, gv_conj: dict):
        total = ZERO
        for i, w in self.omega.items():
            total = total + fv[i] * gv_conj[i] * w
        for i, w in self.omega_vee.items():
            total = total + (fv[i] * gv_conj[-i] + fv[-i] * gv_conj[i]) * w
        return total


def build_form(N: int, D: int, gens: Generators | None = None, check: bool = True):
    """The form with closed-form weights; with ``check`` the weights are also
    recomputed as inner products of eigenvectors of X and compared."""
    om, ov = omega_closed(N, D)
    form = HermitianForm(D, eigenvalues(N, D), om, ov)
    checks = []
    if check:
        sp = build_spectral(gens or build_generators(N, D))
        bad = [f"omega_{i}" for i in om if om[i] != sp.omega[i]]
        bad += [f"omega_vee_{i}" for i in ov if ov[i] != sp.omega_vee[i]]
        nz = [i for i, w in list(om.items()) + list(ov.items()) if w.is_zero()]
        real = all(w.conjugate() == w for w in list(om.values()) + list(ov.values()))
        checks.append(Check("form.weights", "hermitian-form", not bad, ", ".join(bad) or None))
        checks.append(Check("form.weights-nonzero-real", "hermitian-form", not nz and real))
    return form, checks


def gram_matrix(form: HermitianForm, fam: NonSymFamily) -> Matrix:
    basis = fam.basis()
    vals = [{i: f(l) for i, l in form.lam.items()} for f in basis]
    conj = [{i: v.conjugate() for i, v in d.items()} for d in vals]
    return Matrix([[form.from_values(vals[a], conj[b]) for b in range(len(basis))] for a in range(len(basis))])


def verify_orthogonality(N: int, D: int, q: int | None = None, counted_sizes=None,
                         fam: NonSymFamily | None = None, form: HermitianForm | None = None) -> list:
    """Gram matrix of the l's equals the diagonal of cell sizes.

    With ``q`` the exact Gram matrix is also specialized at that q and, as an
    independent route, evaluated in floating point; ``counted_sizes`` (cell
    sizes from an enumeration) are compared with both.
    """
    fam = fam or build_family(N, D)
    if form is None:
        form, _ = build_form(N, D, check=False)
    G = gram_matrix(form, fam)
    want = Matrix.diag(cell_weights(N, D))
    out = [equal_check("orthogonality.gram", "orthogonality", G, want)]
    if q is not None:
        spec = [[specialize_q(a, q) for a in r] for r in G.rows]
        sizes = counted_sizes or [specialize_q(w, q) for w in cell_weights(N, D)]
        n = len(sizes)
        bad = [(a, b) for a in range(n) for b in range(n) if spec[a][b] != (sizes[a] if a == b else 0)]
        out.append(Check(f"orthogonality.gram-at-q={q}", "orthogonality", not bad,
                         f"entries {bad[:4]}" if bad else None))
        num = _numeric_gram(form, fam, q)
        badn = [(a, b) for a in range(n) for b in range(n)
                if abs(num[a][b] - (complex(sizes[a]) if a == b else 0)) > 1e-6 * max(1.0, abs(complex(sizes[a])))]
        out.append(Check(f"orthogonality.gram-float-q={q}", "orthogonality", not badn,
                         f"entries {badn[:4]}" if badn else None))
    return out


def _numeric_gram(form: HermitianForm, fam: NonSymFamily, q) -> list:
    lam = {i: eval_numeric(l, q) for i, l in form.lam.items()}
    om = {i: eval_numeric(w, q) for i, w in form.omega.items()}
    ov = {i: eval_numeric(w, q) for i, w in form.omega_vee.items()}
    polys = [{e: eval_numeric(c, q) for e, c in f.coeffs.items()} for f in fam.basis()]
    vals = [{i: sum(c * l**e for e, c in p.items()) for i, l in lam.items()} for p in polys]
    n = len(vals)
    G = [[0j] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            fv, gv = vals[a], vals[b]
            t = sum(fv[i] * gv[i].conjugate() * w for i, w in om.items())
            t += sum((fv[i] * gv[-i].conjugate() + fv[-i] * gv[i].conjugate()) * w for i, w in ov.items())
            G[a][b] = t.real if abs(t.imag) < 1e-9 * max(1.0, abs(t)) else t
    return G


def quadrature_check(N: int, D: int, pairs: int = 200, seed: int = 0,
                     form: HermitianForm | None = None, gens: Generators | None = None) -> Check:
    """<f, g>_L = <f(X) x, g(X) x>_W for random f, g in L with small integer
    coefficients, exactly."""
    gens = gens or build_generators(N, D)
    if form is None:
        form, _ = build_form(N, D, gens, check=False)
    X = gens.Tp @ gens.T
    Xi = X.inverse()
    n = 2 * D
    w = cell_weights(N, D)
    exps = list(range(-D, D))
    x = [ONE] + [ZERO] * (n - 1)
    vecs = {}
    cur = x
    for e in range(0, D):
        vecs[e] = cur
        cur = X.apply(cur)
    cur = x
    for e in range(1, D + 1):
        cur = Xi.apply(cur)
        vecs[-e] = cur
    lam_pow = {i: {e: l**e if e >= 0 else l.inverse() ** (-e) for e in exps} for i, l in form.lam.items()}
    rng = random.Random(seed)
    bad = []
    for t in range(pairs):
        cf = {e: rng.randint(-3, 3) for e in exps}
        cg = {e: rng.randint(-3, 3) for e in exps}
        fv = {i: sum((lp[e] * c for e, c in cf.items() if c), ZERO) for i, lp in lam_pow.items()}
        gv = {i: sum((lp[e] * c for e, c in cg.items() if c), ZERO).conjugate() for i, lp in lam_pow.items()}
        lhs = form.from_values(fv, gv)
        fx = [sum((vecs[e][r] * c for e, c in cf.items() if c), ZERO) for r in range(n)]
        gx = [sum((vecs[e][r] * c for e, c in cg.items() if c), ZERO) for r in range(n)]
        rhs = inner(fx, gx, w)
        if lhs != rhs:
            bad.append(t)
    return Check("orthogonality.quadrature", "hermitian-form", not bad,
                 f"{len(bad)} of {pairs} pairs differ, first {bad[0]}" if bad else None,
                 extra={"pairs": pairs, "seed": seed})
