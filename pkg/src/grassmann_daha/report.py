"""Verification suites, report assembly and table emission."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import cherednik as hv
from . import geometry as geo
from . import leonard as ls
from . import nonsym as ns
from .checks import Check, equal_check
from .fields import MAX_Q, prime_power
from .qcomb import gauss_binom, grassmann_scalars, validate_nd
from .scalars import ONE, ScalarError, eval_numeric, render, specialize_q

__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "UsageError",
    "RunConfig",
    "Report",
    "validate_config",
    "run",
    "render_report",
    "emit_tables",
    "graph_info",
]

SCHEMA_VERSION = 1
SUITES = ("graph", "leonard", "hv", "nonsym")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = "symbolic"
    q: int | None = None
    N: int = 6
    D: int = 3
    suites: tuple = SUITES
    seed: int = 0
    output: str | None = None
    format: str = "text"
    cache_dir: str | None = None
    timing: bool = False
    budget: int = geo.DEFAULT_BUDGET
    pairs: int = 200


def parse_suites(text: str) -> tuple:
    if text is None or text.strip() == "":
        return ()
    names = [t.strip() for t in text.split(",") if t.strip()]
    if "all" in names:
        return SUITES
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}, all")
    return tuple(s for s in SUITES if s in names)


def validate_config(cfg: RunConfig) -> RunConfig:
    if cfg.mode not in ("symbolic", "numeric"):
        raise UsageError(f"mode must be symbolic or numeric, got {cfg.mode}")
    if cfg.format not in ("json", "csv", "text"):
        raise UsageError(f"format must be json, csv or text, got {cfg.format}")
    try:
        validate_nd(cfg.N, cfg.D)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if cfg.mode == "numeric":
        if cfg.q is None:
            raise UsageError("numeric mode needs --q")
        if prime_power(cfg.q) is None:
            raise UsageError(f"{cfg.q} is not a prime power")
        if cfg.q > MAX_Q:
            raise UsageError(f"q = {cfg.q} exceeds the supported limit {MAX_Q}")
        size = geo.count_subspaces(cfg.q, cfg.N, cfg.D)
        if "graph" in cfg.suites and size > cfg.budget:
            raise UsageError(f"[{cfg.N},{cfg.D}]_{cfg.q} = {size} vertices exceeds the budget {cfg.budget}")
    if cfg.pairs < 0:
        raise UsageError("pairs must be nonnegative")
    return cfg


@dataclass
class Report:
    config: RunConfig
    checks: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def as_dict(self, timing: bool = False) -> dict:
        cfg = asdict(self.config)
        cfg["suites"] = list(cfg["suites"])
        for k in ("output", "cache_dir", "timing"):
            cfg.pop(k, None)
        checks = []
        for c in self.checks:
            d = c.as_dict()
            if not timing:
                d.pop("seconds")
            checks.append(d)
        counts = {s: sum(c.status == s for c in self.checks) for s in ("pass", "fail", "skipped")}
        return {
            "schemaVersion": SCHEMA_VERSION,
            "config": cfg,
            "info": self.info,
            "checks": checks,
            "summary": counts,
        }


def _timed(suite_checks: list, fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    dt = time.perf_counter() - t0
    if isinstance(out, Check):
        out = [out]
    for c in out:
        c.seconds = dt / len(out) if out else 0.0
    suite_checks.extend(out)
    return out


def _guard(checks: list, cid: str, anchor: str, fn, *args, **kw):
    """Run fn; an exception becomes a failed check instead of a crash."""
    try:
        return _timed(checks, fn, *args, **kw)
    except (ArithmeticError, ValueError, AssertionError, geo.NotEquitable) as e:
        checks.append(Check(cid, anchor, False, f"{type(e).__name__}: {e}"))
        return None


# -- suites -----------------------------------------------------------------


def _spec_list(xs, q):
    return [specialize_q(x, q) for x in xs]


def suite_graph(cfg: RunConfig, info: dict) -> list:
    out = []
    if cfg.mode != "numeric":
        out.append(Check("graph", "graph-ground-truth", True, "symbolic mode: no graph is built", skipped=True))
        return out
    q, N, D = cfg.q, cfg.N, cfg.D
    t0 = time.perf_counter()
    g = geo.GrassmannGraph(q, N, D, cfg.budget)
    x, H = geo.default_base_pair(g)
    clique = geo.build_delsarte_clique(x, H)
    part = geo.classify(g, x, clique, H)
    sc = grassmann_scalars(N, D)
    out.append(equal_check("graph.vertex-count", "graph-ground-truth", g.num_vertices, int(specialize_q(gauss_binom(N, D), q).re)))
    out.append(equal_check("graph.clique-size", "graph-ground-truth", len(clique), int(specialize_q(sc.clique_size, q).re)))
    want_sizes = [specialize_q(w, q) for w in hv.cell_weights(N, D)]
    out.append(equal_check("graph.cell-sizes", "cell-sizes", part.cell_sizes, want_sizes))
    radius = int(part.dist_clique.max())
    out.append(equal_check("graph.covering-radius", "graph-ground-truth", radius, D - 1))
    info["graph"] = {
        "vertices": g.num_vertices,
        "clique": len(clique),
        "cells": {geo.cell_label(j): int(n) for j, n in enumerate(part.cell_sizes)},
    }
    cache = None
    if cfg.cache_dir is not None:
        cache = Path(cfg.cache_dir)
        labels = geo.load_partition_labels(g, x, H, cache)
        if labels is None:
            geo.save_partition(part, cache)
            info["cache"] = "written"
        else:
            same = bool((labels == part.labels).all())
            info["cache"] = "reused" if same else "stale"
            out.append(Check("graph.cache-consistent", "cache", same, None if same else "cached labels differ"))
            if not same:
                geo.save_partition(part, cache)
    nums = geo.empirical_intersection_numbers(part)
    out.append(Check("graph.equitable", "graph-ground-truth", not nums.discrepancies,
                     "; ".join(nums.discrepancies[:3]) or None))
    for name, got, want in (
        ("a", nums.a, sc.a), ("b", nums.b, sc.b), ("c", nums.c, sc.c),
        ("a_tilde", nums.a_tilde, sc.a_tilde), ("b_tilde", nums.b_tilde, sc.b_tilde),
        ("c_tilde", nums.c_tilde, sc.c_tilde), ("n", nums.n, sc.n),
    ):
        out.append(equal_check(f"graph.{name}", "intersection-numbers", got, _spec_list(want, q)))
    try:
        A, As, At = geo.quotient_matrices(part, nums)
        SA, SAs, SAt = ls.module_matrices(N, D)
        for name, got, sym in (("A", A, SA), ("A*", As, SAs), ("A*tilde", At, SAt)):
            want = [[specialize_q(a, q) for a in r] for r in sym.rows]
            bad = [(i, j) for i in range(2 * D) for j in range(2 * D) if want[i][j] != got[i][j]]
            out.append(Check(f"graph.quotient-{name}", "quotient-matrix", not bad,
                             f"entries {bad[:4]}" if bad else None))
    except (geo.NotEquitable, ValueError) as e:
        out.append(Check("graph.quotient", "quotient-matrix", False, str(e)))
    dt = time.perf_counter() - t0
    for c in out:
        c.seconds = dt / len(out)
    info["graph_seconds"] = round(dt, 3) if cfg.timing else None
    info["counted_cell_sizes"] = [int(n) for n in part.cell_sizes]
    return out


def suite_leonard(cfg: RunConfig, info: dict) -> list:
    N, D = cfg.N, cfg.D
    out = []
    try:
        pss = ls.four_systems(N, D)
    except ValueError as e:
        return [Check("leonard.parameters", "leonard-systems", False, str(e))]
    info["square_roots"] = {ps.name: render(ps.t) for ps in pss}
    A, Astar, Atil = ls.module_matrices(N, D)
    bases = ls.standard_bases(N, D)
    for ps in pss:
        t0 = time.perf_counter()
        local = []
        try:
            ld = ls.derive(ps)
            local.append(Check(f"leonard.{ps.name}.derive", "leonard-systems", True))
            pf = ls.polynomials(ps, ld)
            local.append(Check(f"leonard.{ps.name}.polynomials", "leonard-polynomials", True))
            bad = ls.duality_check(ps, ld, pf)
            local.append(Check(f"leonard.{ps.name}.duality", "askey-wilson-duality", not bad,
                               f"(i, j) = {bad[0][:2]}" if bad else None))
            total = sum(ld.m, ld.m[0] * 0)
            local.append(equal_check(f"leonard.{ps.name}.sum-m", "leonard-weights", total, ONE))
            dual = Astar if ps.name in ("Phi", "Phi_perp") else Atil
            sb = ls.check_standard_basis(A, dual, bases[ps.name], ld)
            local.append(Check(f"leonard.{ps.name}.standard-basis", "standard-basis", not sb, "; ".join(sb) or None))
            if ps.name == "Phi":
                local.append(equal_check("leonard.Phi.m0", "leonard-weights", ld.m[0], gauss_binom(N, D).inverse()))
        except (ArithmeticError, ValueError) as e:
            local.append(Check(f"leonard.{ps.name}", "leonard-systems", False, f"{type(e).__name__}: {e}"))
        dt = time.perf_counter() - t0
        for c in local:
            c.seconds = dt / len(local)
        out.extend(local)
    P, Pt = ls.projections(N, D)
    out.append(equal_check("leonard.pi-idempotent", "projections", P @ P, P))
    out.append(equal_check("leonard.pi-tilde-idempotent", "projections", Pt @ Pt, Pt))
    out.append(equal_check("leonard.projection-ranks", "projections", ls.projection_ranks(N, D), (D + 1, D)))
    return out


def suite_hv(cfg: RunConfig, info: dict) -> list:
    N, D = cfg.N, cfg.D
    out = []
    gens = hv.build_generators(N, D)
    _guard(out, "hv.relations", "hv-relations", hv.verify_hv_relations, gens)
    _guard(out, "hv.nildaha", "nil-daha", hv.verify_nildaha, gens)
    _guard(out, "hv.tables", "x-action-table", hv.verify_action_tables, N, D, gens)
    _guard(out, "hv.action", "adjacency-from-x", hv.verify_t_action, N, D, gens)
    _guard(out, "hv.projections", "projections", hv.verify_projections, N, D, gens)
    _guard(out, "hv.dual-basis", "dual-basis-matrices", hv.verify_dual_basis_matrices, N, D, gens)
    _guard(out, "hv.spectral", "x-eigenvectors", hv.verify_spectral, gens)
    _guard(out, "hv.h-identity", "h-of-x", hv.verify_h_identity, N, D, gens)

    def probe():
        full, dim, length = hv.word_span(gens)
        info["word_span"] = {"dimension": dim, "target": (2 * D) ** 2, "length": length}
        return Check("hv.irreducibility", "irreducibility", full,
                     None if full else f"inconclusive: span dimension {dim} of {(2 * D) ** 2}")

    _guard(out, "hv.irreducibility", "irreducibility", probe)
    return out


def suite_nonsym(cfg: RunConfig, info: dict) -> list:
    N, D = cfg.N, cfg.D
    out = []
    try:
        fam = ns.build_family(N, D, strict=False)
    except (ArithmeticError, ValueError) as e:
        return [Check("nonsym.family", "nonsym-definition", False, f"{type(e).__name__}: {e}")]
    gens = hv.build_generators(N, D)
    _guard(out, "nonsym.family", "nonsym-definition", ns.verify_family, fam)
    _guard(out, "nonsym.realization", "cells-from-x", ns.verify_module_realization, N, D, fam, gens)
    _guard(out, "nonsym.recurrences", "recurrence-tables", ns.verify_recurrences, N, D, fam)
    holder = {}

    def form():
        f, checks = ns.build_form(N, D, gens)
        holder["form"] = f
        return checks

    _guard(out, "nonsym.form", "hermitian-form", form)
    if "form" in holder:
        q = cfg.q if cfg.mode == "numeric" else None
        counted = info.get("counted_cell_sizes")
        sizes = [Fraction(n) for n in counted] if counted else None
        _guard(out, "nonsym.orthogonality", "orthogonality", ns.verify_orthogonality, N, D, q, sizes, fam, holder["form"])
        if cfg.pairs:
            _guard(out, "nonsym.quadrature", "hermitian-form", ns.quadrature_check, N, D, cfg.pairs, cfg.seed,
                   holder["form"], gens)
    return out


SUITE_FUNCS = {"graph": suite_graph, "leonard": suite_leonard, "hv": suite_hv, "nonsym": suite_nonsym}


def run(cfg: RunConfig) -> Report:
    validate_config(cfg)
    rep = Report(cfg)
    for s in SUITES:
        if s in cfg.suites:
            rep.checks.extend(SUITE_FUNCS[s](cfg, rep.info))
    rep.info = {k: v for k, v in rep.info.items() if v is not None}
    return rep


def render_report(rep: Report, fmt: str, timing: bool = False) -> str:
    d = rep.as_dict(timing)
    if fmt == "json":
        return json.dumps(d, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        cols = ["id", "anchor", "status", "witness"] + (["seconds"] if timing else [])
        w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(d["checks"])
        return buf.getvalue()
    lines = []
    for c in d["checks"]:
        line = f"{c['status'].upper():7} {c['id']}"
        if timing:
            line += f"  ({c['seconds']:.3f}s)"
        if c["witness"] and c["status"] != "pass":
            line += f"  -- {c['witness']}"
        lines.append(line)
    s = d["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


# -- tables -----------------------------------------------------------------


def _csv(rows, cols) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _num(x, q):
    if q is None:
        return ""
    try:
        return str(specialize_q(x, q))
    except ScalarError:
        pass
    z = eval_numeric(x, q)   # odd powers of q^(1/2): a float is the best we can do
    return f"~{z.real:.12g}" if abs(z.imag) < 1e-15 else f"~{z:.12g}"


def emit_tables(cfg: RunConfig) -> dict:
    """Render tables as {filename: text}; writing is up to the caller."""
    validate_config(cfg)
    N, D = cfg.N, cfg.D
    q = cfg.q if cfg.mode == "numeric" else None
    ext = "json" if cfg.format == "json" else "csv"
    files = {}

    def put(name, rows, cols):
        if ext == "json":
            files[f"{name}.json"] = json.dumps(rows, sort_keys=True, indent=2) + "\n"
        else:
            files[f"{name}.csv"] = _csv(rows, cols)

    if "graph" in cfg.suites:
        sc = grassmann_scalars(N, D)
        rows = []
        for j, w in enumerate(hv.cell_weights(N, D)):
            rows.append({"cell": geo.cell_label(j), "symbolic": render(w), "numeric": _num(w, q)})
        put("cell_sizes", rows, ["cell", "symbolic", "numeric"])
        rows = []
        for name in ("a", "b", "c", "theta", "theta_star", "a_tilde", "b_tilde", "c_tilde", "theta_star_tilde", "n"):
            for i, v in enumerate(getattr(sc, name)):
                rows.append({"quantity": name, "i": i, "symbolic": render(v), "numeric": _num(v, q)})
        put("intersection_numbers", rows, ["quantity", "i", "symbolic", "numeric"])
    if "leonard" in cfg.suites:
        for ps in ls.four_systems(N, D):
            rows = ls.system_table(ls.derive(ps), q)
            put(f"system_{ps.name}", rows, ["quantity", "i", "symbolic", "numeric"])
    if "hv" in cfg.suites:
        gens = hv.build_generators(N, D)
        rows = []
        for name, M in zip(("T", "T_prime", "U", "U_prime"), gens.as_tuple()):
            for i, j, a in M.nonzero_entries():
                rows.append({"operator": name, "row": i, "col": j, "symbolic": render(a), "numeric": _num(a, q)})
        put("hv_generators", rows, ["operator", "row", "col", "symbolic", "numeric"])
    if "nonsym" in cfg.suites:
        fam = ns.build_family(N, D, strict=False)
        tables = ns.recurrence_tables(N, D, fam)
        for name, tab in sorted(tables.items()):
            op, sign = name[:-1], name[-1]
            rows = []
            for (i, s), coeffs in sorted(tab.items()):
                for (j, nu), c in sorted(coeffs.items()):
                    rows.append({"source": f"l_{i}^{s}", "target": f"l_{j}^{nu}", "symbolic": render(c), "numeric": _num(c, q)})
            label = {"X": "zeta", "Xinv": "zeta_inv"}[op] + ("_minus" if sign == "-" else "_plus")
            put(f"recurrence_{label}", rows, ["source", "target", "symbolic", "numeric"])
        form, _ = ns.build_form(N, D, check=False)
        rows = []
        for i in sorted(form.lam):
            rows.append({"i": i, "quantity": "lambda", "symbolic": render(form.lam[i]), "numeric": _num(form.lam[i], q)})
            rows.append({"i": i, "quantity": "omega", "symbolic": render(form.omega[i]), "numeric": _num(form.omega[i], q)})
        for i in sorted(form.omega_vee):
            w = form.omega_vee[i]
            rows.append({"i": i, "quantity": "omega_vee", "symbolic": render(w), "numeric": _num(w, q)})
        put("weights", rows, ["i", "quantity", "symbolic", "numeric"])
        G = ns.gram_matrix(form, fam)
        rows = []
        for a, b, v in G.nonzero_entries():
            rows.append({"row": geo.cell_label(a), "col": geo.cell_label(b), "symbolic": render(v), "numeric": _num(v, q)})
        put("gram", rows, ["row", "col", "symbolic", "numeric"])
    return files


def graph_info(cfg: RunConfig, count: bool = False) -> dict:
    """Sizes from the closed forms; with ``count`` also from enumeration."""
    if cfg.q is None:
        raise UsageError("graph-info needs --q")
    cfg.mode = "numeric"
    validate_config(RunConfig(**{**asdict(cfg), "suites": ()}))
    q, N, D = cfg.q, cfg.N, cfg.D
    sc = grassmann_scalars(N, D)
    out = {
        "q": q, "N": N, "D": D,
        "vertices": geo.count_subspaces(q, N, D),
        "clique": int(specialize_q(sc.clique_size, q).re),
        "valency": int(specialize_q(sc.b[0], q).re),
        "cells": {geo.cell_label(j): str(specialize_q(w, q)) for j, w in enumerate(hv.cell_weights(N, D))},
        "budget": cfg.budget,
    }
    if count:
        if out["vertices"] > cfg.budget:
            raise UsageError(f"{out['vertices']} vertices exceeds the budget {cfg.budget}")
        g = geo.GrassmannGraph(q, N, D, cfg.budget)
        x, H = geo.default_base_pair(g)
        part = geo.classify(g, x, geo.build_delsarte_clique(x, H), H)
        out["counted_cells"] = {geo.cell_label(j): int(n) for j, n in enumerate(part.cell_sizes)}
    return out
