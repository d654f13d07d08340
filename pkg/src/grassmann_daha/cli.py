"""Command line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import geometry as geo
from .report import (
    RunConfig,
    UsageError,
    emit_tables,
    graph_info,
    parse_suites,
    render_report,
    run,
)


def _common(p: argparse.ArgumentParser, suites_default="all"):
    p.add_argument("--mode", choices=["symbolic", "numeric"], default=None,
                   help="numeric builds the graph over GF(q); default: numeric when --q is given")
    p.add_argument("--q", type=int, default=None, help="field size, a prime power <= 16")
    p.add_argument("--N", type=int, default=6)
    p.add_argument("--D", type=int, default=3)
    p.add_argument("--suites", default=suites_default, help="comma list of graph, leonard, hv, nonsym, or all")
    p.add_argument("--seed", type=int, default=0, help="seed for the random quadrature pairs")
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default=None)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--budget", type=int, default=geo.DEFAULT_BUDGET, help="maximum number of vertices to enumerate")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grassmann-daha",
                                 description="Exact checks for the Grassmann graph, its Leonard systems and the H_V module W.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("--timing", action="store_true", help="include wall times (reports are then not byte-stable)")
    v.add_argument("--pairs", type=int, default=200, help="random pairs for the quadrature check")
    v.add_argument("--no-cache", action="store_true")
    t = sub.add_parser("tables", help="emit tables as CSV or JSON files")
    _common(t)
    g = sub.add_parser("graph-info", help="sizes of J_q(N, D) and its cells")
    _common(g)
    g.add_argument("--count", action="store_true", help="also enumerate and count the cells")
    c = sub.add_parser("cache", help="manage the enumeration cache")
    c.add_argument("action", choices=["clear"])
    c.add_argument("--cache-dir", default=None)
    return ap


def _config(args, fmt_default) -> RunConfig:
    mode = args.mode or ("numeric" if args.q is not None else "symbolic")
    return RunConfig(
        mode=mode, q=args.q, N=args.N, D=args.D,
        suites=parse_suites(args.suites), seed=args.seed, output=args.output,
        format=args.format or fmt_default,
        cache_dir=args.cache_dir, budget=args.budget,
        timing=getattr(args, "timing", False), pairs=getattr(args, "pairs", 200),
    )


def _write(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "cache":
            d = Path(args.cache_dir) if args.cache_dir else geo.default_cache_dir()
            n = geo.clear_cache(d)
            print(f"removed {n} cache file(s) from {d}")
            return 0
        cfg = _config(args, "text" if args.command != "tables" else "csv")
        if args.command == "verify":
            if cfg.cache_dir is None and not args.no_cache and cfg.mode == "numeric":
                cfg.cache_dir = str(geo.default_cache_dir())
            rep = run(cfg)
            _write(render_report(rep, cfg.format, cfg.timing), cfg.output)
            return rep.exit_code
        if args.command == "tables":
            files = emit_tables(cfg)
            out = Path(cfg.output or ".")
            if files:
                out.mkdir(parents=True, exist_ok=True)
            for name, text in sorted(files.items()):
                (out / name).write_text(text)
                print(out / name)
            return 0
        if args.command == "graph-info":
            info = graph_info(cfg, count=args.count)
            if cfg.format == "json":
                _write(json.dumps(info, sort_keys=True, indent=2) + "\n", cfg.output)
            else:
                lines = [f"J_{info['q']}({info['N']},{info['D']}): {info['vertices']} vertices, "
                         f"valency {info['valency']}, clique size {info['clique']}"]
                for k, val in info["cells"].items():
                    extra = f" (counted {info['counted_cells'][k]})" if "counted_cells" in info else ""
                    lines.append(f"  |{k}| = {val}{extra}")
                _write("\n".join(lines) + "\n", cfg.output)
            return 0
    except UsageError as e:
        print(f"grassmann-daha: error: {e}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
