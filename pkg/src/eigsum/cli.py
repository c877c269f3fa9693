"""Command-line front end: spectrum, search, verify, enumerate.

Exit codes: 0 success / all suites pass, 1 verification failure, 2 usage or
parse error.  Machine-readable output (json/csv) is byte-stable for identical
invocations; exact values are printed as numerator/denominator strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import exact, search, verify
from .graphs import (
    GraphError,
    complete_graph,
    cycle_graph,
    cycle_space_dim,
    components,
    family_double_star,
    family_G,
    family_star_plus,
    graph6_decode,
    parse_edge_list,
    path_graph,
)
from .search import EnumSpec, SearchError, enumerate_graphs
from .spectral import MatrixKind, spectrum_of

_CERT_WIDTH = Fraction(1, 10**12)


class CliError(Exception):
    """Input error reported with exit code 2."""


def parse_family(spec):
    """Mini-language: star-plus:a, G:s,t, double-star:p,q, path:n, cycle:n,
    complete:n."""
    name, _, args = spec.partition(":")
    try:
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError as exc:
        raise CliError(f"bad family arguments in {spec!r}") from exc
    try:
        if name == "star-plus" and len(nums) == 1:
            return family_star_plus(nums[0])
        if name == "G" and len(nums) == 2:
            return family_G(nums[0], nums[1])
        if name == "double-star" and len(nums) == 2:
            return family_double_star(nums[0], nums[1])
        if name == "path" and len(nums) == 1:
            return path_graph(nums[0])
        if name == "cycle" and len(nums) == 1:
            return cycle_graph(nums[0])
        if name == "complete" and len(nums) == 1:
            return complete_graph(nums[0])
    except GraphError as exc:
        raise CliError(str(exc)) from exc
    raise CliError(
        f"unknown family {spec!r}; expected star-plus:a, G:s,t, double-star:p,q, "
        "path:n, cycle:n, or complete:n"
    )


def _load_graph(args):
    given = [x for x in (args.g6, args.family, args.edge_file) if x]
    if len(given) != 1:
        raise CliError("exactly one of --g6, --family, --edge-file is required")
    if args.g6:
        try:
            return graph6_decode(args.g6)
        except GraphError as exc:
            raise CliError(f"bad graph6 input: {exc}") from exc
    if args.family:
        return parse_family(args.family)
    try:
        return parse_edge_list(Path(args.edge_file).read_text())
    except OSError as exc:
        raise CliError(f"cannot read {args.edge_file}: {exc}") from exc
    except GraphError as exc:
        raise CliError(f"bad edge list in {args.edge_file}: {exc}") from exc


def _parse_range(text, what):
    """'LO:HI' or a single integer."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError as exc:
        raise CliError(f"bad {what} range {text!r}; expected N or LO:HI") from exc


def _fmt_float(x, precision):
    return f"{x:.{precision}f}"


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def cmd_spectrum(args):
    g = _load_graph(args)
    kind = MatrixKind.LAPLACIAN if args.kind == "L" else MatrixKind.SIGNLESS
    if g.n < 1:
        raise CliError("spectrum needs at least one vertex")
    spec = spectrum_of(g, kind)
    vals = spec.values
    s2 = vals[0] + vals[1] if g.n >= 2 else None
    f = g.e + 3 - s2 if s2 is not None else None
    payload = {
        "n": g.n,
        "e": g.e,
        "omega": components(g).omega,
        "cycle_dim": cycle_space_dim(g),
        "kind": args.kind,
        "eigenvalues": list(vals),
        "s2": s2,
        "f": f,
    }
    if args.certify:
        if g.n < 2:
            raise CliError("--certify needs at least two vertices")
        s2_iv = exact.certify_s2(g, _CERT_WIDTH)
        payload["s2_exact"] = s2_iv.to_json()
        payload["f_exact"] = s2_iv.reflect(g.e + 3).to_json()
        if kind is MatrixKind.LAPLACIAN:
            payload["note"] = "exact brackets always refer to the signless matrix"
    p = args.precision
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "e", "omega", "cycle_dim", "kind", "s2", "f", "eigenvalues"])
        w.writerow(
            [g.n, g.e, payload["omega"], payload["cycle_dim"], args.kind,
             s2, f, " ".join(_fmt_float(v, p) for v in vals)]
        )
        sys.stdout.write(buf.getvalue())
    else:
        print(f"n={g.n} e={g.e} omega={payload['omega']} c={payload['cycle_dim']}")
        print(f"{args.kind}-eigenvalues: "
              + " ".join(_fmt_float(v, p) for v in vals))
        if s2 is not None:
            print(f"S2 = {_fmt_float(s2, p)}")
            print(f"f  = {_fmt_float(f, p)}")
        if args.certify:
            s2x = payload["s2_exact"]
            fx = payload["f_exact"]
            print(f"S2 exact in [{s2x['lo']}, {s2x['hi']}]")
            print(f"f  exact in [{fx['lo']}, {fx['hi']}]")
    return 0


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _report_lines(rep, precision):
    lines = [
        f"objective : {rep.objective}",
        f"examined  : {rep.examined}",
        f"unique    : {rep.unique}",
        f"value     : {_fmt_float(rep.ext_value.midpoint_float(), precision)} "
        f"(exact in [{rep.ext_value.to_json()['lo']}, {rep.ext_value.to_json()['hi']}])",
        "argext    : " + " ".join(rep.argext),
    ]
    return lines


def cmd_search(args):
    pool = None
    if args.g6_file:
        try:
            pool = search.read_graph6_stream(Path(args.g6_file).read_text())
        except (OSError, GraphError) as exc:
            raise CliError(f"bad graph6 stream {args.g6_file}: {exc}") from exc
    try:
        if args.objective == "min-f-edges":
            if args.m is None:
                raise CliError("min-f-edges requires --m")
            rep = search.min_f_by_edges(args.m, graphs=pool, workers=args.parallelism)
        elif args.objective == "min-f-vertices":
            if args.n is None:
                raise CliError("min-f-vertices requires --n")
            rep = search.min_f_by_vertices(args.n, graphs=pool, workers=args.parallelism)
        elif args.objective == "max-s2-cycledim":
            if args.n is None or args.c is None:
                raise CliError("max-s2-cycledim requires --n and --c")
            rep = search.max_s2_by_cycle_dim(
                args.n, args.c, graphs=pool, workers=args.parallelism
            )
        else:  # laplacian-equality
            if (args.n is None) == (args.m is None):
                raise CliError("laplacian-equality requires exactly one of --n, --m")
            if args.n is not None:
                rep = search.laplacian_equality_class(
                    "vertices", args.n, connected=args.connected, graphs=pool
                )
            else:
                rep = search.laplacian_equality_class("edges", args.m, graphs=pool)
    except SearchError as exc:
        raise CliError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["objective", "examined", "unique", "value_lo", "value_hi", "graph6"])
        vj = rep.ext_value.to_json()
        for s in rep.argext:
            w.writerow([rep.objective, rep.examined, rep.unique, vj["lo"], vj["hi"], s])
        sys.stdout.write(buf.getvalue())
    else:
        for line in _report_lines(rep, args.precision):
            print(line)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_GENERIC_RANGE_PARAMS = {
    "star-plus-bounds": ("n", "n_lo", "n_hi"),
    "monotone-f": ("a", "a_lo", "a_hi"),
    "min-f-vertices": ("n", "n_lo", "n_hi"),
    "min-f-edges": ("m", "m_lo", "m_hi"),
    "laplacian-equality-vertices": ("n", "n_lo", "n_hi"),
    "laplacian-equality-edges": ("m", "m_lo", "m_hi"),
    "max-s2-cycledim": ("n", "n_lo", "n_hi"),
    "double-star-tree": ("n", "n_lo", "n_hi"),
}

_SCALAR_PARAMS = {
    "interlacing": {"trials": "trials", "seed": "seed", "n_max": "n_max"},
    "subadditivity": {
        "trials": "graph_trials",
        "matrix_trials": "matrix_trials",
        "seed": "seed",
        "n_max": "n_max",
        "k_max": "k_max",
    },
    "delta-spectrum": {"trials": "trials", "seed": "seed"},
    "tree-bound": {"n_max": "n_max"},
    "subgraph-lemma": {"n_max": "n_max"},
    "case1-split": {"m_max": "m_max"},
}

_WORKER_SUITES = {"min-f-vertices", "min-f-edges", "max-s2-cycledim"}


def _suite_params(name, args):
    params = {}
    if name in _GENERIC_RANGE_PARAMS:
        flag, lo_key, hi_key = _GENERIC_RANGE_PARAMS[name]
        value = getattr(args, flag, None)
        if value is not None:
            lo, hi = _parse_range(value, flag)
            params[lo_key] = lo
            params[hi_key] = hi
    for flag, key in _SCALAR_PARAMS.get(name, {}).items():
        value = getattr(args, flag, None)
        if value is not None:
            params[key] = value
    if name in _WORKER_SUITES and args.parallelism > 1:
        params["workers"] = args.parallelism
    return params


def cmd_verify(args):
    names = []
    for chunk in args.suites.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk == "all":
            names.extend(verify.SUITES)
        else:
            resolved = verify.SUITE_ALIASES.get(chunk, chunk)
            if resolved not in verify.SUITES:
                raise CliError(
                    f"unknown suite {chunk!r}; available: "
                    + ", ".join(sorted(verify.SUITES))
                    + " plus aliases "
                    + ", ".join(sorted(verify.SUITE_ALIASES))
                )
            names.append(resolved)
    if not names:
        raise CliError("no suites requested")
    reports = []
    for name in names:
        reports.append(verify.run_suite(name, **_suite_params(name, args)))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "reports.json").write_text(verify.reports_to_json(reports))
        (outdir / "summary.csv").write_text(verify.reports_to_csv(reports))
    print(f"{'claim':36s} {'status':12s} {'trials':>7s} {'runtime_ms':>10s}")
    for r in reports:
        print(f"{r.claim_id:36s} {r.status:12s} {r.trials:>7d} {r.runtime_ms:>10d}")
        for cx in r.counterexamples[:3]:
            print(f"    counterexample: {json.dumps(cx, sort_keys=True, default=str)}")
    return 0 if all(r.status == verify.PASS for r in reports) else 1


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def cmd_enumerate(args):
    if (args.vertices is None) == (args.edges is None):
        raise CliError("exactly one of --vertices, --edges is required")
    try:
        if args.vertices is not None:
            spec = EnumSpec(
                "vertices",
                args.vertices,
                connected=args.connected,
                no_isolated=args.no_isolated,
                trees_only=args.trees,
                cycle_dim=args.cycle_dim,
            )
        else:
            spec = EnumSpec(
                "edges",
                args.edges,
                connected=args.connected,
                trees_only=args.trees,
                cycle_dim=args.cycle_dim,
            )
        for g in enumerate_graphs(spec):
            print(search.canonical_form(g))
    except SearchError as exc:
        raise CliError(str(exc)) from exc
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="eigsum",
        description="Sums of the largest (signless) Laplacian eigenvalues: "
        "spectra, exact certificates, extremal searches, verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues, S2 and f of one graph")
    sp.add_argument("--g6", help="graph6 string")
    sp.add_argument("--family", help="family spec, e.g. star-plus:4 or G:2,1")
    sp.add_argument("--edge-file", help="edge-list file ('n m' header, 'u v' lines)")
    sp.add_argument("--kind", choices=["L", "Q"], default="Q")
    sp.add_argument("--certify", action="store_true",
                    help="add exact rational brackets for S2 and f")
    sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
    sp.add_argument("--precision", type=int, default=6, choices=range(1, 31),
                    metavar="P")
    sp.set_defaults(func=cmd_spectrum)

    se = sub.add_parser("search", help="certified extremal searches")
    se.add_argument(
        "objective",
        choices=["min-f-edges", "min-f-vertices", "max-s2-cycledim",
                 "laplacian-equality"],
    )
    se.add_argument("--m", type=int)
    se.add_argument("--n", type=int)
    se.add_argument("--c", type=int)
    se.add_argument("--connected", action="store_true")
    se.add_argument("--g6-file", help="search this graph6 stream instead of enumerating")
    se.add_argument("--format", choices=["table", "json", "csv"], default="table")
    se.add_argument("--precision", type=int, default=6, choices=range(1, 31),
                    metavar="P")
    se.add_argument("--parallelism", type=int, default=1)
    se.set_defaults(func=cmd_search)

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("suites", help="suite name, comma list, or 'all'")
    ve.add_argument("--out", help="directory for reports.json and summary.csv")
    ve.add_argument("--n", help="range LO:HI for suites indexed by vertex count")
    ve.add_argument("--m", help="range LO:HI for suites indexed by edge count")
    ve.add_argument("--a", help="range LO:HI for the monotonicity suite")
    ve.add_argument("--trials", type=int)
    ve.add_argument("--matrix-trials", dest="matrix_trials", type=int)
    ve.add_argument("--seed", type=int)
    ve.add_argument("--n-max", dest="n_max", type=int)
    ve.add_argument("--m-max", dest="m_max", type=int)
    ve.add_argument("--k-max", dest="k_max", type=int)
    ve.add_argument("--parallelism", type=int, default=1)
    ve.set_defaults(func=cmd_verify)

    en = sub.add_parser("enumerate", help="canonical graph6, one per line")
    en.add_argument("--vertices", type=int)
    en.add_argument("--edges", type=int)
    en.add_argument("--connected", action="store_true")
    en.add_argument("--trees", action="store_true")
    en.add_argument("--no-isolated", dest="no_isolated", action="store_true")
    en.add_argument("--cycle-dim", dest="cycle_dim", type=int)
    en.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
