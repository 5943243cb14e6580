"""Command-line entry point: ``frcodes <subcommand> [descriptor] [options]``.

A descriptor is either ``--kind <generator>`` plus its parameters or
``--ingest file.json``; ``--dual`` swaps points and blocks afterwards.

Exit status: 0 ok, 1 verification disagreement, 2 usage or parameter
error, 3 work budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .designs import (
    affine_fr_code,
    is_steiner_system,
    load_latin_squares,
    maximal_arc_search,
    mols_fr_code,
    mols_prime,
    steiner_triple_system,
)
from .distance import (
    EMPTY,
    Interval,
    attains_singleton,
    bound_report,
    dual_graph_optimal_cases,
    min_distance,
    repair_locality,
    singleton_range_affine,
    singleton_range_mols,
    singleton_range_regular,
    singleton_range_regular_beyond,
    singleton_range_steiner,
    singleton_range_turan,
)
from .errors import FrCodeError, SizeLimitExceeded
from .filesize import DEFAULT_BUDGET, dual_indicator_bound, file_size_profile, phi_sequence
from .graphs import (
    ACYCLIC,
    Graph,
    circulant_graph,
    complete_graph,
    cycle_graph,
    girth,
    graph_to_fr,
    petersen_graph,
    projective_plane_incidence_graph,
    turan_graph,
)
from .incidence import FrCode, dual, load_json, to_json, validate_fr

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GRAPH_KINDS = ("turan", "cycle", "circulant", "petersen", "pg-incidence", "complete")
DESIGN_KINDS = ("sts", "affine", "mols-net")


class UsageError(Exception):
    pass


@dataclass
class Subject:
    """A constructed code together with what is known about where it came from."""

    code: FrCode
    kind: str | None
    params: dict = field(default_factory=dict)
    graph: Graph | None = None
    base: FrCode | None = None  # the code before dualizing
    dualized: bool = False


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs {', '.join(missing)}")


def _build_graph(args: argparse.Namespace) -> Graph:
    kind = args.kind
    if kind == "turan":
        _require(args, "n", "r")
        return turan_graph(args.n, args.r)
    if kind == "cycle":
        _require(args, "n")
        return cycle_graph(args.n)
    if kind == "complete":
        _require(args, "n")
        return complete_graph(args.n)
    if kind == "circulant":
        _require(args, "n", "offsets")
        return circulant_graph(args.n, args.offsets)
    if kind == "petersen":
        return petersen_graph()
    _require(args, "q")
    return projective_plane_incidence_graph(args.q)


def build_subject(args: argparse.Namespace) -> Subject:
    """Resolve the descriptor flags into a :class:`Subject`, validating first."""
    if (args.kind is None) == (args.ingest is None):
        raise UsageError("give exactly one of --kind or --ingest")
    graph = None
    params: dict = {}
    if args.ingest is not None:
        code = validate_fr(load_json(args.ingest))
    elif args.kind in GRAPH_KINDS:
        graph = _build_graph(args)
        code = graph_to_fr(graph)
        if args.kind == "turan":
            params = {"n": args.n, "r": args.r}
    elif args.kind == "sts":
        _require(args, "theta")
        code = steiner_triple_system(args.theta)
    elif args.kind == "affine":
        _require(args, "q", "m", "rho")
        code = affine_fr_code(args.q, args.m, args.rho)
        params = {"q": args.q, "m": args.m}
    else:
        _require(args, "rho")
        if args.squares is not None:
            squares = load_latin_squares(args.squares)
        elif args.p is not None:
            squares = mols_prime(args.p)
        else:
            raise UsageError("--kind mols-net needs --p or --squares")
        code = mols_fr_code(squares, args.rho)
        params = {"order": squares[0].order}
    subject = Subject(code, args.kind, params, graph)
    if args.dual:
        subject.base = code
        subject.code = dual(code)
        subject.dualized = True
    return subject


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _cell(v: object) -> object:
    return "" if v is None else v


def render_table(header: Sequence[str], rows: Sequence[Sequence[object]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    cells = [[str(_cell(v)) for v in r] for r in rows]
    if fmt == "text":
        widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(cells)
    return buf.getvalue()


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_range(text: str, lo: int, hi: int) -> list[int]:
    """``"5:11"``, ``"7"`` or ``"1,3,5"``; a bare ``":"`` side defaults to the limit."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            values = list(range(int(a) if a else lo, (int(b) if b else hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    bad = [v for v in values if not lo <= v <= hi]
    if bad or not values:
        raise UsageError(f"range {text!r} must lie within {lo}..{hi}")
    return values


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    s = build_subject(args)
    _emit(args, to_json(s.code) + "\n")
    print(s.code.summary())
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    args.dual = not args.dual
    return cmd_construct(args)


def cmd_girth(args: argparse.Namespace) -> int:
    if args.kind not in GRAPH_KINDS:
        raise UsageError(f"girth needs a graph --kind ({', '.join(GRAPH_KINDS)})")
    g = girth(_build_graph(args))
    _emit(args, ("acyclic" if g == ACYCLIC else str(g)) + "\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    c = build_subject(args).code
    prof = file_size_profile(c, budget=args.budget, jobs=args.jobs)
    phi = phi_sequence(c.n, c.alpha, c.rho)
    rows = [
        (k, prof.m(k), prof.complementary(k), phi[k - 1], dual_indicator_bound(c.n, c.alpha, c.rho, k))
        for k in range(1, c.n + 1)
    ]
    _emit(args, render_table(("k", "M_k", "N_k", "phi_k", "indicator_bound_k"), rows, args.format))
    return EXIT_OK


def _parse_local(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        n_local, rho_local = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--local expects n',rho' (two integers), got {text!r}") from None
    return n_local, rho_local


def cmd_bounds(args: argparse.Namespace) -> int:
    c = build_subject(args).code
    values = parse_range(args.M, 1, c.theta) if args.M else list(range(1, c.theta + 1))
    local = _parse_local(args.local)
    locality = repair_locality(c) if c.rho >= 2 else None
    rows = []
    for M in values:
        rep = bound_report(c, M, exact=False, local=local, locality=locality)
        d = None
        if not args.formula_only:
            d = min_distance(c, M, budget=args.budget, method="auto", jobs=args.jobs)
        rows.append((M, d, rep.bound_singleton, rep.bound_locality, rep.bound_improved, rep.bound_local_structure))
    header = ("M", "d_min", "singleton", "locality", "improved", "local_structure")
    _emit(args, render_table(header, rows, args.format))
    return EXIT_OK


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _singleton_prediction(s: Subject) -> tuple[Interval, Interval] | None:
    """Predicted attainment as a main interval plus a second window (often empty)."""
    c = s.code
    if s.graph is not None and not s.dualized:
        if s.kind == "turan":
            return singleton_range_turan(s.params["n"], s.params["r"]), EMPTY
        g = girth(s.graph)
        if g == ACYCLIC:
            return None
        return singleton_range_regular(c.alpha, g), singleton_range_regular_beyond(c.alpha, g)
    if s.kind == "affine" and not s.dualized:
        return singleton_range_affine(s.params["q"], s.params["m"]), EMPTY
    if s.kind == "mols-net" and not s.dualized:
        return singleton_range_mols(s.params["order"], c.rho), EMPTY
    if s.dualized and s.base is not None and s.graph is None and is_steiner_system(s.base):
        return singleton_range_steiner(s.base.rho), EMPTY
    return None


def _check_dual_graph(args: argparse.Namespace, s: Subject) -> int:
    """Locality-bound attainment claims for the dual of a graph code, one line per file size."""
    base = s.base
    g = girth(s.graph)
    cases = dual_graph_optimal_cases(base.n, base.alpha, g)
    print(f"cases={' '.join(f'{M}:{label}' for M, label in cases) or 'none'}")
    if args.formula_only:
        return EXIT_OK
    c = s.code
    d = repair_locality(c)
    status = EXIT_OK
    for M, label in cases:
        if M > c.theta:
            continue
        rep = bound_report(c, M, exact=False, locality=d)
        actual = min_distance(c, M, budget=args.budget, method="auto", jobs=args.jobs) == rep.bound_locality
        verdict = "AGREE" if actual else "DISAGREE"
        if not actual:
            status = EXIT_DISAGREE
        print(f"M={M} predicted=true({label}) actual={_flag(actual)} {verdict}")
    return status


def cmd_check_optimal(args: argparse.Namespace) -> int:
    s = build_subject(args)
    c = s.code
    if s.dualized and s.graph is not None:
        return _check_dual_graph(args, s)
    pred = _singleton_prediction(s)
    if pred is None:
        raise UsageError("no attainment prediction applies to this construction")
    rng, beyond = pred
    if s.dualized and s.base is not None and not args.formula_only:
        # the Steiner-dual range assumes a maximal arc of size rho+1
        size = s.base.rho + 1
        arc = maximal_arc_search(s.base, size)
        if arc is None:
            print(f"hypothesis: no maximal arc of size {size}; prediction does not apply")
            return EXIT_OK
        print(f"hypothesis: maximal arc {list(arc)}")
    print(f"predicted={rng}" + ("" if beyond.empty else f" beyond={beyond}"))
    if args.formula_only:
        return EXIT_OK
    ks = parse_range(args.k, 1, c.n) if args.k else list(range(1, c.n + 1))
    status = EXIT_OK
    for k in ks:
        predicted = k in rng or k in beyond
        actual = attains_singleton(c, k, budget=args.budget)
        verdict = "AGREE" if predicted == actual else "DISAGREE"
        if predicted != actual:
            status = EXIT_DISAGREE
        print(f"k={k} predicted={_flag(predicted)} actual={_flag(actual)} {verdict}")
    return status


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _offsets(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"offsets must be comma-separated integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--out", help="write the main output to this file")
    shared.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    shared.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search-node budget")
    shared.add_argument("--jobs", type=int, default=1, help="worker processes for subset search")

    desc = argparse.ArgumentParser(add_help=False)
    desc.add_argument("--kind", choices=GRAPH_KINDS + DESIGN_KINDS)
    desc.add_argument("--ingest", metavar="PATH", help="incidence JSON file")
    desc.add_argument("--dual", action="store_true", help="dualize the constructed code")
    desc.add_argument("--n", type=int)
    desc.add_argument("--r", type=int)
    desc.add_argument("--offsets", type=_offsets)
    desc.add_argument("--q", type=int)
    desc.add_argument("--theta", type=int)
    desc.add_argument("--m", type=int)
    desc.add_argument("--rho", type=int)
    desc.add_argument("--p", type=int, help="prime order for the cyclic MOLS family")
    desc.add_argument("--squares", metavar="PATH", help="Latin squares JSON for mols-net")

    parser = argparse.ArgumentParser(prog="frcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parents = [shared, desc]
    sub.add_parser("construct", parents=parents, help="emit a code as JSON").set_defaults(func=cmd_construct)
    sub.add_parser("dual", parents=parents, help="emit the dual code as JSON").set_defaults(func=cmd_dual)
    sub.add_parser("girth", parents=parents, help="girth of a graph construction").set_defaults(func=cmd_girth)
    sub.add_parser("analyze", parents=parents, help="file-size profile").set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", parents=parents, help="minimum-distance bounds")
    p.add_argument("--M", help="file sizes, e.g. 5:11 (default: all)")
    p.add_argument("--local", metavar="N,RHO", help="local-structure parameters n',rho'")
    p.add_argument("--formula-only", action="store_true", help="skip the exact d_min search")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("check-optimal", parents=parents, help="compare predicted and actual attainment")
    p.add_argument("--k", help="reconstruction degrees, e.g. 1:6 (default: all)")
    p.add_argument("--formula-only", action="store_true", help="print predictions only")
    p.set_defaults(func=cmd_check_optimal)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: work budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FrCodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
