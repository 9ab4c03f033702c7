"""The mw command line: inspect matroids, run realization and Chow reports.

Subcommands: info, realization, realizable-q, invariants, chow, corpus.
Matroids come from the catalog (--name, including uniform(r,n)) or from a
JSON file (--file).  Output is --format text (session style) or json; only
the JSON shape is contractual.  Exit codes: 0 success, 2 parse error,
3 budget exceeded, 4 mathematical precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import catalog, catalog_names
from .chow import (
    alpha_element,
    beta_element,
    chow_ring,
    kahler_report,
    reduced_char_coefficients_via_volumes,
)
from .corpus import ACTIONS, load_corpus, run_corpus
from .errors import (
    BudgetError,
    InputError,
    LoopPresent,
    MatroidworksError,
    PreconditionError,
)
from .groebner import DEFAULT_GB_CONFIG, GBConfig
from .invariants import (
    characteristic_polynomial,
    ingleton_violation,
    is_log_concave,
    reduced_characteristic_polynomial,
    tutte_polynomial,
)
from .matroid import (
    Matroid,
    mask_elements,
    matroid_from_json_dict,
    matroid_to_json_dict,
)
from .realization import (
    DEFAULT_SEARCH_BUDGET,
    UNDECIDED,
    SpaceVerdict,
    realization_space,
    realizability_table,
)
from .symmetry import automorphism_group

PROFILE_CHARACTERISTICS = (0, 2, 3, 5, 7, 11, 13)


def _add_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--name", help="catalog matroid, e.g. fano or uniform(2,4)")
    sub.add_argument("--file", help="path to a matroid JSON file")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", dest="fmt"
    )
    sub.add_argument(
        "--budget-gb",
        type=int,
        default=None,
        metavar="N",
        help="cap on Groebner pair reductions",
    )
    sub.add_argument(
        "--budget-search",
        type=int,
        default=DEFAULT_SEARCH_BUDGET,
        metavar="N",
        help="cap on finite-field point enumeration",
    )
    sub.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved for test sampling; results never depend on it",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mw", description="computational matroid workbench"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="rank, bases, circuits, flats")
    _add_source(p)
    _add_common(p)
    p.add_argument(
        "--aut", action="store_true", help="also compute the automorphism group order"
    )
    p.set_defaults(handler=cmd_info)

    p = subs.add_parser("realization", help="realization space over one characteristic")
    _add_source(p)
    _add_common(p)
    p.add_argument("--char", type=int, default=0, metavar="C")
    p.add_argument(
        "--profile",
        action="store_true",
        help="verdict table over char 0 and primes up to 13",
    )
    p.add_argument(
        "--no-simplify",
        action="store_true",
        help="keep the raw minor presentation",
    )
    p.set_defaults(handler=cmd_realization)

    p = subs.add_parser("realizable-q", help="realizability over GF(q) up to a bound")
    _add_source(p)
    _add_common(p)
    p.add_argument("--qmax", type=int, default=13, metavar="Q")
    p.set_defaults(handler=cmd_realizable_q)

    p = subs.add_parser("invariants", help="Tutte, characteristic, Ingleton")
    _add_source(p)
    _add_common(p)
    p.set_defaults(handler=cmd_invariants)

    p = subs.add_parser("chow", help="Chow ring volumes and Kaehler report")
    _add_source(p)
    _add_common(p)
    p.add_argument("--k", type=int, default=None, metavar="K")
    p.add_argument("--ell", choices=("alpha", "beta"), default="alpha")
    p.set_defaults(handler=cmd_chow)

    p = subs.add_parser("corpus", help="batch actions over a corpus file")
    p.add_argument("corpus_file", metavar="FILE")
    p.add_argument("--filter", default=None, help="simple or rank=k")
    p.add_argument("--action", default="realizable-char0", choices=ACTIONS)
    _add_common(p)
    p.set_defaults(handler=cmd_corpus)
    return parser


def _load_matroid(args) -> Matroid:
    if (args.name is None) == (args.file is None):
        raise InputError("give exactly one of --name or --file")
    if args.name is not None:
        return catalog(args.name)
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{args.file}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return matroid_from_json_dict(data)


def _gb_config(args) -> GBConfig:
    if args.budget_gb is None:
        return DEFAULT_GB_CONFIG
    if args.budget_gb <= 0:
        raise InputError("--budget-gb must be positive")
    return GBConfig(max_pair_reductions=args.budget_gb)


def _emit(args, report: dict, text_lines) -> None:
    if args.fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in text_lines:
            print(line)


def _sets(masks) -> list[list[int]]:
    return [list(mask_elements(f)) for f in masks]


# -- info -------------------------------------------------------------------


def cmd_info(args) -> int:
    m = _load_matroid(args)
    flats_by_rank = {}
    for r in range(m.rank + 1):
        flats_by_rank[str(r)] = _sets(m.flats(r))
    report = {
        "matroid": matroid_to_json_dict(m),
        "n": m.n,
        "rank": m.rank,
        "num_bases": len(m.bases),
        "loops": list(m.loops()),
        "circuits": _sets(m.circuits()),
        "flats_by_rank": flats_by_rank,
    }
    if args.aut:
        report["automorphism_group_order"] = automorphism_group(m).order

    lines = [
        f"ground set: 1..{m.n}",
        f"rank: {m.rank}",
        f"bases: {len(m.bases)}",
        f"loops: {report['loops']}",
        f"circuits: {report['circuits']}",
    ]
    for r in range(m.rank + 1):
        lines.append(f"flats of rank {r}: {flats_by_rank[str(r)]}")
    if args.aut:
        lines.append(
            f"automorphism group order: {report['automorphism_group_order']}"
        )
    _emit(args, report, lines)
    return 0


# -- realization ------------------------------------------------------------


def _space_lines(space) -> list[str]:
    d = space.to_json_dict()
    lines = [
        f"characteristic: {space.characteristic}",
        f"basis: {d['basis']}",
        "matrix:",
    ]
    widths = [
        max(len(d["matrix"][i][j]) for i in range(len(d["matrix"])))
        for j in range(len(d["matrix"][0]))
    ]
    for row in d["matrix"]:
        cells = "  ".join(c.rjust(w) for c, w in zip(row, widths))
        lines.append(f"  [{cells}]")
    lines.append(f"ideal generators ({len(d['ideal_generators'])}):")
    for g in d["ideal_generators"]:
        lines.append(f"  {g}")
    lines.append(f"inequations ({len(d['inequations'])}):")
    for u in d["inequations"]:
        lines.append(f"  {u}")
    if d["substitutions"]:
        lines.append(f"eliminated ({len(d['substitutions'])}):")
        for s in d["substitutions"]:
            lines.append(
                f"  {s['variable']} = ({s['numerator']}) / ({s['denominator']})"
            )
    lines.append(f"free variables ({len(d['free_variables'])}): {d['free_variables']}")
    lines.append(f"verdict: {d['verdict']}")
    return lines


def cmd_realization(args) -> int:
    m = _load_matroid(args)
    config = _gb_config(args)
    simplify = not args.no_simplify
    if args.profile:
        rows = []
        any_undecided = False
        for c in PROFILE_CHARACTERISTICS:
            space = realization_space(m, c, simplify=simplify, config=config)
            any_undecided |= space.verdict is SpaceVerdict.UNDECIDED
            rows.append(
                {
                    "characteristic": c,
                    "verdict": space.verdict.value,
                    "free_variables": space.num_free_variables,
                }
            )
        report = {"profile": rows}
        lines = ["char  verdict    free"]
        for r in rows:
            lines.append(
                f"{r['characteristic']:>4}  {r['verdict']:<9}  {r['free_variables']}"
            )
        _emit(args, report, lines)
        return 3 if any_undecided else 0
    space = realization_space(m, args.char, simplify=simplify, config=config)
    _emit(args, space.to_json_dict(), _space_lines(space))
    return 3 if space.verdict is SpaceVerdict.UNDECIDED else 0


# -- realizable-q -----------------------------------------------------------


def cmd_realizable_q(args) -> int:
    m = _load_matroid(args)
    if args.qmax < 2:
        raise InputError("--qmax must be at least 2")
    table = realizability_table(
        m, args.qmax, search_budget=args.budget_search, config=_gb_config(args)
    )
    rows = [{"q": q, "realizable": table[q]} for q in sorted(table)]
    report = {"qmax": args.qmax, "table": rows}
    lines = [f"q={r['q']}: {'yes' if r['realizable'] else 'no'}" for r in rows]
    _emit(args, report, lines)
    return 0


# -- invariants -------------------------------------------------------------


def cmd_invariants(args) -> int:
    m = _load_matroid(args)
    t = tutte_polynomial(m)
    chi = characteristic_polynomial(m)
    coeffs = [abs(c) for c in chi.coefficients_descending()]
    report = {
        "tutte": t.render(),
        "num_bases": t.evaluate(1, 1),
        "characteristic": chi.render("q"),
        "characteristic_coefficients_abs": coeffs,
        "log_concave": is_log_concave(chi),
    }
    try:
        red = reduced_characteristic_polynomial(m)
        report["reduced_characteristic"] = red.render("q")
    except LoopPresent as exc:
        report["reduced_characteristic"] = None
        report["reduced_characteristic_note"] = str(exc)
    witness = ingleton_violation(m)
    report["ingleton_violation"] = (
        None if witness is None else [list(part) for part in witness]
    )
    lines = [
        f"Tutte: {report['tutte']}",
        f"bases T(1,1): {report['num_bases']}",
        f"characteristic: {report['characteristic']}",
        f"log-concave: {'yes' if report['log_concave'] else 'no'}",
    ]
    if report["reduced_characteristic"] is None:
        lines.append(f"reduced characteristic: {report['reduced_characteristic_note']}")
    else:
        lines.append(f"reduced characteristic: {report['reduced_characteristic']}")
    if witness is None:
        lines.append("Ingleton: no violation found")
    else:
        lines.append(f"Ingleton violated at {report['ingleton_violation']}")
    _emit(args, report, lines)
    return 0


# -- chow -------------------------------------------------------------------


def cmd_chow(args) -> int:
    m = _load_matroid(args)
    ring = chow_ring(m)
    if args.k is None:
        omega = list(reduced_char_coefficients_via_volumes(ring))
        red = list(
            int(c) for c in reduced_characteristic_polynomial(m).coefficients_descending()
        )
        report = {
            "graded_dimensions": list(ring.graded_dimensions()),
            "omega_bar": omega,
            "reduced_characteristic_descending": red,
            "volumes_match_reduced_characteristic": omega == red,
        }
        lines = [
            f"graded dimensions: {report['graded_dimensions']}",
            f"omega-bar volumes: {omega}",
            f"reduced characteristic: {red}",
            f"match: {'yes' if report['volumes_match_reduced_characteristic'] else 'no'}",
        ]
        _emit(args, report, lines)
        return 0
    ell = alpha_element(ring) if args.ell == "alpha" else beta_element(ring)
    rep = kahler_report(ring, args.k, ell)
    report = {"ell": args.ell} | rep.to_json_dict()
    lines = [
        f"k: {args.k}  ell: {args.ell}",
        f"dim A^{args.k}: {ring.graded_dimension(args.k)}",
        f"Poincare pairing nondegenerate: {rep.poincare_nondegenerate}",
        f"hard Lefschetz isomorphism: {rep.hard_lefschetz_iso}",
        f"Hodge-Riemann definite on kernel (dim {len(rep.kernel)}): "
        f"{rep.hodge_riemann_definite}",
    ]
    _emit(args, report, lines)
    return 0


# -- corpus -----------------------------------------------------------------


def cmd_corpus(args) -> int:
    entries = load_corpus(args.corpus_file)
    summary = run_corpus(
        entries,
        action=args.action,
        filter_spec=args.filter,
        config=_gb_config(args),
    )
    report = summary.to_json_dict()
    lines = []
    for r in summary.results:
        detail = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{r.identifier}: {r.status}{detail}")
    lines.append(
        f"{summary.count_true} of {summary.selected} selected entries realizable "
        f"over characteristic 0 "
        f"({summary.count_false} not, {summary.count_undecided} undecided, "
        f"{summary.count_error} errors; {summary.total} total)"
    )
    _emit(args, report, lines)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4
    except MatroidworksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
