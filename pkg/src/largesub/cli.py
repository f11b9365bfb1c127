"""Command line front end.

Verbs:

  info GROUP            structure report for one group
  verify TARGET         run one claim over a group or a corpus file
  scan CORPUS           look for soluble groups outside the residual-minimal
                        class whose maximal abelian normal subgroups are all
                        large anyway
  construct GROUP       print the corpus record for a group expression
  corpus-check CORPUS   validate every record of a corpus file

GROUP is a group expression: a catalog name such as "symmetric(4)" or
"sl(2,3)", or one of the combinators "direct(a,b)" and "central(a,b)"
applied recursively.  central(a,b) glues the full centers of a and b along
the canonical basis isomorphism and fails when the centers are not
isomorphic.  TARGET is a group expression, or the path of a corpus file
(line-delimited JSON; see the corpus module).

Exit codes: 0 all pass or skip, 1 a verification counterexample or an
invalid corpus record, 2 unusable input (parse errors, unknown names,
malformed corpora).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .catalog import CATALOG_KEYS, named_group
from .classes import (
    BUILTIN_CLASS_KEYS,
    has_minimal_supersoluble_residual,
    is_soluble,
)
from .corpus import dump_record, read_records
from .errors import (
    BadBound,
    ClosureFlagsMissing,
    CorpusFormatError,
    HypothesisFailed,
    NotAGroup,
    NotIsomorphism,
    NotSoluble,
    OrderCapExceeded,
    UnknownClass,
    UnknownName,
)
from .groups import (
    FiniteGroup,
    abelian_isomorphism,
    central_product,
    direct_product,
    subgroup_as_group,
)
from .largeness import CLAIMS, VerificationReport, scan_exceptional, verify_selector
from .radicals import (
    fitting_subgroup,
    generalized_fitting_subgroup,
    layer,
    soluble_radical,
    supersoluble_residual,
)
from .structure import (
    center,
    chief_series,
    composition_series,
    conjugacy_classes,
    derived_series,
    lower_central_series,
    normal_subgroups,
)

# -- group expressions ---------------------------------------------------------

_COMBINATOR_RE = re.compile(r"^(direct|central)\s*\(")


def parse_group_spec(text: str, *, cap=None) -> FiniteGroup:
    """Evaluate a group expression: a catalog name, direct(a,b), or
    central(a,b), nested freely."""
    text = text.strip()
    m = _COMBINATOR_RE.match(text)
    if m is None:
        return named_group(text, cap=cap)
    if not text.endswith(")"):
        raise UnknownName(f"unbalanced parentheses in {text!r}")
    parts = _split_top_level(text[m.end() : -1], text)
    if len(parts) != 2:
        raise UnknownName(f"{m.group(1)} takes exactly two group expressions: {text!r}")
    A = parse_group_spec(parts[0], cap=cap)
    B = parse_group_spec(parts[1], cap=cap)
    if m.group(1) == "direct":
        return direct_product(A, B, cap=cap)
    return _central_of_centers(A, B, cap=cap)


def _split_top_level(inner: str, whole: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UnknownName(f"unbalanced parentheses in {whole!r}")
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    if depth != 0:
        raise UnknownName(f"unbalanced parentheses in {whole!r}")
    parts.append(inner[start:])
    return parts


def _central_of_centers(A: FiniteGroup, B: FiniteGroup, *, cap=None) -> FiniteGroup:
    """The central product gluing the full centers of A and B along the
    canonical basis isomorphism (NotIsomorphism when they differ)."""
    Ag, back_a = subgroup_as_group(A, center(A))
    Bg, back_b = subgroup_as_group(B, center(B))
    iso = abelian_isomorphism(Ag, Bg)
    pairing = {back_a[a]: back_b[b] for a, b in iso.items()}
    name = None
    if A.name and B.name:
        name = f"central({A.name},{B.name})"
    return central_product(A, B, pairing, name=name, cap=cap)


def _load_corpus(path) -> list[FiniteGroup]:
    records = read_records(path)
    groups = []
    for rec in records:
        try:
            groups.append(rec.build())
        except (NotAGroup, OrderCapExceeded) as exc:
            raise CorpusFormatError(f"record does not build: {exc}", rec.line_no) from exc
    return groups


def _load_target(target: str) -> list[FiniteGroup]:
    """A corpus path if the file exists, else a group expression."""
    if Path(target).exists():
        return _load_corpus(target)
    return [parse_group_spec(target)]


# -- info ------------------------------------------------------------------------


def group_info(G: FiniteGroup) -> dict:
    """The structure report behind the info verb, as one flat dict."""
    der = derived_series(G)
    lcs = lower_central_series(G)
    chief = chief_series(G)
    comp = composition_series(G)
    soluble = is_soluble(G)
    residual = supersoluble_residual(G)
    return {
        "name": G.display_name,
        "order": G.order,
        "center_order": center(G).order,
        "conjugacy_class_sizes": sorted(len(c) for c in conjugacy_classes(G)),
        "normal_subgroup_orders": sorted(N.order for N in normal_subgroups(G)),
        "derived_series_orders": [S.order for S in der.chain],
        "lower_central_series_orders": [S.order for S in lcs.chain],
        "chief_factor_orders": list(chief.factor_orders),
        "composition_factor_orders": list(comp.factor_orders),
        "fitting_order": fitting_subgroup(G).subgroup.order,
        "layer_order": layer(G).subgroup.order,
        "generalized_fitting_order": generalized_fitting_subgroup(G).subgroup.order,
        "soluble_radical_order": soluble_radical(G).subgroup.order,
        "soluble": soluble,
        "supersoluble_residual_order": residual.order,
        "residual_minimal_or_trivial": has_minimal_supersoluble_residual(G) if soluble else False,
    }


def _render_info_text(info: dict) -> str:
    def chain(orders):
        return " > ".join(str(o) for o in orders)

    minimal = "yes" if info["residual_minimal_or_trivial"] else "no"
    if not info["soluble"]:
        minimal = "no (not soluble)"
    return "\n".join(
        [
            f"group: {info['name']}",
            f"order: {info['order']}",
            f"center order: {info['center_order']}",
            "conjugacy class sizes: " + ", ".join(map(str, info["conjugacy_class_sizes"])),
            "normal subgroup orders: " + ", ".join(map(str, info["normal_subgroup_orders"])),
            "derived series orders: " + chain(info["derived_series_orders"]),
            "lower central series orders: " + chain(info["lower_central_series_orders"]),
            "chief factor orders: " + ", ".join(map(str, info["chief_factor_orders"])),
            "composition factor orders: " + ", ".join(map(str, info["composition_factor_orders"])),
            f"fitting subgroup order: {info['fitting_order']}",
            f"layer order: {info['layer_order']}",
            f"generalized fitting subgroup order: {info['generalized_fitting_order']}",
            f"soluble radical order: {info['soluble_radical_order']}",
            f"supersoluble residual order: {info['supersoluble_residual_order']}",
            f"supersoluble residual minimal or trivial: {minimal}",
        ]
    )


def cmd_info(args) -> int:
    G = parse_group_spec(args.target)
    info = group_info(G)
    if args.format == "jsonl":
        print(json.dumps(info, separators=(",", ":")))
    else:
        print(_render_info_text(info))
    return 0


# -- verify ------------------------------------------------------------------------


def _selector_from_args(args) -> str:
    selector = args.theorem.strip()
    if ":" in selector:
        return selector
    head = selector.upper()
    if head in ("A", "C"):
        if not args.class_key:
            raise UnknownClass(f"claim {head} needs --class-key")
        return f"{head}:{args.class_key}"
    if head == "F":
        if not args.pi:
            raise UnknownClass("claim F needs --pi, e.g. --pi 2,3")
        return f"F:{args.pi}"
    if head == "G":
        if args.c is None:
            raise UnknownClass("claim G needs --c")
        return f"G:{args.c}"
    if head == "GD":
        if args.d is None:
            raise UnknownClass("claim GD needs --d")
        return f"GD:{args.d}"
    return head


def _skip_report(head: str, G: FiniteGroup, reason: str) -> VerificationReport:
    report = VerificationReport(head, G.display_name, G.order)
    report.hypotheses.append((reason, False))
    return report


def cmd_verify(args) -> int:
    selector = _selector_from_args(args)
    head = selector.partition(":")[0].upper()
    groups = _load_target(args.target)
    reports = []
    for G in groups:
        try:
            reports.append(verify_selector(G, selector))
        except NotSoluble:
            reports.append(_skip_report(head, G, "soluble"))
        except HypothesisFailed as exc:
            reports.append(_skip_report(head, G, exc.hypothesis))
    counts = {"pass": 0, "skip": 0, "fail": 0}
    for report in reports:
        counts[report.outcome] += 1
        if args.format == "jsonl":
            print(json.dumps(report.to_dict(), separators=(",", ":")))
        else:
            print(_verify_line(report))
    if args.format == "jsonl":
        print(json.dumps({"summary": counts}, separators=(",", ":")))
    else:
        print(
            f"summary: {counts['pass']} pass, {counts['skip']} skip, {counts['fail']} fail"
        )
    return 1 if counts["fail"] else 0


def _verify_line(report: VerificationReport) -> str:
    tag = report.outcome.upper()
    head = f"[{tag}] {report.theorem} {report.group} order {report.group_order}"
    if report.outcome == "skip":
        failed = ", ".join(name for name, ok in report.hypotheses if not ok)
        return f"{head}: hypothesis failed: {failed}"
    if report.outcome == "fail":
        bad = report.counterexample
        if bad is not None:
            return (
                f"{head}: counterexample: {bad.descriptor}"
                f" (centralizer order {bad.centralizer_order})"
            )
        failed = ", ".join(name for name, ok in report.checks if not ok)
        return f"{head}: failed checks: {failed}"
    detail = f"{len(report.witnesses)} witness" + ("es" if len(report.witnesses) != 1 else "")
    if report.checks:
        detail = f"{len(report.checks)} checks"
    return f"{head}: {detail}"


# -- scan ------------------------------------------------------------------------


def cmd_scan(args) -> int:
    path = Path(args.target)
    if not path.exists():
        raise UnknownName(f"corpus file not found: {args.target}")
    groups = _load_corpus(path)
    records = scan_exceptional(groups)
    counts: dict[str, int] = {}
    per_order: dict[int, int] = {}
    for rec in records:
        counts[rec.status] = counts.get(rec.status, 0) + 1
        if rec.status == "finding":
            per_order[rec.order] = per_order.get(rec.order, 0) + 1
        if args.format == "jsonl":
            out = {
                "name": rec.name,
                "order": rec.order,
                "status": rec.status,
                "residual_order": rec.residual_order,
                "witnesses": [w.to_dict() for w in rec.report.witnesses]
                if rec.report is not None
                else None,
            }
            print(json.dumps(out, separators=(",", ":")))
        elif rec.status == "finding":
            witnesses = ", ".join(
                f"order {w.order}" for w in rec.report.witnesses
            )
            print(
                f"finding: {rec.name} order {rec.order},"
                f" supersoluble residual order {rec.residual_order},"
                f" maximal abelian normal subgroups all large ({witnesses})"
            )
    summary_counts = {k: counts.get(k, 0) for k in
                      ("finding", "residual_minimal", "witness_not_large", "not_soluble")}
    if args.format == "jsonl":
        print(
            json.dumps(
                {"summary": summary_counts, "findings_per_order": per_order},
                separators=(",", ":"),
                sort_keys=True,
            )
        )
    else:
        print(
            f"scanned {len(records)} groups: {summary_counts['finding']} findings,"
            f" {summary_counts['residual_minimal']} residual-minimal,"
            f" {summary_counts['witness_not_large']} with a non-large witness,"
            f" {summary_counts['not_soluble']} skipped (not soluble)"
        )
        if per_order:
            ordered = ", ".join(f"{o}: {per_order[o]}" for o in sorted(per_order))
            print(f"findings per order: {ordered}")
    return 0


# -- construct / corpus-check -------------------------------------------------------


def cmd_construct(args) -> int:
    G = parse_group_spec(args.target)
    print(dump_record(G))
    return 0


def cmd_corpus_check(args) -> int:
    records = read_records(args.target)
    failures = 0
    for rec in records:
        label = rec.name or f"record {rec.line_no}"
        try:
            G = rec.build()
        except NotAGroup as exc:
            failures += 1
            witness = f" (witness {exc.witness})" if exc.witness is not None else ""
            print(f"line {rec.line_no}: FAIL {label}: {exc}{witness}")
            continue
        except OrderCapExceeded as exc:
            failures += 1
            print(f"line {rec.line_no}: FAIL {label}: {exc}")
            continue
        print(f"line {rec.line_no}: ok {G.display_name} order {G.order}")
    print(f"{len(records)} records, {failures} failing")
    return 1 if failures else 0


# -- entry point ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    claims = "; ".join(f"{k}: {v}" for k, v in CLAIMS.items())
    parser = argparse.ArgumentParser(
        prog="largesub",
        description="Exhaustive finite-group computations and checks that "
        "distinguished normal subgroups contain their centralizers.",
        epilog=f"catalog names: {', '.join(CATALOG_KEYS)}. "
        f"class keys: {', '.join(BUILTIN_CLASS_KEYS)}.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "jsonl"),
            default="text",
            help="output as readable text (default) or one JSON record per line",
        )

    p = sub.add_parser("info", help="structure report for one group")
    p.add_argument("target", help="group expression, e.g. 'direct(alternating(4),cyclic(2))'")
    add_format(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", help="run one claim over a group or corpus", epilog=claims)
    p.add_argument("target", help="group expression or corpus file path")
    p.add_argument(
        "--theorem",
        "--claim",
        dest="theorem",
        required=True,
        help="claim selector: A:classkey, C:classkey, D, E, F:primes, G:c, GD:d, H, B",
    )
    p.add_argument("--class-key", help="class key for claims A and C, e.g. nilpotent")
    p.add_argument("--pi", help="comma-separated primes for claim F, e.g. 2,3")
    p.add_argument("--c", type=int, help="nilpotency class bound for claim G")
    p.add_argument("--d", type=int, help="derived length bound for claim GD")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "scan",
        help="scan a corpus for soluble groups outside the residual-minimal "
        "class whose maximal abelian normal subgroups are all large",
    )
    p.add_argument("target", help="corpus file path")
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("construct", help="print the corpus record for a group expression")
    p.add_argument("target", help="group expression")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("corpus-check", help="validate every record of a corpus file")
    p.add_argument("target", help="corpus file path")
    p.set_defaults(func=cmd_corpus_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorpusFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        UnknownName,
        UnknownClass,
        NotAGroup,
        NotIsomorphism,
        OrderCapExceeded,
        BadBound,
        ClosureFlagsMissing,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
