"""Command-line interface (``shg``).

Exit codes: 0 success, 1 mathematical negative (axioms fail, no invariant
mean, not a homomorphism, subset not an ideal), 2 input or usage error,
3 a theorem check failed on a validated semihypergroup.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import homs, ideals, means
from .construct import coset_space, double_coset_space, orbit_space
from .core import (
    Measure,
    Semihypergroup,
    check_axioms,
    convolve_measures,
    find_identity,
    find_involution,
    set_convolve,
)
from .errors import AxiomError, SemihypergroupError, TheoremViolation
from .fixtures import FIXTURE_NAMES, builtin_fixture, literal_table
from .io import (
    Report,
    axiom_failure_line,
    load_action,
    load_group,
    load_map,
    load_semihypergroup,
    load_subgroup,
    load_table,
    parse_measure,
    render_shg,
)

OK, NEGATIVE, INPUT_ERROR, THEOREM = 0, 1, 2, 3


def _sets(S: Semihypergroup, sets) -> list[list[str]]:
    return [list(S.carrier.ordered(s)) for s in sets]


def _set(S: Semihypergroup, subset) -> list[str]:
    return list(S.carrier.ordered(subset))


def _subgroup_arg(value: str) -> tuple[str, ...]:
    path = Path(value)
    if path.is_file():
        return load_subgroup(path)
    return tuple(v.strip() for v in value.split(",") if v.strip())


def _cmd_check(args) -> tuple[Report | str, int]:
    table, doc = load_table(args.file)
    report = check_axioms(table)
    out = Report()
    out.extend(report.records())
    if not report.passed:
        line = axiom_failure_line(doc, report)
        if line is not None:
            out.add("line", line)
        return out, NEGATIVE
    S = Semihypergroup(table)
    out.add("elements", len(S))
    out.add("commutative", S.is_commutative)
    out.add("identity", S.identity)
    inv = S.involution
    out.add("involution", None if inv is None else [f"{k}->{v}" for k, v in inv.items()])
    return out, OK


def _cmd_construct(args) -> tuple[Report | str, int]:
    if args.kind == "orbit":
        if args.subgroup is not None:
            raise ValueError("orbit takes a single action file")
        S = orbit_space(load_action(args.source))
    else:
        if args.subgroup is None:
            raise ValueError(f"{args.kind} needs a group file and a subgroup")
        G = load_group(args.source)
        H = _subgroup_arg(args.subgroup)
        S = coset_space(G, H) if args.kind == "coset" else double_coset_space(G, H)
    return render_shg(S), OK


def _cmd_ideals(args) -> tuple[Report | str, int]:
    S = load_semihypergroup(args.file)
    out = Report()
    if args.subset is None:
        out.add("minimal_left_ideals", _sets(S, ideals.minimal_left_ideals(S)))
        out.add("minimal_right_ideals", _sets(S, ideals.minimal_right_ideals(S)))
        out.add("kernel", _set(S, ideals.kernel(S)))
        return out, OK
    subset = [v.strip() for v in args.subset.split(",") if v.strip()]
    rep = ideals.classify(S, subset, side=args.side)
    out.add("subset", _set(S, rep.subset))
    out.add("left_ideal", rep.is_left)
    out.add("right_ideal", rep.is_right)
    out.add("two_sided_ideal", rep.is_two_sided)
    out.add("minimal_left", rep.is_minimal_left)
    out.add("minimal_right", rep.is_minimal_right)
    for x, a, z in rep.left_witnesses[:1]:
        out.add("left_witness", f"supp(p_{x} * p_{a}) contains {z}")
    for a, x, z in rep.right_witnesses[:1]:
        out.add("right_witness", f"supp(p_{a} * p_{x}) contains {z}")
    return out, OK if rep else NEGATIVE


def _cmd_kernel(args) -> tuple[Report | str, int]:
    S = load_semihypergroup(args.file)
    check = ideals.kernel_sandwich_check(S)
    out = Report()
    out.add("kernel", _set(S, check.kernel))
    out.add("union_minimal_left", _set(S, check.union_minimal_left))
    out.add("union_minimal_right", _set(S, check.union_minimal_right))
    out.add("sandwich", "PASS" if check.ok else "FAIL")
    if not check.ok:
        raise TheoremViolation("; ".join(check.failures))
    return out, OK


def _witness_text(m: Measure) -> str:
    return " ".join(str(w) for w in m.weights)


def _cmd_means(args) -> tuple[Report | str, int]:
    S = load_semihypergroup(args.file)
    w = means.find_invariant_mean(S, args.side)
    out = Report()
    out.add("side", args.side)
    out.add("status", w.status)
    out.add("elements", list(S.names))
    if not w.found:
        return out, NEGATIVE
    out.add("witness", _witness_text(w.weights))
    out.add("solution_dimension", w.solution_dimension)
    return out, OK


def _cmd_hom(args) -> tuple[Report | str, int]:
    src_path, dst_path, mapping = load_map(args.map)
    if args.source is not None:
        src_path = Path(args.source)
    if args.target is not None:
        dst_path = Path(args.target)
    S = load_semihypergroup(src_path)
    T = load_semihypergroup(dst_path)
    phi = homs.ElementMap.from_dict(S, T, mapping)
    verdict = homs.is_homomorphism(phi, S, T)
    out = Report()
    out.add("homomorphism", verdict.ok)
    if not verdict.ok:
        x, y = verdict.witness
        out.add("witness", f"({x}, {y})")
        out.add("pushforward", str(verdict.pushed))
        out.add("expected", str(verdict.expected))
        return out, NEGATIVE
    image = homs.image_semihypergroup(phi, S, T)
    out.add("image", list(image.names))
    if not homs.support_lemma_check(phi, S, T):
        raise TheoremViolation("support lemma failed on a verified homomorphism")
    out.add("support_lemma", "PASS")
    return out, OK


def _cmd_arens(args) -> tuple[Report | str, int]:
    S = load_semihypergroup(args.file)
    mu = parse_measure(args.mu, S.carrier)
    nu = parse_measure(args.nu, S.carrier)
    left = means.arens_product(S, mu, nu, "left")
    right = means.arens_product(S, mu, nu, "right")
    conv = convolve_measures(S, mu, nu)
    out = Report()
    out.add("left", str(left))
    out.add("right", str(right))
    out.add("convolution", str(conv))
    if not left == right == conv:
        raise TheoremViolation("Arens products disagree with convolution")
    out.add("agree", True)
    return out, OK


def _cmd_fixtures(args) -> tuple[Report | str, int]:
    if args.name is None:
        return "\n".join(FIXTURE_NAMES) + "\n", OK
    if args.literal:
        return render_shg(literal_table(args.name)), OK
    try:
        return render_shg(builtin_fixture(args.name)), OK
    except AxiomError as exc:
        out = Report()
        out.extend(exc.report.records())
        return out, NEGATIVE


def theorem_report(S: Semihypergroup) -> Report:
    """Run every theorem check on ``S``; raises TheoremViolation on failure."""
    out = Report()
    out.extend(S.report.records())
    out.add("elements", len(S))
    out.add("commutative", S.is_commutative)
    out.add("identity", find_identity(S))
    inv = find_involution(S)
    out.add("involution", None if inv is None else [f"{k}->{v}" for k, v in inv.items()])

    mins = ideals.minimal_left_ideals(S)
    out.add("minimal_left_ideals", _sets(S, mins))
    out.add("minimal_right_ideals", _sets(S, ideals.minimal_right_ideals(S)))
    if len(S) <= ideals.scan_bound():
        closure = ideals.minimal_left_ideals(S, "closure")
        if closure != mins:
            raise TheoremViolation("closure and scan disagree on minimal left ideals")
        for L in ideals.left_ideals(S):
            ideals.is_minimal_left_ideal(S, L)
        out.add("minimality_criteria", "PASS")
    sandwich = ideals.kernel_sandwich_check(S)
    if not sandwich.ok:
        raise TheoremViolation("; ".join(sandwich.failures))
    out.add("kernel", _set(S, sandwich.kernel))
    out.add("kernel_sandwich", "PASS")
    for I in mins:
        for x in S.names:
            t = set_convolve(S, I, [x])
            if not ideals.is_left_ideal(S, t):
                raise TheoremViolation(f"I*{{{x}}} is not a left ideal")
    out.add("translates_are_left_ideals", "PASS")

    lim = means.find_invariant_mean(S, "left")
    rim = means.find_invariant_mean(S, "right")
    out.add("lim", _witness_text(lim.weights) if lim.found else None)
    out.add("rim", _witness_text(rim.weights) if rim.found else None)
    if S.is_commutative:
        means.lim_exists_commutative_check(S)
        out.add("lim_commutative", "PASS")
    out.add("rim_unique_minimal_left", means.rim_implies_unique_minimal_left_check(S).status)

    for x in S.names:
        for y in S.names:
            px, py = S.point(x), S.point(y)
            if not (
                means.arens_product(S, px, py, "left")
                == means.arens_product(S, px, py, "right")
                == S.entry(x, y)
            ):
                raise TheoremViolation(f"Arens product of p_{x}, p_{y} differs from the table")
            for z in S.names:
                f = means.FunctionVector.indicator(S.carrier, [z])
                if not means.duality_check(S, px, py, f):
                    raise TheoremViolation("duality identity failed")
    out.add("arens_point_masses", "PASS")
    out.add("duality_point_masses", "PASS")
    return out


def _cmd_report(args) -> tuple[Report | str, int]:
    table, doc = load_table(args.file)
    report = check_axioms(table)
    if not report.passed:
        out = Report()
        out.extend(report.records())
        return out, NEGATIVE
    return theorem_report(Semihypergroup(table)), OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shg", description="Finite semihypergroups with exact rational convolution."
    )
    parser.add_argument("--format", choices=("text", "json-lines"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check the axioms of a .shg file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build a quotient semihypergroup")
    p.add_argument("kind", choices=("coset", "double-coset", "orbit"))
    p.add_argument("source", help="group file (coset, double-coset) or action file (orbit)")
    p.add_argument("subgroup", nargs="?", help="subgroup file or comma-separated elements")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("ideals", help="minimal ideals, or classify one subset")
    p.add_argument("file")
    p.add_argument("--subset", help="comma-separated elements")
    p.add_argument("--side", choices=("left", "right", "two-sided"), default="left")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("kernel", help="kernel and the sandwich inclusions")
    p.add_argument("file")
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("means", help="search for an invariant mean")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("file")
    p.set_defaults(func=_cmd_means)

    p = sub.add_parser("hom", help="test a map for the homomorphism property")
    p.add_argument("--map", required=True)
    p.add_argument("source", nargs="?")
    p.add_argument("target", nargs="?")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("arens", help="Arens products of two measures")
    p.add_argument("file")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=_cmd_arens)

    p = sub.add_parser("fixtures", help="list or print built-in fixtures")
    p.add_argument("name", nargs="?")
    p.add_argument("--literal", action="store_true", help="print the table as tabulated")
    p.set_defaults(func=_cmd_fixtures)

    p = sub.add_parser("report", help="run every theorem check on one input")
    p.add_argument("file")
    p.set_defaults(func=_cmd_report)
    return parser


def run_cli(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, code = args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=stderr)
        return THEOREM
    except (SemihypergroupError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=stderr)
        return INPUT_ERROR
    stdout.write(result if isinstance(result, str) else result.render(args.format))
    return code


def main(argv=None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
