"""Acceptance criteria, one marked group of tests per criterion.

The terminal summary prints a PASS/FAIL line per criterion, including the
total runtime against its limit.  Time limits are also asserted inside each
test through the ``stopwatch`` fixture.
"""

from __future__ import annotations

import io
import random
from fractions import Fraction
from functools import lru_cache

import pytest
import sympy

from semihyper import (
    CayleyTable,
    Measure,
    builtin_fixture,
    check_axioms,
    convolve_measures,
    coset_space,
    cyclic_group,
    double_coset_space,
    enumerate_homomorphisms,
    find_identity,
    find_involution,
    find_invariant_mean,
    from_semigroup,
    image_semihypergroup,
    is_left_ideal,
    is_minimal_left_ideal,
    kernel,
    kernel_sandwich_check,
    left_ideals,
    lim_exists_commutative_check,
    literal_table,
    minimal_left_ideals,
    minimal_right_ideals,
    orbit_space,
    pull_ideal,
    push_ideal,
    rim_implies_unique_minimal_left_check,
    set_convolve,
    support_lemma_check,
    symmetric_group,
    three_element_parametric,
    trivial_action,
)
from semihyper.cli import run_cli
from semihyper.fuzz import (
    random_commutative_semihypergroup,
    random_function,
    random_measure,
    random_semihypergroup,
    three_element_base_draw,
)
from semihyper.io import load_group, load_subgroup, parse_shg
from semihyper.means import arens_product, duality_check

from conftest import CONSTRUCTIBLE, FIXTURE_DIR
from oracles import (
    mean_vertices_oracle,
    minimal_left_ideals_oracle,
    minimal_right_ideals_oracle,
)

criterion = pytest.mark.criterion
half = Fraction(1, 2)


@lru_cache(maxsize=None)
def fuzzed(count: int, max_n: int, seed: int):
    rng = random.Random(seed)
    return tuple(random_semihypergroup(rng, max_n) for _ in range(count))


@lru_cache(maxsize=None)
def fuzzed_commutative(count: int, max_n: int, seed: int):
    rng = random.Random(seed)
    return tuple(random_commutative_semihypergroup(rng, max_n) for _ in range(count))


def all_fixtures():
    return [builtin_fixture(name) for name in CONSTRUCTIBLE]


# 1 ---------------------------------------------------------------------------

C1 = criterion(1, "S4/D8 coset table reproduces the literal table", limit=1)

PRINTED_ORDER = ("H", "s1H", "s2H")


@lru_cache(maxsize=None)
def cli_coset_table():
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(
        ["construct", "coset", str(FIXTURE_DIR / "s4.group"), str(FIXTURE_DIR / "d8.subgroup")],
        out,
        err,
    )
    assert code == 0, err.getvalue()
    S = parse_shg(out.getvalue())
    G = load_group(FIXTURE_DIR / "s4.group")
    H = load_subgroup(FIXTURE_DIR / "d8.subgroup")
    label = {}
    for name in S.names:
        members = {G.mul(name[:-1], h) for h in H}
        label[name] = "H" if "e" in members else "s1H" if "(124)" in members else "s2H"
    return S.relabel([label[n] for n in S.names])


@C1
@pytest.mark.parametrize("y", PRINTED_ORDER)
@pytest.mark.parametrize("x", PRINTED_ORDER)
def test_c1_coset_entry_matches_literal(x, y, stopwatch):
    S = cli_coset_table()
    literal = literal_table("s4_mod_d8").entry(x, y)
    assert dict(S.entry(x, y).items()) == dict(literal.items()), (
        f"{x} * {y}: computed {S.entry(x, y)}, literal {literal}"
    )
    stopwatch.check()


# 2 ---------------------------------------------------------------------------

C2 = criterion(2, "axiom suite on the tabulated and parametric examples", limit=10)


@C2
def test_c2_tabulated_counterexample_table_passes_axioms(stopwatch):
    report = check_axioms(literal_table("remark_5_9"))
    assert report.passed, report.summary()
    stopwatch.check()


@C2
def test_c2_default_parametric_instance_passes_axioms(stopwatch):
    third, quarter = Fraction(1, 3), Fraction(1, 4)
    S = three_element_parametric(third, third, third, half, quarter, quarter, half, half)
    assert check_axioms(S.table).passed
    stopwatch.check()


@C2
def test_c2_constraint_satisfying_draws_pass_axioms(stopwatch):
    rng = random.Random(2)
    failures = 0
    first = None
    for _ in range(1000):
        params = three_element_base_draw(rng)
        try:
            S = three_element_parametric(*params)
            ok = check_axioms(S.table).passed
        except ValueError as exc:
            ok = False
            first = first or (params, str(exc))
        failures += not ok
    assert failures == 0, f"{failures}/1000 draws fail; first: {first}"
    stopwatch.check()


# 3 ---------------------------------------------------------------------------

C3 = criterion(3, "ideal theory on the tabulated counterexample", limit=1)


@C3
def test_c3_tabulated_counterexample_ideals(stopwatch):
    S = builtin_fixture("remark_5_9")
    K = frozenset(S.names)
    assert minimal_left_ideals(S) == [frozenset("a")]
    for x, expected in (("b", {"a", "b"}), ("c", {"a", "c"})):
        translate = set_convolve(S, {"a"}, {x})
        assert translate == expected
        assert is_left_ideal(S, translate)
        assert not is_minimal_left_ideal(S, translate).minimal
    assert kernel(S) == K
    assert kernel_sandwich_check(S).ok
    stopwatch.check()


# 4 ---------------------------------------------------------------------------

C4 = criterion(4, "three minimality criteria agree; minimal left ideals disjoint", limit=60)


def _minimality_agrees(S):
    for I in left_ideals(S):
        v = is_minimal_left_ideal(S, I)
        assert v.minimal == v.no_proper_subideal == v.principal_equal == v.translate_equal, (S, I)
    minimal = minimal_left_ideals(S)
    for i, A in enumerate(minimal):
        for B in minimal[i + 1 :]:
            assert not A & B, (S, A, B)
    return len(minimal)


@C4
def test_c4_fixtures(stopwatch):
    for S in all_fixtures():
        assert _minimality_agrees(S) >= 1
    stopwatch.check()


@C4
def test_c4_fuzzed(stopwatch):
    for S in fuzzed(1000, 6, 4):
        assert len(S) <= 6
        _minimality_agrees(S)
    stopwatch.check()


# 5 ---------------------------------------------------------------------------

C5 = criterion(5, "invariant means", limit=60)


def independent_invariance(S, weights, side):
    """sympy check of ``sum_y m_y (p_x * p_y)(z) = m_z`` (left) or with
    ``p_y * p_x`` (right), for all ``x, z``."""
    n = len(S)
    m = sympy.Matrix([sympy.Rational(w.numerator, w.denominator) for w in weights])
    if any(v < 0 for v in m) or sum(m) != 1:
        return False
    for x in S.names:
        A = sympy.zeros(n, n)
        for j, y in enumerate(S.names):
            cell = S.entry(x, y) if side == "left" else S.entry(y, x)
            for k, w in enumerate(cell.weights):
                A[j, k] = sympy.Rational(w.numerator, w.denominator)
        if A.T * m != m:
            return False
    return True


@C5
def test_c5_tabulated_counterexample_means(stopwatch):
    S = builtin_fixture("remark_5_9")
    lim = find_invariant_mean(S, "left")
    assert lim.found and lim.weights == Measure.point(S.carrier, "a")
    assert not find_invariant_mean(S, "right").found
    stopwatch.check()


@C5
def test_c5_coset_space_right_mean_is_uniform(stopwatch):
    S = builtin_fixture("s4_mod_d8")
    rim = find_invariant_mean(S, "right")
    assert rim.found and rim.weights == Measure.uniform(S.carrier)
    assert independent_invariance(S, rim.weights.weights, "right")
    stopwatch.check()


@C5
def test_c5_commutative_instances_have_left_means(stopwatch):
    for S in fuzzed_commutative(300, 6, 5):
        assert lim_exists_commutative_check(S)
        lim = find_invariant_mean(S, "left")
        assert independent_invariance(S, lim.weights.weights, "left")
    stopwatch.check()


# 6 ---------------------------------------------------------------------------

C6 = criterion(6, "right invariant mean forces a unique minimal left ideal", limit=60)


def _rim_consistent(S):
    verdict = rim_implies_unique_minimal_left_check(S)
    rim = find_invariant_mean(S, "right")
    if rim.found:
        assert verdict.status == "pass" and len(verdict.minimal_left) == 1
        assert independent_invariance(S, rim.weights.weights, "right")
    else:
        assert verdict.status == "not applicable"


@C6
def test_c6_fixtures_and_fuzzed(stopwatch):
    for S in all_fixtures() + list(fuzzed(1000, 6, 6)):
        _rim_consistent(S)
    stopwatch.check()


@C6
def test_c6_zero_semigroup_with_two_minimal_left_ideals_has_no_rim(stopwatch):
    # xy = y: the object with disjoint minimal left ideals {x} and {y}.
    S = builtin_fixture("right_zero")
    assert minimal_left_ideals(S) == [frozenset("x"), frozenset("y")]
    assert not find_invariant_mean(S, "right").found
    assert rim_implies_unique_minimal_left_check(S).status == "not applicable"
    stopwatch.check()


# 7 ---------------------------------------------------------------------------

C7 = criterion(7, "dual algebra: duality and Arens products", limit=30)


@C7
@pytest.mark.parametrize("name", CONSTRUCTIBLE)
def test_c7_duality_and_arens(name, stopwatch):
    S = builtin_fixture(name)
    rng = random.Random(7)
    for _ in range(10_000):
        mu = random_measure(rng, S.carrier)
        nu = random_measure(rng, S.carrier)
        f = random_function(rng, S.carrier)
        assert duality_check(S, mu, nu, f)
        conv = convolve_measures(S, mu, nu)
        assert arens_product(S, mu, nu, "left") == conv
        assert arens_product(S, mu, nu, "right") == conv
    for x in S.names:
        for y in S.names:
            px, py = S.point(x), S.point(y)
            assert arens_product(S, px, py, "left") == S.entry(x, y)
            assert arens_product(S, px, py, "right") == S.entry(x, y)
    stopwatch.check()


# 8 ---------------------------------------------------------------------------

C8 = criterion(8, "homomorphisms transport supports, ideals and axioms", limit=60)


@C8
def test_c8_enumerated_homomorphisms(stopwatch):
    fixtures = all_fixtures()
    total = 0
    for S in fixtures:
        for T in fixtures:
            for phi in enumerate_homomorphisms(S, T):
                total += 1
                assert support_lemma_check(phi, S, T)
                image = image_semihypergroup(phi, S, T)
                assert check_axioms(image.table).passed
                for I in left_ideals(S):
                    assert is_left_ideal(image, push_ideal(phi, S, T, I))
                for J in left_ideals(T):
                    pre = pull_ideal(phi, S, T, J)
                    assert pre is None or is_left_ideal(S, pre)
    assert total > 0
    stopwatch.check()


# 9 ---------------------------------------------------------------------------

C9 = criterion(9, "closure and simplex agree with brute-force oracles", limit=120)


@C9
def test_c9_closure_matches_power_set_scan(stopwatch):
    instances = all_fixtures() + list(fuzzed(300, 8, 9))
    assert max(len(S) for S in instances) <= 8
    for S in instances:
        left = set(minimal_left_ideals(S, method="closure"))
        right = set(minimal_right_ideals(S, method="closure"))
        assert left == minimal_left_ideals_oracle(S), S
        assert right == minimal_right_ideals_oracle(S), S
        assert set(minimal_left_ideals(S, method="scan")) == left
    stopwatch.check()


@C9
def test_c9_simplex_matches_vertex_enumeration(stopwatch):
    instances = [S for S in all_fixtures() if len(S) <= 4] + list(fuzzed(200, 4, 10))
    for S in instances:
        for side in ("left", "right"):
            vertices = mean_vertices_oracle(S, side)
            witness = find_invariant_mean(S, side)
            assert witness.found == bool(vertices), (S, side)
            if witness.found:
                assert witness.weights.weights in vertices
    stopwatch.check()


# 10 --------------------------------------------------------------------------

C10 = criterion(10, "coset, double-coset and orbit constructors", limit=10)


def _is_group_table(S, G: CayleyTable, names) -> bool:
    """``S`` has point-mass products matching ``G`` under ``names``."""
    for x in G.names:
        for y in G.names:
            entry = S.entry(names[x], names[y])
            if entry.support != {names[G.mul(x, y)]}:
                return False
    return True


@C10
def test_c10_normal_coset_space_is_quotient_group(stopwatch):
    S3, S4, Z6 = symmetric_group(3), symmetric_group(4), cyclic_group(6)
    cases = [
        (S3, ("e", "(123)", "(132)")),
        (S4, ("e", "(12)(34)", "(13)(24)", "(14)(23)")),
        (S4, tuple(g for g in S4.names if _is_even(g))),
        (Z6, ("0", "3")),
        (Z6, ("0", "2", "4")),
    ]
    for G, N in cases:
        assert G.is_normal(N)
        S = coset_space(G, N)
        Q = G.quotient(N)
        rename = {}
        for q in Q.names:
            coset = {G.mul(q[:-1], n) for n in N}
            rename[q] = next(s for s in S.names if {G.mul(s[:-1], n) for n in N} == coset)
        assert _is_group_table(S, Q, rename)
    stopwatch.check()


def _is_even(name: str) -> bool:
    cycles = [] if name == "e" else name[1:-1].split(")(")
    return sum(len(c) - 1 for c in cycles) % 2 == 0


@C10
def test_c10_double_coset_spaces_are_hypergroups(stopwatch):
    S3, S4 = symmetric_group(3), symmetric_group(4)
    cases = [
        (S3, ("e", "(12)")),
        (S3, ("e", "(123)", "(132)")),
        (S4, ("e", "(12)")),
        (S4, ("e", "(1234)", "(13)(24)", "(1432)", "(13)", "(24)", "(12)(34)", "(14)(23)")),
        (S4, ("e", "(123)", "(132)")),
    ]
    for G, H in cases:
        S = double_coset_space(G, H)
        assert find_identity(S) is not None
        assert find_involution(S) is not None
    stopwatch.check()


@C10
def test_c10_trivial_orbit_space_recovers_group(stopwatch):
    for G in (cyclic_group(5), symmetric_group(3), symmetric_group(4)):
        S = orbit_space(trivial_action(G))
        assert S.same_table(from_semigroup(G))
    stopwatch.check()
