from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semihyper import (
    AxiomError,
    CarrierMismatchError,
    ConvolutionTable,
    ElementSet,
    FloatInputError,
    Measure,
    Semihypergroup,
    UnknownElementError,
    as_rational,
    builtin_fixture,
    check_axioms,
    convolve_measures,
    convolve_points,
    cyclic_group,
    find_identity,
    find_involution,
    from_semigroup,
    identity_sidedness,
    is_commutative,
    literal_table,
    set_convolve,
    support,
    zero_semigroup,
)

from semihyper.fixtures import reorder

from oracles import associativity_oracle
from strategies import probability_measures, semihypergroups, signed_measures

half = Fraction(1, 2)


class TestRational:
    def test_lowest_terms(self):
        assert as_rational(Fraction(2, 4)) == Fraction(1, 2)
        assert as_rational("-6/4") == Fraction(-3, 2)
        assert as_rational(3) == 3

    @pytest.mark.parametrize("bad", [0.5, "0.5", "1e-3"])
    def test_floats_rejected(self, bad):
        with pytest.raises(FloatInputError):
            as_rational(bad)

    def test_bool_is_not_a_number(self):
        with pytest.raises(TypeError):
            as_rational(True)


class TestMeasure:
    def test_support(self):
        K = ElementSet(("a", "b", "c"))
        assert support(Measure.from_mapping(K, {"a": half, "c": half})) == {"a", "c"}
        assert support(Measure.point(K, "b")) == {"b"}
        assert support(Measure.zero(K)) == frozenset()

    def test_probability(self):
        K = ElementSet(("a", "b"))
        assert Measure.uniform(K).is_probability
        assert not Measure.from_mapping(K, {"a": half}).is_probability
        assert not Measure.from_mapping(K, {"a": 2, "b": -1}).is_probability

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            ElementSet(("a", "a"))

    def test_unknown_element(self):
        with pytest.raises(UnknownElementError):
            Measure.point(ElementSet(("a",)), "z")


def test_convolve_points_reads_table():
    S = from_semigroup(cyclic_group(2))
    assert convolve_points(S, "1", "1") == S.point("0")
    S = builtin_fixture("s4_mod_d8")
    assert convolve_points(S, "s1H", "H") == S.point("s1H")
    with pytest.raises(UnknownElementError):
        convolve_points(S, "H", "nope")


def test_computed_coset_entry_differs_from_literal():
    S = builtin_fixture("s4_mod_d8")
    assert convolve_points(S, "s1H", "s2H") == Measure.from_mapping(S.carrier, {"H": half, "s2H": half})
    literal = literal_table("s4_mod_d8").entry("s1H", "s2H")
    assert literal.support == {"H", "s1H"}


def test_convolve_measures_on_translate_fixture():
    S = builtin_fixture("nonminimal_translate")
    mu = Measure.from_mapping(S.carrier, {"b": half, "c": half})
    assert convolve_measures(S, mu, S.point("a")) == S.point("a")


def test_convolve_measures_carrier_mismatch():
    S = builtin_fixture("z2")
    T = builtin_fixture("left_zero")
    with pytest.raises(CarrierMismatchError):
        convolve_measures(S, S.point("0"), T.point("x"))


def test_set_convolve():
    S = builtin_fixture("nonminimal_translate")
    assert set_convolve(S, {"a"}, {"b"}) == {"a", "c"}
    assert set_convolve(S, S.names, {"a"}) == {"a"}
    assert set_convolve(S, set(), {"b"}) == frozenset()


class TestCheckAxioms:
    def test_row_summing_to_half_fails_a3(self):
        K = ("a", "b")
        table = ConvolutionTable.from_products(
            K, {("a", "a"): {"a": half}, ("a", "b"): "b", ("b", "a"): "b", ("b", "b"): "a"}
        )
        report = check_axioms(table)
        assert not report.a3_ok and report.a3_violation == ("a", "a")
        assert "p_a * p_a" in report.summary()

    def test_non_associative_table_names_triple(self):
        report = check_axioms(literal_table("remark_5_9"))
        assert report.a3_ok and not report.a1_ok
        assert report.a1_violation == ("a", "a", "b")

    def test_both_failures_reported(self):
        K = ("a", "b")
        table = ConvolutionTable.from_products(
            K,
            {("a", "a"): {"a": half}, ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a"},
        )
        report = check_axioms(table)
        assert not report.a3_ok and not report.a1_ok

    def test_vacuous_axioms_recorded(self):
        report = check_axioms(builtin_fixture("z2").table)
        assert report.passed
        assert "vacuous" in report.a2 and "vacuous" in report.a4

    def test_constructor_raises(self):
        with pytest.raises(AxiomError):
            Semihypergroup(literal_table("s4_mod_d8"))

    @given(semihypergroups())
    def test_agrees_with_oracle(self, S):
        assert associativity_oracle(S)

    @given(semihypergroups(), st.randoms(use_true_random=False))
    def test_declaration_order_irrelevant(self, S, rng):
        order = list(S.names)
        rng.shuffle(order)
        assert check_axioms(reorder(S, order).table).passed


class TestStructureFlags:
    def test_commutative(self):
        assert is_commutative(builtin_fixture("example_3_2_default"))
        assert not is_commutative(builtin_fixture("s4_mod_d8"))
        assert is_commutative(from_semigroup(cyclic_group(4)))

    def test_identity(self):
        assert find_identity(builtin_fixture("example_3_2_default")) == "e"
        assert find_identity(builtin_fixture("s4_mod_d8")) is None
        one = from_semigroup(["u"], [[0]])
        assert find_identity(one) == "u"

    def test_coset_space_sidedness(self):
        sides = identity_sidedness(builtin_fixture("s4_mod_d8"))
        assert sides["right"] == ("H",)
        assert sides["left"] == ()

    def test_involution(self):
        S = builtin_fixture("example_3_2_default")
        assert find_involution(S) == {x: x for x in S.names}
        assert find_involution(builtin_fixture("nonminimal_translate")) is None
        Z3 = from_semigroup(cyclic_group(3))
        assert find_involution(Z3) == {"0": "0", "1": "2", "2": "1"}

    def test_zero_semigroup_has_no_identity(self):
        assert find_identity(zero_semigroup(2, "left")) is None


@given(semihypergroups(), st.data())
def test_probability_closed_under_convolution(S, data):
    mu = data.draw(probability_measures(S.carrier))
    nu = data.draw(probability_measures(S.carrier))
    out = convolve_measures(S, mu, nu)
    assert out.is_probability
    assert out.support == set_convolve(S, mu.support, nu.support)


@given(semihypergroups(max_n=4), st.data())
def test_associativity_on_signed_measures(S, data):
    mu, nu, rho = (data.draw(signed_measures(S.carrier)) for _ in range(3))
    left = convolve_measures(S, convolve_measures(S, mu, nu), rho)
    right = convolve_measures(S, mu, convolve_measures(S, nu, rho))
    assert left == right


@given(semihypergroups())
def test_identity_unique(S):
    identities = [
        e for e in S.names
        if all(S.entry(e, x) == S.point(x) == S.entry(x, e) for x in S.names)
    ]
    assert len(identities) <= 1
    assert find_identity(S) == (identities[0] if identities else None)
