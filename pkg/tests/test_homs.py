from itertools import product

import pytest
from hypothesis import given, strategies as st

from semihyper import (
    CarrierMismatchError,
    ElementMap,
    NotAnIdealError,
    PreconditionError,
    SearchSpaceError,
    builtin_fixture,
    check_axioms,
    convolve_measures,
    cyclic_group,
    enumerate_homomorphisms,
    from_semigroup,
    image_semihypergroup,
    is_homomorphism,
    is_left_ideal,
    left_ideals,
    pull_ideal,
    push_ideal,
    pushforward,
    support_lemma_check,
    symmetric_group,
)
from semihyper.io import load_map, load_semihypergroup

from strategies import semihypergroups, signed_measures


def brute_force_homs(S, T):
    """Every total map checked pair by pair with plain dictionaries."""
    found = []
    for images in product(range(len(T)), repeat=len(S)):
        phi = dict(zip(S.names, (T.names[i] for i in images)))
        ok = True
        for x in S.names:
            for y in S.names:
                pushed = {}
                for z, w in S.entry(x, y).items():
                    pushed[phi[z]] = pushed.get(phi[z], 0) + w
                if pushed != dict(T.entry(phi[x], phi[y]).items()):
                    ok = False
        if ok:
            found.append(images)
    return found


@pytest.fixture
def K():
    return builtin_fixture("nonminimal_translate")


class TestVerification:
    def test_identity(self, fixtures):
        for S in fixtures.values():
            assert is_homomorphism(ElementMap.identity(S.carrier), S, S)

    def test_constant_to_idempotent(self, K):
        phi = ElementMap.constant(K.carrier, K.carrier, "a")
        assert K.entry("a", "a") == K.point("a")
        assert is_homomorphism(phi, K, K)

    def test_quotient_map_is_not_a_homomorphism(self, fixture_dir):
        source_path, target_path, mapping = load_map(fixture_dir / "s4_to_cosets.map")
        S, T = load_semihypergroup(source_path), load_semihypergroup(target_path)
        verdict = is_homomorphism(ElementMap.from_dict(S, T, mapping), S, T)
        assert not verdict
        x, y = verdict.witness
        assert verdict.pushed != verdict.expected
        assert len(verdict.pushed.support) == 1 and len(verdict.expected.support) == 2
        assert (x, y) == ("e", "(34)")

    def test_carrier_mismatch(self, K, fixtures):
        phi = ElementMap.identity(K.carrier)
        with pytest.raises(CarrierMismatchError):
            is_homomorphism(phi, K, fixtures["z2"])

    def test_partial_map_rejected(self, K):
        with pytest.raises(ValueError, match="not total"):
            ElementMap.from_dict(K, K, {"a": "a"})


class TestImagesAndIdeals:
    def test_identity_image(self, K):
        phi = ElementMap.identity(K.carrier)
        assert image_semihypergroup(phi, K, K).same_table(K)
        for I in left_ideals(K):
            assert push_ideal(phi, K, K, I) == I
            assert pull_ideal(phi, K, K, I) == I

    def test_constant_image(self, K):
        phi = ElementMap.constant(K.carrier, K.carrier, "a")
        image = image_semihypergroup(phi, K, K)
        assert image.names == ("a",)
        assert push_ideal(phi, K, K, {"a", "c"}) == {"a"}
        assert pull_ideal(phi, K, K, {"a", "c"}) == set(K.names)
        assert pull_ideal(phi, K, K, {"c"}) is None

    def test_group_quotient(self):
        Z4, Z2 = from_semigroup(cyclic_group(4)), from_semigroup(cyclic_group(2))
        phi = ElementMap.from_dict(Z4, Z2, {"0": "0", "1": "1", "2": "0", "3": "1"})
        assert image_semihypergroup(phi, Z4, Z2).same_table(Z2)
        assert push_ideal(phi, Z4, Z2, Z4.names) == set(Z2.names)
        assert pull_ideal(phi, Z4, Z2, Z2.names) == set(Z4.names)

    def test_preconditions(self, K):
        phi = ElementMap.identity(K.carrier)
        with pytest.raises(NotAnIdealError):
            push_ideal(phi, K, K, {"b"})
        with pytest.raises(NotAnIdealError):
            pull_ideal(phi, K, K, {"b"})
        bad = ElementMap.from_dict(K, K, {"a": "b", "b": "a", "c": "c"})
        with pytest.raises(PreconditionError):
            image_semihypergroup(bad, K, K)


class TestEnumeration:
    def test_z2(self):
        Z2 = from_semigroup(cyclic_group(2))
        homs = enumerate_homomorphisms(Z2, Z2)
        assert [phi.images for phi in homs] == [(0, 0), (0, 1)]

    def test_to_one_point(self, K):
        point = from_semigroup(["u"], [[0]])
        assert len(enumerate_homomorphisms(K, point)) == 1

    def test_self_maps_of_translate_fixture(self, K):
        homs = enumerate_homomorphisms(K, K)
        assert [phi.images for phi in homs] == brute_force_homs(K, K)
        images = {phi.images for phi in homs}
        assert (0, 1, 2) in images and (0, 0, 0) in images

    def test_cap(self):
        S4 = from_semigroup(symmetric_group(4))
        with pytest.raises(SearchSpaceError, match="cap"):
            enumerate_homomorphisms(S4, S4)

    def test_fixture_pairs_match_brute_force(self, fixtures):
        for S in fixtures.values():
            for T in fixtures.values():
                got = [phi.images for phi in enumerate_homomorphisms(S, T)]
                assert got == brute_force_homs(S, T)

    @given(semihypergroups(max_n=4), semihypergroups(max_n=3))
    def test_matches_brute_force(self, S, T):
        assert [phi.images for phi in enumerate_homomorphisms(S, T)] == brute_force_homs(S, T)


@given(semihypergroups(max_n=4), semihypergroups(max_n=3), st.data())
def test_transport_properties(S, T, data):
    for phi in enumerate_homomorphisms(S, T):
        assert support_lemma_check(phi, S, T)
        image = image_semihypergroup(phi, S, T)
        assert check_axioms(image.table).passed
        for I in left_ideals(S):
            assert is_left_ideal(image, push_ideal(phi, S, T, I))
        for J in left_ideals(T):
            pre = pull_ideal(phi, S, T, J)
            assert pre is None or is_left_ideal(S, pre)
        mu = data.draw(signed_measures(S.carrier))
        nu = data.draw(signed_measures(S.carrier))
        assert pushforward(phi, convolve_measures(S, mu, nu)) == convolve_measures(
            T, pushforward(phi, mu), pushforward(phi, nu)
        )


@given(semihypergroups(max_n=3))
def test_composition(S):
    homs = enumerate_homomorphisms(S, S)
    for f in homs[:5]:
        for g in homs[:5]:
            assert is_homomorphism(f.compose(g), S, S)
