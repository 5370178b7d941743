import random

import pytest

from semihyper import check_axioms, minimal_left_ideals, render_shg
from semihyper.fuzz import (
    idempotent_kernel,
    random_commutative_semihypergroup,
    random_semihypergroup,
    rectangular_band,
    transformation_semigroup,
)


def test_seeded_runs_repeat():
    a = [render_shg(random_semihypergroup(random.Random(11))) for _ in range(3)]
    b = [render_shg(random_semihypergroup(random.Random(11))) for _ in range(3)]
    assert a == b


@pytest.mark.parametrize("side", ["left", "right"])
def test_idempotent_kernel(side):
    rng = random.Random(3)
    for _ in range(50):
        S = idempotent_kernel(rng, rng.randint(1, 6), side)
        assert check_axioms(S.table).passed


def test_rectangular_band_ideals():
    S = rectangular_band(3, 2)
    assert [len(I) for I in minimal_left_ideals(S)] == [3, 3]


def test_size_bounds():
    rng = random.Random(5)
    for _ in range(200):
        assert len(random_semihypergroup(rng, 4)) <= 4
        assert len(transformation_semigroup(rng, 5)) <= 5
        assert random_commutative_semihypergroup(rng, 5).is_commutative
