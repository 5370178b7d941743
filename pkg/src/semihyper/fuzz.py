"""Seeded random generators of finite semihypergroups, measures and functions.

Every generator takes a :class:`random.Random` so runs are reproducible.
All outputs are built through the validating constructors, so anything
returned has passed the axiom check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .construct import (
    adjoin_identity,
    adjoin_zero,
    coset_space,
    double_coset_space,
    from_semigroup,
    orbit_space,
    product_semihypergroup,
    three_element_parametric,
    zero_semigroup,
)
from .core import ElementSet, Measure, Semihypergroup
from .groups import (
    AffineAction,
    CayleyTable,
    cyclic_group,
    direct_product,
    inner_action,
    symmetric_group,
    translation_action,
)
from .means import FunctionVector

__all__ = [
    "random_probability",
    "random_measure",
    "random_function",
    "transformation_semigroup",
    "random_semilattice",
    "rectangular_band",
    "idempotent_kernel",
    "random_quotient",
    "negation_orbit_space",
    "three_element_complete_draw",
    "three_element_base_draw",
    "random_semihypergroup",
    "random_commutative_semihypergroup",
]


def random_probability(rng: random.Random, k: int, max_weight: int = 4, positive: bool = True):
    lo = 1 if positive else 0
    while True:
        raw = [rng.randint(lo, max_weight) for _ in range(k)]
        total = sum(raw)
        if total:
            return [Fraction(r, total) for r in raw]


def random_measure(rng: random.Random, carrier: ElementSet, kind: str = "signed", max_den: int = 6) -> Measure:
    """``kind``: ``"signed"``, ``"probability"`` or ``"positive"``."""
    n = len(carrier)
    if kind == "probability":
        return Measure(carrier, tuple(random_probability(rng, n, positive=False)))
    lo = 0 if kind == "positive" else -max_den
    return Measure(
        carrier,
        tuple(Fraction(rng.randint(lo, max_den), rng.randint(1, max_den)) for _ in range(n)),
    )


def random_function(rng: random.Random, carrier: ElementSet, max_den: int = 6) -> FunctionVector:
    return FunctionVector(
        carrier,
        tuple(Fraction(rng.randint(-max_den, max_den), rng.randint(1, max_den)) for _ in carrier),
    )


def _closure_of_maps(gens, limit):
    """Semigroup generated by transformations (tuples), or None past ``limit``."""
    elements = list(dict.fromkeys(gens))
    seen = set(elements)
    frontier = list(elements)
    while frontier:
        new = []
        for f in frontier:
            for g in list(elements):
                for h in (tuple(f[i] for i in g), tuple(g[i] for i in f)):
                    if h not in seen:
                        seen.add(h)
                        elements.append(h)
                        new.append(h)
                        if len(elements) > limit:
                            return None
        frontier = new
    return elements


def transformation_semigroup(rng: random.Random, max_n: int = 6) -> Semihypergroup:
    """Semigroup generated by random maps of a small set, composed as
    ``(fg)(i) = f(g(i))``."""
    while True:
        degree = rng.randint(1, 3)
        gens = [tuple(rng.randrange(degree) for _ in range(degree)) for _ in range(rng.randint(1, 2))]
        elements = _closure_of_maps(gens, max_n)
        if elements is None:
            continue
        pos = {f: i for i, f in enumerate(elements)}
        table = [[pos[tuple(f[i] for i in g)] for g in elements] for f in elements]
        return from_semigroup([f"t{i}" for i in range(len(elements))], table)


def random_semilattice(rng: random.Random, max_n: int = 6) -> Semihypergroup:
    """A union-closed family of subsets under union (commutative, idempotent)."""
    while True:
        family = {frozenset(rng.sample(range(4), rng.randint(0, 3))) for _ in range(rng.randint(1, 3))}
        changed = True
        while changed:
            changed = False
            for a in list(family):
                for b in list(family):
                    if a | b not in family:
                        family.add(a | b)
                        changed = True
        if len(family) <= max_n:
            break
    members = sorted(family, key=lambda s: (len(s), sorted(s)))
    pos = {s: i for i, s in enumerate(members)}
    table = [[pos[a | b] for b in members] for a in members]
    return from_semigroup([f"u{i}" for i in range(len(members))], table)


def rectangular_band(rows: int, cols: int) -> Semihypergroup:
    """``(i, j)(k, l) = (i, l)``: ``cols`` minimal left ideals, ``rows`` minimal right ones."""
    cells = [(i, j) for i in range(rows) for j in range(cols)]
    pos = {c: k for k, c in enumerate(cells)}
    table = [[pos[(a[0], b[1])] for b in cells] for a in cells]
    return from_semigroup([f"r{i}c{j}" for i, j in cells], table)


def idempotent_kernel(rng: random.Random, n: int, side: str = "right") -> Semihypergroup:
    """``p_x * p_y = P[y]`` (``side="right"``) or ``P[x]`` (``"left"``) for a
    random idempotent stochastic matrix ``P``.

    Associativity reduces to ``P^2 = P``.  ``P`` is built from disjoint
    recurrent classes, each row of a class equal to the class's stationary
    vector, and transient rows that mix those vectors.
    """
    carrier = ElementSet(tuple(f"k{i}" for i in range(n)))
    order = list(range(n))
    rng.shuffle(order)
    n_classes = rng.randint(1, n)
    cut = sorted(rng.sample(range(1, n), n_classes - 1)) if n_classes > 1 else []
    bounds = [0] + cut + [n]
    groups = [order[bounds[i]:bounds[i + 1]] for i in range(n_classes)]
    recurrent = []
    transient = []
    for g in groups:
        k = rng.randint(1, len(g))
        recurrent.append(g[:k])
        transient.extend(g[k:])
    stationary = []
    for cls in recurrent:
        w = random_probability(rng, len(cls))
        vec = [Fraction(0)] * n
        for i, p in zip(cls, w):
            vec[i] = p
        stationary.append(vec)
    P = [None] * n
    for cls, vec in zip(recurrent, stationary):
        for i in cls:
            P[i] = vec
    for i in transient:
        mix = random_probability(rng, len(stationary), positive=False)
        P[i] = [sum(a * v[z] for a, v in zip(mix, stationary)) for z in range(n)]
    rows = []
    for x in range(n):
        rows.append([P[y] if side == "right" else P[x] for y in range(n)])
    return Semihypergroup.from_weights(carrier, rows)


@lru_cache(maxsize=None)
def _small_groups() -> tuple[CayleyTable, ...]:
    return (
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        cyclic_group(5),
        cyclic_group(6),
        direct_product(cyclic_group(2), cyclic_group(2)),
        symmetric_group(3),
        symmetric_group(4),
    )


@lru_cache(maxsize=None)
def _subgroups(k: int) -> tuple[tuple[str, ...], ...]:
    G = _small_groups()[k]
    return tuple(tuple(G.elements[i] for i in s) for s in G.subgroups())


def random_quotient(rng: random.Random, max_n: int = 6, commutative: bool = False) -> Semihypergroup:
    """Coset, double-coset or orbit space of a small group with at most
    ``max_n`` points."""
    groups = _small_groups()
    while True:
        k = rng.randrange(len(groups))
        G = groups[k]
        if commutative and not G.is_abelian:
            continue
        H = rng.choice(_subgroups(k))
        kind = rng.choice(("coset", "double", "inner", "translation"))
        if len(G) // len(H) > max_n and kind in ("coset", "translation"):
            continue
        if kind == "coset":
            S = coset_space(G, H)
        elif kind == "double":
            S = double_coset_space(G, H)
        elif kind == "inner":
            if len(G) > 6 and len(H) < 3:
                continue
            S = orbit_space(inner_action(G, H))
        else:
            S = orbit_space(translation_action(G, H))
        if len(S) <= max_n and (not commutative or S.is_commutative):
            return S


def negation_orbit_space(n: int) -> Semihypergroup:
    """Orbits of ``Z_n`` under ``x -> -x``: a commutative hypergroup."""
    G = cyclic_group(n)
    H = cyclic_group(2)
    neg = tuple((-x) % n for x in range(n))
    action = AffineAction(H, G, ((0, tuple(range(n))), (0, neg)))
    return orbit_space(action)


def _fraction(rng: random.Random, max_den: int = 6) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(0, d), d)


def three_element_complete_draw(rng: random.Random):
    """Parameters satisfying every associativity identity (``x3 > 0``):
    ``y1 = z1 x1 / x3`` and ``y2 = z1 z2 / x3``."""
    while True:
        x1, x3 = _fraction(rng), _fraction(rng)
        if x3 == 0 or x1 + x3 > 1:
            continue
        z1 = _fraction(rng)
        z2 = 1 - z1
        y1 = z1 * x1 / x3
        y2 = z1 * z2 / x3
        if y1 + y2 <= 1:
            return (x1, 1 - x1 - x3, x3, y1, y2, 1 - y1 - y2, z1, z2)


def three_element_base_draw(rng: random.Random):
    """Parameters meeting only the sum constraints and ``y1 x3 = z1 x1``;
    ``y2`` is free in what remains."""
    while True:
        x1, x3 = _fraction(rng), _fraction(rng)
        if x3 == 0 or x1 + x3 > 1:
            continue
        z1 = _fraction(rng)
        y1 = z1 * x1 / x3
        if y1 > 1:
            continue
        y2 = (1 - y1) * _fraction(rng)
        return (x1, 1 - x1 - x3, x3, y1, y2, 1 - y1 - y2, z1, 1 - z1)


def _base(rng: random.Random, max_n: int) -> Semihypergroup:
    choice = rng.randrange(8)
    if choice == 0:
        return transformation_semigroup(rng, max_n)
    if choice == 1:
        return random_semilattice(rng, max_n)
    if choice == 2:
        r = rng.randint(1, max(1, min(3, max_n)))
        c = rng.randint(1, max(1, max_n // r))
        return rectangular_band(r, c)
    if choice == 3:
        return idempotent_kernel(rng, rng.randint(1, max_n), rng.choice(("left", "right")))
    if choice == 4 and max_n >= 3:
        return three_element_parametric(*three_element_complete_draw(rng))
    if choice == 5:
        return zero_semigroup(rng.randint(1, max_n), rng.choice(("left", "right")))
    if choice == 6 and max_n >= 3:
        return negation_orbit_space(rng.randint(2, min(2 * max_n - 2, 10)))
    return random_quotient(rng, max_n)


def random_semihypergroup(rng: random.Random, max_n: int = 6) -> Semihypergroup:
    """A random instance with at most ``max_n`` elements, sometimes extended
    by an adjoined zero or identity or a direct product."""
    while True:
        S = _base(rng, max_n)
        roll = rng.random()
        if roll < 0.15 and len(S) < max_n:
            S = adjoin_zero(S, "z")
        elif roll < 0.3 and len(S) < max_n:
            S = adjoin_identity(S, "i")
        elif roll < 0.4:
            T = _base(rng, max(1, max_n // max(1, len(S))))
            if len(S) * len(T) <= max_n:
                S = product_semihypergroup(S, T)
        if len(S) <= max_n:
            return S


def random_commutative_semihypergroup(rng: random.Random, max_n: int = 6) -> Semihypergroup:
    while True:
        choice = rng.randrange(5)
        if choice == 0:
            S = random_semilattice(rng, max_n)
        elif choice == 1 and max_n >= 3:
            S = three_element_parametric(*three_element_complete_draw(rng))
        elif choice == 2:
            S = negation_orbit_space(rng.randint(2, min(2 * max_n - 2, 10)))
        elif choice == 3:
            S = random_quotient(rng, max_n, commutative=True)
        else:
            S = transformation_semigroup(rng, max_n)
            if not S.is_commutative:
                continue
        roll = rng.random()
        if roll < 0.2 and len(S) < max_n:
            S = adjoin_zero(S, "z")
        elif roll < 0.4 and len(S) < max_n:
            S = adjoin_identity(S, "i")
        if len(S) <= max_n and S.is_commutative:
            return S
