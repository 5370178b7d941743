"""Semihypergroups built from semigroups, groups and parameters.

Quotient constructions average over a finite subgroup with its normalized
counting (Haar) measure.  Every constructor hands its table to
:class:`~semihyper.core.Semihypergroup`, so its output has passed
:func:`~semihyper.core.check_axioms`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .core import ConvolutionTable, ElementSet, Measure, Semihypergroup, as_rational
from .errors import AxiomError, ParameterError, TheoremViolation
from .groups import AffineAction, CayleyTable

__all__ = [
    "from_semigroup",
    "three_element_parametric",
    "three_element_conditions",
    "coset_space",
    "coset_product",
    "double_coset_space",
    "double_coset_product",
    "orbit_space",
    "orbit_product",
    "zero_semigroup",
    "adjoin_zero",
    "adjoin_identity",
    "product_semihypergroup",
]


def from_semigroup(names_or_group, table: Sequence[Sequence] | None = None) -> Semihypergroup:
    """Point-mass semihypergroup ``p_x * p_y = p_{xy}`` of a semigroup.

    Pass either a :class:`CayleyTable` or element names plus a product table
    (names or indices).  A non-associative table raises :class:`AxiomError`.
    """
    if isinstance(names_or_group, CayleyTable):
        carrier = names_or_group.elements
        prod = names_or_group.product
    else:
        carrier = ElementSet(tuple(names_or_group))
        if table is None:
            raise TypeError("from_semigroup needs a product table")
        prod = [
            [carrier.position(v) if isinstance(v, str) else int(v) for v in row] for row in table
        ]
        if len(prod) != len(carrier) or any(len(r) != len(carrier) for r in prod):
            raise ValueError("product table has the wrong shape")
    points = [Measure.point(carrier, name) for name in carrier]
    return Semihypergroup(
        ConvolutionTable(carrier, tuple(tuple(points[v] for v in row) for row in prod))
    )


_PARAM_NAMES = ("x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2")


def three_element_conditions(x1, x2, x3, y1, y2, y3, z1, z2) -> dict[str, bool]:
    """Every identity the three-element table needs, with its truth value.

    The first four are the base constraints.  Expanding associativity
    on the triples (a, a, b) and (a, b, b) adds the last two; nonnegativity
    and these six together are equivalent to the table being a
    semihypergroup.
    """
    x1, x2, x3, y1, y2, y3, z1, z2 = (as_rational(v) for v in (x1, x2, x3, y1, y2, y3, z1, z2))
    return {
        "x1+x2+x3=1": x1 + x2 + x3 == 1,
        "y1+y2+y3=1": y1 + y2 + y3 == 1,
        "z1+z2=1": z1 + z2 == 1,
        "y1*x3=z1*x1": y1 * x3 == z1 * x1,
        "y2*x3=z1*z2": y2 * x3 == z1 * z2,
        "y1*z2=y2*x1": y1 * z2 == y2 * x1,
    }


def three_element_parametric(x1, x2, x3, y1, y2, y3, z1, z2) -> Semihypergroup:
    """The commutative three-element table on ``{e, a, b}``::

        e is a two-sided identity
        a*a = x1 e + x2 a + x3 b
        b*b = y1 e + y2 a + y3 b
        a*b = b*a = z1 a + z2 b

    Parameters must be nonnegative and satisfy the base constraints
    (sums equal 1 and ``y1 x3 = z1 x1``), else :class:`ParameterError`.
    Those constraints do not imply associativity on their own; the table is
    then checked and :class:`AxiomError` is raised, naming the failing
    triple and the unmet identities from :func:`three_element_conditions`.
    """
    values = dict(zip(_PARAM_NAMES, (as_rational(v) for v in (x1, x2, x3, y1, y2, y3, z1, z2))))
    for name, v in values.items():
        if v < 0:
            raise ParameterError(f"parameter {name} = {v} is negative")
    conditions = three_element_conditions(*values.values())
    base = list(conditions)[:4]
    broken = [c for c in base if not conditions[c]]
    if broken:
        raise ParameterError("constraint violated: " + ", ".join(broken))
    v = values
    products = {
        ("e", "e"): "e",
        ("e", "a"): "a",
        ("a", "e"): "a",
        ("e", "b"): "b",
        ("b", "e"): "b",
        ("a", "a"): {"e": v["x1"], "a": v["x2"], "b": v["x3"]},
        ("b", "b"): {"e": v["y1"], "a": v["y2"], "b": v["y3"]},
        ("a", "b"): {"a": v["z1"], "b": v["z2"]},
        ("b", "a"): {"a": v["z1"], "b": v["z2"]},
    }
    table = ConvolutionTable.from_products(("e", "a", "b"), products)
    try:
        return Semihypergroup(table)
    except AxiomError as err:
        missing = [c for c in list(conditions)[4:] if not conditions[c]]
        raise AxiomError(
            err.report,
            f"{err.report.summary()}; unmet associativity identities: {', '.join(missing)}",
        ) from None


def _quotient_table(names: list[str], n_classes: int, product_fn) -> ConvolutionTable:
    carrier = ElementSet(tuple(names))
    rows = []
    for i in range(n_classes):
        rows.append(tuple(Measure(carrier, tuple(product_fn(i, j))) for j in range(n_classes)))
    return ConvolutionTable(carrier, tuple(rows))


def _averaged(where: dict[int, int], n_classes: int, landing: Iterable[int], count: int):
    weights = [Fraction(0)] * n_classes
    step = Fraction(1, count)
    for g in landing:
        weights[where[g]] += step
    return weights


def _build_quotient(names, classes, where, product_on_reps) -> Semihypergroup:
    """Assemble the table from least-index representatives and re-derive it
    from greatest-index ones; the two must agree."""
    k = len(classes)
    table = _quotient_table(names, k, lambda i, j: product_on_reps(classes[i][0], classes[j][0]))
    alt = _quotient_table(names, k, lambda i, j: product_on_reps(classes[i][-1], classes[j][-1]))
    if table != alt:
        raise TheoremViolation("quotient convolution depends on the choice of representatives")
    try:
        return Semihypergroup(table)
    except AxiomError as err:
        raise TheoremViolation(f"quotient construction is not a semihypergroup: {err}") from None


def coset_product(G: CayleyTable, subgroup: Iterable[str], x: str, y: str) -> Measure:
    """``p_{xH} * p_{yH}`` computed from the given representatives ``x, y``."""
    H = G.subgroup_indices(subgroup)
    cosets = G.left_cosets(subgroup)
    where = {g: i for i, c in enumerate(cosets) for g in c}
    carrier = ElementSet(tuple(f"{G.elements[c[0]]}H" for c in cosets))
    xi, yi = G.elements.position(x), G.elements.position(y)
    P = G.product
    return Measure(
        carrier, tuple(_averaged(where, len(cosets), (P[P[xi][t]][yi] for t in H), len(H)))
    )


def coset_space(G: CayleyTable, subgroup: Iterable[str]) -> Semihypergroup:
    """Left coset space ``G/H`` with ``p_{xH} * p_{yH} = avg_{t in H} p_{xtyH}``.

    Cosets are named ``<rep>H`` after their least-index member.
    """
    subgroup = list(subgroup)
    H = G.subgroup_indices(subgroup)
    cosets = G.left_cosets(subgroup)
    where = {g: i for i, c in enumerate(cosets) for g in c}
    P = G.product
    names = [f"{G.elements[c[0]]}H" for c in cosets]
    return _build_quotient(
        names,
        cosets,
        where,
        lambda x, y: _averaged(where, len(cosets), (P[P[x][t]][y] for t in H), len(H)),
    )


def _double_cosets(G: CayleyTable, H: tuple[int, ...]) -> list[tuple[int, ...]]:
    P = G.product
    seen = {}
    for g in range(len(G)):
        seen.setdefault(tuple(sorted({P[P[a][g]][b] for a in H for b in H})), None)
    return sorted(seen, key=min)


def double_coset_product(G: CayleyTable, subgroup: Iterable[str], x: str, y: str) -> Measure:
    H = G.subgroup_indices(subgroup)
    classes = _double_cosets(G, H)
    where = {g: i for i, c in enumerate(classes) for g in c}
    carrier = ElementSet(tuple(f"H{G.elements[c[0]]}H" for c in classes))
    xi, yi = G.elements.position(x), G.elements.position(y)
    P = G.product
    return Measure(
        carrier, tuple(_averaged(where, len(classes), (P[P[xi][t]][yi] for t in H), len(H)))
    )


def double_coset_space(G: CayleyTable, subgroup: Iterable[str]) -> Semihypergroup:
    """Double coset space ``H\\G/H`` with ``avg_{t in H} p_{H(xty)H}``.

    Classes are named ``H<rep>H``.  The result is a hypergroup with
    identity ``HeH`` and involution ``HxH -> Hx^{-1}H``.
    """
    H = G.subgroup_indices(subgroup)
    classes = _double_cosets(G, H)
    where = {g: i for i, c in enumerate(classes) for g in c}
    P = G.product
    names = [f"H{G.elements[c[0]]}H" for c in classes]
    return _build_quotient(
        names,
        classes,
        where,
        lambda x, y: _averaged(where, len(classes), (P[P[x][t]][y] for t in H), len(H)),
    )


def orbit_product(action: AffineAction, x: str, y: str) -> Measure:
    orbits = action.orbits()
    G = action.target
    where = {g: i for i, o in enumerate(orbits) for g in o}
    carrier = ElementSet(tuple(f"{G.elements[o[0]]}^H" for o in orbits))
    xi, yi = G.elements.position(x), G.elements.position(y)
    return Measure(carrier, tuple(_orbit_weights(action, where, len(orbits), xi, yi)))


def _orbit_weights(action: AffineAction, where, k: int, x: int, y: int):
    m = len(action.group)
    P = action.target.product
    landing = (
        P[action._act(x, s)][action._act(y, t)] for s, t in product(range(m), repeat=2)
    )
    return _averaged(where, k, landing, m * m)


def orbit_space(action: AffineAction) -> Semihypergroup:
    """Orbit space of an affine action, convolution averaged over ``H x H``.

    Orbits are named ``<rep>^H``.
    """
    orbits = action.orbits()
    G = action.target
    where = {g: i for i, o in enumerate(orbits) for g in o}
    names = [f"{G.elements[o[0]]}^H" for o in orbits]
    return _build_quotient(
        names,
        orbits,
        where,
        lambda x, y: _orbit_weights(action, where, len(orbits), x, y),
    )


def zero_semigroup(n: int = 2, side: str = "left", names: Sequence[str] | None = None) -> Semihypergroup:
    """``side="left"``: ``xy = x``; ``side="right"``: ``xy = y``."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if names is None:
        names = ["x", "y"] if n == 2 else [f"z{i}" for i in range(n)]
    table = [[i if side == "left" else j for j in range(n)] for i in range(n)]
    return from_semigroup(list(names), table)


def adjoin_zero(S: Semihypergroup, name: str = "0") -> Semihypergroup:
    """Add an absorbing element ``0`` with ``p_0 * p_x = p_x * p_0 = p_0``."""
    carrier = ElementSet(S.names + (name,))
    k = len(S)
    rows = []
    for x in range(k + 1):
        row = []
        for y in range(k + 1):
            if x == k or y == k:
                row.append(Measure.point(carrier, name))
            else:
                row.append(Measure(carrier, S.table.entries[x][y].weights + (Fraction(0),)))
        rows.append(tuple(row))
    return Semihypergroup(ConvolutionTable(carrier, tuple(rows)))


def adjoin_identity(S: Semihypergroup, name: str = "1") -> Semihypergroup:
    carrier = ElementSet(S.names + (name,))
    k = len(S)
    rows = []
    for x in range(k + 1):
        row = []
        for y in range(k + 1):
            if x == k:
                row.append(Measure.point(carrier, carrier[y]))
            elif y == k:
                row.append(Measure.point(carrier, carrier[x]))
            else:
                row.append(Measure(carrier, S.table.entries[x][y].weights + (Fraction(0),)))
        rows.append(tuple(row))
    return Semihypergroup(ConvolutionTable(carrier, tuple(rows)))


def product_semihypergroup(S: Semihypergroup, T: Semihypergroup, sep: str = "|") -> Semihypergroup:
    """Direct product; ``p_(x,u) * p_(y,v)`` is the product measure."""
    pairs = list(product(range(len(S)), range(len(T))))
    carrier = ElementSet(tuple(f"{S.names[a]}{sep}{T.names[b]}" for a, b in pairs))
    rows = []
    for a, b in pairs:
        row = []
        for c, d in pairs:
            left = S.table.entries[a][c].weights
            right = T.table.entries[b][d].weights
            row.append(Measure(carrier, tuple(left[i] * right[j] for i, j in pairs)))
        rows.append(tuple(row))
    return Semihypergroup(ConvolutionTable(carrier, tuple(rows)))
