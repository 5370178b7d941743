"""Built-in example semihypergroups.

``s4_mod_d8``
    Left coset space ``S4/D8`` relabeled ``H, s1H, s2H`` with ``s1 = (124)``
    and ``s2 = (142)``, computed from the groups.
``remark_5_9``
    The three-element table used to show that ``I*{x}`` need not be a
    minimal left ideal.  As tabulated it is not associative, so requesting
    it raises :class:`~semihyper.errors.AxiomError`; the raw table is
    available from :func:`literal_table`.
``example_3_2_default``
    The three-element commutative hypergroup with parameters
    ``x = (1/2, 0, 1/2)``, ``y = (1/2, 1/2, 0)``, ``z = (1/2, 1/2)``
    (the orbit hypergroup of ``Z5`` under ``x -> -x``).
``nonminimal_translate``
    A valid counterexample of the same kind: ``I = {a}`` is a minimal left
    ideal but ``I*{b} = {a, c}`` is a left ideal that is not minimal.
``left_zero`` / ``right_zero`` / ``z2``
    ``xy = x``, ``xy = y`` and the cyclic group of order 2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .construct import coset_space, from_semigroup, three_element_parametric, zero_semigroup
from .core import ConvolutionTable, ElementSet, Measure, Semihypergroup
from .errors import FixtureError
from .groups import CayleyTable, cyclic_group, symmetric_group

__all__ = [
    "FIXTURE_NAMES",
    "D8_IN_S4",
    "THREE_ELEMENT_DEFAULT_PARAMS",
    "builtin_fixture",
    "literal_table",
    "s4",
    "reorder",
]

D8_IN_S4 = ("e", "(1234)", "(13)(24)", "(1432)", "(13)", "(24)", "(12)(34)", "(14)(23)")

half = Fraction(1, 2)
THREE_ELEMENT_DEFAULT_PARAMS = (half, 0, half, half, half, 0, half, half)

FIXTURE_NAMES = (
    "s4_mod_d8",
    "remark_5_9",
    "example_3_2_default",
    "nonminimal_translate",
    "left_zero",
    "right_zero",
    "z2",
)

_LITERAL = {
    "s4_mod_d8": (
        ("H", "s1H", "s2H"),
        {
            ("H", "H"): "H",
            ("H", "s1H"): {"s1H": half, "s2H": half},
            ("H", "s2H"): {"s1H": half, "s2H": half},
            ("s1H", "H"): "s1H",
            ("s1H", "s1H"): {"H": half, "s2H": half},
            ("s1H", "s2H"): {"H": half, "s1H": half},
            ("s2H", "H"): "s2H",
            ("s2H", "s1H"): {"H": half, "s1H": half},
            ("s2H", "s2H"): {"H": half, "s2H": half},
        },
    ),
    "remark_5_9": (
        ("a", "b", "c"),
        {
            ("a", "a"): "a",
            ("a", "b"): {"a": half, "b": half},
            ("a", "c"): {"a": half, "c": half},
            ("b", "a"): "a",
            ("b", "b"): {"a": half, "b": half},
            ("b", "c"): {"a": half, "c": half},
            ("c", "a"): "a",
            ("c", "b"): "b",
            ("c", "c"): "c",
        },
    ),
}


def literal_table(name: str) -> ConvolutionTable:
    """Unvalidated table exactly as tabulated for the named example.

    Neither table passes the associativity check: the ``s4_mod_d8`` listing
    has wrong entries at ``(s1H, s2H)`` and ``(s2H, s2H)``, and the
    ``remark_5_9`` listing fails at ``(a, a, b)``.
    """
    try:
        names, products = _LITERAL[name]
    except KeyError:
        raise FixtureError(f"no literal table named {name!r}") from None
    return ConvolutionTable.from_products(names, products)


@lru_cache(maxsize=None)
def s4() -> CayleyTable:
    return symmetric_group(4)


def reorder(S: Semihypergroup, order) -> Semihypergroup:
    """Same semihypergroup with its carrier listed in ``order``."""
    order = tuple(order)
    if sorted(order) != sorted(S.names):
        raise ValueError("order must be a permutation of the carrier")
    carrier = ElementSet(order)
    pos = [S.carrier.position(n) for n in order]
    rows = tuple(
        tuple(
            Measure(carrier, tuple(S.table.entries[x][y].weights[z] for z in pos)) for y in pos
        )
        for x in pos
    )
    return Semihypergroup(ConvolutionTable(carrier, rows))


def _s4_mod_d8() -> Semihypergroup:
    G = s4()
    S = coset_space(G, D8_IN_S4)
    cosets = G.left_cosets(D8_IN_S4)
    label = {}
    for coset, old in zip(cosets, S.names):
        members = {G.elements[g] for g in coset}
        if "e" in members:
            label[old] = "H"
        elif "(124)" in members:
            label[old] = "s1H"
        else:
            label[old] = "s2H"
    relabeled = S.relabel([label[n] for n in S.names])
    return reorder(relabeled, ("H", "s1H", "s2H"))


def _nonminimal_translate() -> Semihypergroup:
    products = {}
    for x in "abc":
        products[(x, "a")] = "a"
        products[(x, "b")] = {"a": half, "c": half}
        products[(x, "c")] = "c"
    return Semihypergroup.from_products(("a", "b", "c"), products)


def builtin_fixture(name: str) -> Semihypergroup:
    if name == "s4_mod_d8":
        return _s4_mod_d8()
    if name == "remark_5_9":
        return Semihypergroup(literal_table("remark_5_9"))
    if name == "example_3_2_default":
        return three_element_parametric(*THREE_ELEMENT_DEFAULT_PARAMS)
    if name == "nonminimal_translate":
        return _nonminimal_translate()
    if name == "left_zero":
        return zero_semigroup(2, "left")
    if name == "right_zero":
        return zero_semigroup(2, "right")
    if name == "z2":
        return from_semigroup(cyclic_group(2))
    raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
