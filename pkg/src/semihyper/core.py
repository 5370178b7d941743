"""Finite discrete semihypergroups over exact rationals.

A finite semihypergroup is a finite set ``K`` together with a table that
assigns to every ordered pair ``(x, y)`` a probability vector ``p_x * p_y``
on ``K``.  Convolution of arbitrary measures is the bilinear extension of the
table, and the table is valid when that extension is associative.  On a
finite discrete carrier the continuity axioms hold automatically, so the
checkable content is associativity (A1) and "every entry is a probability
measure" (A3).

Rows of a table are the *left* factor: ``entry[x][y] = p_x * p_y``.
"""

from __future__ import annotations

import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import (
    AxiomError,
    CarrierMismatchError,
    FloatInputError,
    UnknownElementError,
)

__all__ = [
    "as_rational",
    "ElementSet",
    "Measure",
    "ConvolutionTable",
    "AxiomReport",
    "Semihypergroup",
    "check_axioms",
    "convolve_points",
    "convolve_measures",
    "support",
    "set_convolve",
    "is_commutative",
    "find_identity",
    "identity_sidedness",
    "find_involution",
]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_FLOATISH_RE = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+(?:\.\d*)?[eE][+-]?\d+)")
_FORBIDDEN_IN_NAMES = set("#:;,*=+")

VACUOUS = "vacuously satisfied (finite discrete)"


def as_rational(value) -> Fraction:
    """Convert ``value`` to a :class:`~fractions.Fraction`, refusing floats.

    Accepts ints, Fractions, other exact rationals and strings of the form
    ``"3"`` or ``"-1/2"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"cannot interpret {value!r} as a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIONAL_RE.fullmatch(text):
            return Fraction(text)
        if _FLOATISH_RE.fullmatch(text):
            raise FloatInputError(
                f"floating-point literal {text!r} is not allowed; write it as p/q"
            )
        raise ValueError(f"not a rational literal: {value!r}")
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Real):
        raise FloatInputError(f"floating-point value {value!r} is not allowed; use Fraction")
    raise TypeError(f"cannot interpret {value!r} as a rational number")


@dataclass(frozen=True)
class ElementSet:
    """Ordered set of distinct element names.

    Declaration order is significant: every tie-break in the package uses it.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        seen = set()
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"element names must be non-empty strings, got {name!r}")
            if any(ch.isspace() or ch in _FORBIDDEN_IN_NAMES for ch in name):
                raise ValueError(
                    f"element name {name!r} contains whitespace or one of '#:;,*=+'"
                )
            if name in seen:
                raise ValueError(f"duplicate element {name!r}")
            seen.add(name)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except (KeyError, TypeError):
            raise UnknownElementError(f"unknown element {name!r}") from None

    def positions(self, names: Iterable[str]) -> list[int]:
        if isinstance(names, str):
            names = [names]
        return sorted({self.position(name) for name in names})

    def mask(self, names: Iterable[str]) -> int:
        bits = 0
        for i in self.positions(names):
            bits |= 1 << i
        return bits

    def names_of(self, indices_or_mask) -> frozenset[str]:
        if isinstance(indices_or_mask, int):
            mask = indices_or_mask
            return frozenset(n for i, n in enumerate(self.names) if mask >> i & 1)
        return frozenset(self.names[i] for i in indices_or_mask)

    def ordered(self, names: Iterable[str]) -> tuple[str, ...]:
        """Sort ``names`` by declaration order."""
        return tuple(self.names[i] for i in self.positions(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self.index

    def __getitem__(self, i: int) -> str:
        return self.names[i]


def _carrier(value) -> ElementSet:
    return value if isinstance(value, ElementSet) else ElementSet(tuple(value))


@dataclass(frozen=True)
class Measure:
    """Rational-weighted measure on a finite carrier (signed in general)."""

    carrier: ElementSet
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(as_rational(w) for w in self.weights)
        if len(weights) != len(self.carrier):
            raise ValueError(
                f"measure has {len(weights)} weights for a carrier of size {len(self.carrier)}"
            )
        object.__setattr__(self, "weights", weights)

    @classmethod
    def point(cls, carrier, name: str) -> Measure:
        carrier = _carrier(carrier)
        i = carrier.position(name)
        return cls(carrier, tuple(Fraction(int(j == i)) for j in range(len(carrier))))

    @classmethod
    def zero(cls, carrier) -> Measure:
        carrier = _carrier(carrier)
        return cls(carrier, (Fraction(0),) * len(carrier))

    @classmethod
    def from_mapping(cls, carrier, mapping: Mapping[str, object]) -> Measure:
        carrier = _carrier(carrier)
        weights = [Fraction(0)] * len(carrier)
        for name, w in mapping.items():
            weights[carrier.position(name)] += as_rational(w)
        return cls(carrier, tuple(weights))

    @classmethod
    def uniform(cls, carrier, names: Iterable[str] | None = None) -> Measure:
        carrier = _carrier(carrier)
        chosen = carrier.positions(carrier.names if names is None else names)
        if not chosen:
            raise ValueError("uniform measure needs at least one element")
        w = Fraction(1, len(chosen))
        return cls(carrier, tuple(w if i in chosen else Fraction(0) for i in range(len(carrier))))

    def __getitem__(self, name: str) -> Fraction:
        return self.weights[self.carrier.position(name)]

    @property
    def mass(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def is_probability(self) -> bool:
        return all(w >= 0 for w in self.weights) and self.mass == 1

    @property
    def support(self) -> frozenset[str]:
        return frozenset(n for n, w in zip(self.carrier.names, self.weights) if w)

    def items(self) -> list[tuple[str, Fraction]]:
        """Nonzero ``(name, weight)`` pairs in declaration order."""
        return [(n, w) for n, w in zip(self.carrier.names, self.weights) if w]

    def _same(self, other: Measure) -> None:
        if not isinstance(other, Measure):
            raise TypeError(f"expected a Measure, got {type(other).__name__}")
        if other.carrier != self.carrier:
            raise CarrierMismatchError("measures live on different carriers")

    def __add__(self, other: Measure) -> Measure:
        self._same(other)
        return Measure(self.carrier, tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other: Measure) -> Measure:
        self._same(other)
        return Measure(self.carrier, tuple(a - b for a, b in zip(self.weights, other.weights)))

    def __neg__(self) -> Measure:
        return Measure(self.carrier, tuple(-w for w in self.weights))

    def __mul__(self, scalar) -> Measure:
        c = as_rational(scalar)
        return Measure(self.carrier, tuple(c * w for w in self.weights))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_terms(self.items()) or "0"


def format_terms(terms: Iterable[tuple[str, Fraction]]) -> str:
    """Render ``[(name, weight), ...]`` as ``1/2 a + b - 1/3 c``."""
    out = []
    for name, w in terms:
        sign = "-" if w < 0 else "+"
        mag = abs(w)
        body = name if mag == 1 else f"{mag} {name}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def _as_measure(carrier: ElementSet, value) -> Measure:
    if isinstance(value, Measure):
        if value.carrier != carrier:
            raise CarrierMismatchError("table entry measured on a different carrier")
        return value
    if isinstance(value, str):
        return Measure.point(carrier, value)
    if isinstance(value, Mapping):
        return Measure.from_mapping(carrier, value)
    return Measure(carrier, tuple(value))


@dataclass(frozen=True)
class ConvolutionTable:
    """The raw ``n x n`` table of measures ``p_x * p_y``; not yet validated."""

    carrier: ElementSet
    entries: tuple[tuple[Measure, ...], ...]

    def __post_init__(self):
        n = len(self.carrier)
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"a table over {n} elements needs {n}x{n} entries")
        for row in entries:
            for m in row:
                if m.carrier != self.carrier:
                    raise CarrierMismatchError("table entry measured on a different carrier")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_products(cls, names, products: Mapping[tuple[str, str], object]) -> ConvolutionTable:
        """Build a table from ``{(x, y): value}``.

        ``value`` may be an element name (point mass), a ``{name: weight}``
        mapping, a weight sequence or a :class:`Measure`.  Every ordered pair
        must be present.
        """
        carrier = _carrier(names)
        rows = []
        for x in carrier:
            row = []
            for y in carrier:
                if (x, y) not in products:
                    raise ValueError(f"missing product {x} * {y}")
                row.append(_as_measure(carrier, products[(x, y)]))
            rows.append(tuple(row))
        extra = set(products) - {(x, y) for x in carrier for y in carrier}
        if extra:
            raise UnknownElementError(f"products mention unknown pairs {sorted(extra)}")
        return cls(carrier, tuple(rows))

    @classmethod
    def from_weights(cls, names, rows) -> ConvolutionTable:
        carrier = _carrier(names)
        return cls(
            carrier,
            tuple(tuple(Measure(carrier, tuple(w)) for w in row) for row in rows),
        )

    def __len__(self) -> int:
        return len(self.carrier)

    def entry(self, x: str, y: str) -> Measure:
        return self.entries[self.carrier.position(x)][self.carrier.position(y)]

    def transpose(self) -> ConvolutionTable:
        n = len(self.carrier)
        return ConvolutionTable(
            self.carrier, tuple(tuple(self.entries[y][x] for y in range(n)) for x in range(n))
        )

    def relabel(self, names) -> ConvolutionTable:
        carrier = _carrier(names)
        if len(carrier) != len(self.carrier):
            raise ValueError("relabeling must keep the carrier size")
        return ConvolutionTable(
            carrier,
            tuple(tuple(Measure(carrier, m.weights) for m in row) for row in self.entries),
        )

    @cached_property
    def sparse(self) -> tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]:
        """``sparse[x][y]`` lists the nonzero ``(z, weight)`` of ``p_x * p_y``."""
        return tuple(
            tuple(tuple((z, w) for z, w in enumerate(m.weights) if w) for m in row)
            for row in self.entries
        )

    @cached_property
    def support_masks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(sum(1 << z for z, _ in cell) for cell in row) for row in self.sparse
        )


@dataclass(frozen=True)
class AxiomReport:
    a3_ok: bool
    a3_violation: tuple[str, str] | None
    a3_detail: str
    a1_ok: bool
    a1_violation: tuple[str, str, str] | None
    a1_detail: str
    a2: str = VACUOUS
    a4: str = VACUOUS

    @property
    def passed(self) -> bool:
        return self.a1_ok and self.a3_ok

    def summary(self) -> str:
        if self.passed:
            return "axioms: PASS"
        failures = []
        if not self.a3_ok:
            failures.append(f"A3 violated: {self.a3_detail}")
        if not self.a1_ok:
            failures.append(f"A1 violated: {self.a1_detail}")
        return "axioms: FAIL (" + "; ".join(failures) + ")"

    def records(self) -> list[tuple[str, object]]:
        return [
            ("axioms", "PASS" if self.passed else "FAIL"),
            ("A1", "PASS" if self.a1_ok else f"FAIL {self.a1_detail}"),
            ("A2", self.a2),
            ("A3", "PASS" if self.a3_ok else f"FAIL {self.a3_detail}"),
            ("A4", self.a4),
        ]


def _accumulate(acc: dict[int, Fraction], cell, scale: Fraction) -> None:
    for z, w in cell:
        acc[z] = acc.get(z, Fraction(0)) + scale * w


def _clean(acc: dict[int, Fraction]) -> dict[int, Fraction]:
    return {z: w for z, w in acc.items() if w}


def check_axioms(table: ConvolutionTable) -> AxiomReport:
    """Check A3 (probability entries) and A1 (associativity on point masses).

    Both axioms are always evaluated so that a failing report is complete.
    Bilinearity makes the point-mass triples sufficient for associativity of
    convolution on all measures.
    """
    names = table.carrier.names
    n = len(names)

    a3_violation = None
    a3_detail = ""
    for x, y in product(range(n), repeat=2):
        m = table.entries[x][y]
        negative = [names[z] for z, w in enumerate(m.weights) if w < 0]
        if negative or m.mass != 1:
            a3_violation = (names[x], names[y])
            if negative:
                a3_detail = f"p_{names[x]} * p_{names[y]} has negative weight at {negative[0]}"
            else:
                a3_detail = f"p_{names[x]} * p_{names[y]} = {m} has total mass {m.mass}"
            break

    sp = table.sparse
    a1_violation = None
    a1_detail = ""
    for x, y, z in product(range(n), repeat=3):
        left: dict[int, Fraction] = {}
        for w, c in sp[x][y]:
            _accumulate(left, sp[w][z], c)
        right: dict[int, Fraction] = {}
        for w, c in sp[y][z]:
            _accumulate(right, sp[x][w], c)
        left, right = _clean(left), _clean(right)
        if left != right:
            a1_violation = (names[x], names[y], names[z])

            def show(acc):
                return format_terms((names[k], acc[k]) for k in sorted(acc)) or "0"

            a1_detail = (
                f"(p_{names[x]} * p_{names[y]}) * p_{names[z]} = {show(left)} but "
                f"p_{names[x]} * (p_{names[y]} * p_{names[z]}) = {show(right)}"
            )
            break

    return AxiomReport(
        a3_ok=a3_violation is None,
        a3_violation=a3_violation,
        a3_detail=a3_detail,
        a1_ok=a1_violation is None,
        a1_violation=a1_violation,
        a1_detail=a1_detail,
    )


class Semihypergroup:
    """A validated finite semihypergroup.

    Construction runs :func:`check_axioms` and raises :class:`AxiomError` on
    failure, so every instance satisfies A1 and A3.  Instances are immutable.
    """

    def __init__(self, table: ConvolutionTable):
        if not isinstance(table, ConvolutionTable):
            raise TypeError("Semihypergroup expects a ConvolutionTable")
        report = check_axioms(table)
        if not report.passed:
            raise AxiomError(report)
        self._table = table
        self._report = report

    @classmethod
    def from_products(cls, names, products) -> Semihypergroup:
        return cls(ConvolutionTable.from_products(names, products))

    @classmethod
    def from_weights(cls, names, rows) -> Semihypergroup:
        return cls(ConvolutionTable.from_weights(names, rows))

    @property
    def table(self) -> ConvolutionTable:
        return self._table

    @property
    def report(self) -> AxiomReport:
        return self._report

    @property
    def carrier(self) -> ElementSet:
        return self._table.carrier

    @property
    def names(self) -> tuple[str, ...]:
        return self._table.carrier.names

    def __len__(self) -> int:
        return len(self._table.carrier)

    def entry(self, x: str, y: str) -> Measure:
        return self._table.entry(x, y)

    def point(self, name: str) -> Measure:
        return Measure.point(self.carrier, name)

    def opposite(self) -> Semihypergroup:
        """The semihypergroup with ``p_x *' p_y = p_y * p_x``."""
        return Semihypergroup(self._table.transpose())

    def relabel(self, names) -> Semihypergroup:
        return Semihypergroup(self._table.relabel(names))

    def same_table(self, other: Semihypergroup) -> bool:
        """Entry-for-entry equality by position, ignoring element names."""
        return len(self) == len(other) and all(
            a.weights == b.weights
            for ra, rb in zip(self._table.entries, other._table.entries)
            for a, b in zip(ra, rb)
        )

    @cached_property
    def is_commutative(self) -> bool:
        return is_commutative(self)

    @cached_property
    def identity(self) -> str | None:
        return find_identity(self)

    @cached_property
    def involution(self) -> dict[str, str] | None:
        return find_involution(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Semihypergroup) and self._table == other._table

    def __hash__(self) -> int:
        return hash(self._table)

    def __repr__(self) -> str:
        return f"Semihypergroup({list(self.names)!r})"


def _check_member(S: Semihypergroup, mu: Measure) -> None:
    if not isinstance(mu, Measure):
        raise TypeError(f"expected a Measure, got {type(mu).__name__}")
    if mu.carrier != S.carrier:
        raise CarrierMismatchError("measure is not defined on this semihypergroup's carrier")


def convolve_points(S: Semihypergroup, x: str, y: str) -> Measure:
    return S.entry(x, y)


def convolve_measures(S: Semihypergroup, mu: Measure, nu: Measure) -> Measure:
    """Bilinear extension of the table: sum of mu(x) nu(y) (p_x * p_y)."""
    _check_member(S, mu)
    _check_member(S, nu)
    sp = S.table.sparse
    acc = [Fraction(0)] * len(S)
    for x, a in enumerate(mu.weights):
        if not a:
            continue
        for y, b in enumerate(nu.weights):
            if not b:
                continue
            ab = a * b
            for z, w in sp[x][y]:
                acc[z] += ab * w
    return Measure(S.carrier, tuple(acc))


def support(mu: Measure) -> frozenset[str]:
    return mu.support


def _convolve_masks(S: Semihypergroup, a: int, b: int) -> int:
    masks = S.table.support_masks
    out = 0
    x = 0
    while a >> x:
        if a >> x & 1:
            row = masks[x]
            y = 0
            while b >> y:
                if b >> y & 1:
                    out |= row[y]
                y += 1
        x += 1
    return out


def set_convolve(S: Semihypergroup, A: Iterable[str], B: Iterable[str]) -> frozenset[str]:
    """``A * B``: union of ``supp(p_x * p_y)`` over ``x in A``, ``y in B``."""
    return S.carrier.names_of(_convolve_masks(S, S.carrier.mask(A), S.carrier.mask(B)))


def is_commutative(S: Semihypergroup) -> bool:
    e = S.table.entries
    n = len(S)
    return all(e[x][y] == e[y][x] for x in range(n) for y in range(x + 1, n))


def _is_point(cell, z: int) -> bool:
    return len(cell) == 1 and cell[0][0] == z


def _identity_sides(S: Semihypergroup) -> tuple[list[int], list[int]]:
    sp = S.table.sparse
    n = len(S)
    left = [e for e in range(n) if all(_is_point(sp[e][x], x) for x in range(n))]
    right = [e for e in range(n) if all(_is_point(sp[x][e], x) for x in range(n))]
    return left, right


def identity_sidedness(S: Semihypergroup) -> dict[str, tuple[str, ...]]:
    """Elements acting as identities from each side.

    ``left`` holds every ``e`` with ``p_e * p_x = p_x`` for all ``x``;
    ``right`` every ``e`` with ``p_x * p_e = p_x`` for all ``x``.
    """
    left, right = _identity_sides(S)
    names = S.names
    return {
        "left": tuple(names[i] for i in left),
        "right": tuple(names[i] for i in right),
        "two_sided": tuple(names[i] for i in left if i in right),
    }


def find_identity(S: Semihypergroup) -> str | None:
    left, right = _identity_sides(S)
    both = [i for i in left if i in right]
    if len(both) > 1:  # two-sided identities are unique: e = e*f = f
        raise AssertionError("table has two distinct two-sided identities")
    return S.names[both[0]] if both else None


def find_involution(S: Semihypergroup) -> dict[str, str] | None:
    """Hypergroup involution compatible with the identity, if one exists.

    Conditions checked (Jewett's convention): ``s`` is an involutive
    permutation fixing the identity ``e``; ``p_{s(y)} * p_{s(x)}`` is the
    image of ``p_x * p_y`` under ``s``; and ``e`` lies in
    ``supp(p_x * p_y)`` exactly when ``y = s(x)``.  The last condition
    forces ``s`` uniquely, so no search is needed.
    """
    e_name = find_identity(S)
    if e_name is None:
        return None
    e = S.carrier.position(e_name)
    n = len(S)
    masks = S.table.support_masks
    sigma = []
    for x in range(n):
        partners = [y for y in range(n) if masks[x][y] >> e & 1]
        if len(partners) != 1:
            return None
        sigma.append(partners[0])
    if sigma[e] != e or any(sigma[sigma[x]] != x for x in range(n)):
        return None
    entries = S.table.entries
    for x, y in product(range(n), repeat=2):
        pushed = [Fraction(0)] * n
        for z, w in enumerate(entries[x][y].weights):
            pushed[sigma[z]] += w
        if tuple(pushed) != entries[sigma[y]][sigma[x]].weights:
            return None
    return {S.names[x]: S.names[sigma[x]] for x in range(n)}
