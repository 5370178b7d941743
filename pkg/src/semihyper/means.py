"""Translations, orbits, invariant means, introversion and Arens products.

Functions on a finite carrier are rational vectors.  A mean is a positive
linear functional ``m`` with ``m(1) = 1``; in finite dimensions positivity
on indicator functions forces nonnegative weights, so means are exactly
probability vectors.  Scalars are rational throughout: every identity
checked here is rational-linear, so nothing is lost by not working over
the complex numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import ElementSet, Measure, Semihypergroup, as_rational
from .errors import CarrierMismatchError, PreconditionError, TheoremViolation
from .feasibility import find_nonnegative_solution
from .ideals import minimal_left_ideals

__all__ = [
    "FunctionVector",
    "TranslationMatrix",
    "MeanWitness",
    "RimVerdict",
    "pair",
    "translation_matrix",
    "translate",
    "right_orbit",
    "left_orbit",
    "find_invariant_mean",
    "is_invariant_mean",
    "lim_exists_commutative_check",
    "introversion",
    "introversion_hull_check",
    "arens_product",
    "duality_check",
    "rim_implies_unique_minimal_left_check",
]

_SIDES = ("left", "right")


def _side(side: str) -> str:
    if side not in _SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return side


@dataclass(frozen=True)
class FunctionVector:
    """A rational-valued function on a finite carrier."""

    carrier: ElementSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_rational(v) for v in self.values)
        if len(values) != len(self.carrier):
            raise ValueError("function length does not match the carrier")
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, carrier: ElementSet, c=1) -> FunctionVector:
        return cls(carrier, (as_rational(c),) * len(carrier))

    @classmethod
    def indicator(cls, carrier: ElementSet, names: Iterable[str]) -> FunctionVector:
        chosen = set(carrier.positions(names))
        return cls(carrier, tuple(Fraction(int(i in chosen)) for i in range(len(carrier))))

    @classmethod
    def from_mapping(cls, carrier: ElementSet, mapping) -> FunctionVector:
        values = [Fraction(0)] * len(carrier)
        for name, v in mapping.items():
            values[carrier.position(name)] = as_rational(v)
        return cls(carrier, tuple(values))

    def __getitem__(self, name: str) -> Fraction:
        return self.values[self.carrier.position(name)]

    def _same(self, other: FunctionVector) -> None:
        if other.carrier != self.carrier:
            raise CarrierMismatchError("functions live on different carriers")

    def __add__(self, other: FunctionVector) -> FunctionVector:
        self._same(other)
        return FunctionVector(self.carrier, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar) -> FunctionVector:
        c = as_rational(scalar)
        return FunctionVector(self.carrier, tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def pair(mu: Measure, f: FunctionVector) -> Fraction:
    """``mu(f) = sum_x mu(x) f(x)``."""
    if mu.carrier != f.carrier:
        raise CarrierMismatchError("measure and function live on different carriers")
    return sum((a * b for a, b in zip(mu.weights, f.values)), Fraction(0))


def _check_function(S: Semihypergroup, f: FunctionVector) -> None:
    if f.carrier != S.carrier:
        raise CarrierMismatchError("function is not defined on this semihypergroup's carrier")


def _check_measure(S: Semihypergroup, mu: Measure) -> None:
    if mu.carrier != S.carrier:
        raise CarrierMismatchError("measure is not defined on this semihypergroup's carrier")


@dataclass(frozen=True)
class TranslationMatrix:
    """Row ``y`` holds the weights of ``p_x * p_y`` (left) or ``p_y * p_x``
    (right), so applying the matrix to ``f`` gives ``L_x f`` or ``R_x f``."""

    carrier: ElementSet
    entries: tuple[tuple[Fraction, ...], ...]
    side: str
    by: str

    def apply(self, f: FunctionVector) -> FunctionVector:
        if f.carrier != self.carrier:
            raise CarrierMismatchError("function is not defined on this carrier")
        return FunctionVector(
            self.carrier,
            tuple(sum((a * b for a, b in zip(row, f.values)), Fraction(0)) for row in self.entries),
        )

    def is_row_stochastic(self) -> bool:
        return all(all(v >= 0 for v in row) and sum(row) == 1 for row in self.entries)


def translation_matrix(S: Semihypergroup, x: str, side: str = "left") -> TranslationMatrix:
    i = S.carrier.position(x)
    rows = S.table.entries
    n = len(S)
    if _side(side) == "left":
        entries = tuple(rows[i][y].weights for y in range(n))
    else:
        entries = tuple(rows[y][i].weights for y in range(n))
    return TranslationMatrix(S.carrier, entries, side, x)


def translate(S: Semihypergroup, f: FunctionVector, x: str, side: str = "left") -> FunctionVector:
    """``L_x f(y) = f(x*y)`` or ``R_x f(y) = f(y*x)``, where ``f(x*y)`` means
    the integral of ``f`` against ``p_x * p_y``."""
    _check_function(S, f)
    return translation_matrix(S, x, side).apply(f)


def right_orbit(S: Semihypergroup, f: FunctionVector) -> frozenset[FunctionVector]:
    """``{R_x f : x in K}``, a set of at most ``len(S)`` functions."""
    return frozenset(translate(S, f, x, "right") for x in S.names)


def left_orbit(S: Semihypergroup, f: FunctionVector) -> frozenset[FunctionVector]:
    return frozenset(translate(S, f, x, "left") for x in S.names)


@dataclass(frozen=True)
class MeanWitness:
    """Result of the invariant-mean search.

    ``solution_dimension`` is the dimension of the affine space of
    normalized invariant functionals (``n`` minus the rank of the equality
    system); it bounds the dimension of the set of invariant means.
    """

    side: str
    status: str
    weights: Measure | None
    solution_dimension: int | None

    @property
    def found(self) -> bool:
        return self.status == "found"

    def __bool__(self) -> bool:
        return self.found


def _invariance_system(S: Semihypergroup, side: str):
    n = len(S)
    A = []
    for x in S.names:
        M = translation_matrix(S, x, side).entries
        # (M^T m)_z - m_z = 0 for every z
        for z in range(n):
            A.append([M[y][z] - (1 if y == z else 0) for y in range(n)])
    A.append([Fraction(1)] * n)
    b = [Fraction(0)] * (len(A) - 1) + [Fraction(1)]
    return A, b


def is_invariant_mean(S: Semihypergroup, m: Measure, side: str = "left") -> bool:
    """Check ``m(L_x f) = m(f)`` (or ``R_x``) for every ``x`` and every
    indicator ``f``, straight from the translation operators."""
    _check_measure(S, m)
    if not m.is_probability:
        return False
    for z in S.names:
        f = FunctionVector.indicator(S.carrier, [z])
        base = pair(m, f)
        for x in S.names:
            if pair(m, translate(S, f, x, _side(side))) != base:
                return False
    return True


def find_invariant_mean(S: Semihypergroup, side: str = "left") -> MeanWitness:
    """Search for a left (``A_x^T m = m``) or right (``B_x^T m = m``)
    invariant mean by exact elimination plus phase-1 simplex.

    When several means exist the first vertex reached is returned.  A found
    witness is re-checked against the translation operators before it is
    reported.
    """
    _side(side)
    A, b = _invariance_system(S, side)
    result = find_nonnegative_solution(A, b)
    dimension = len(S) - result.rank
    if not result.feasible:
        return MeanWitness(side, "none", None, None)
    m = Measure(S.carrier, result.point)
    if not is_invariant_mean(S, m, side):
        raise TheoremViolation(f"solver returned a non-invariant {side} mean: {m}")
    return MeanWitness(side, "found", m, dimension)


def lim_exists_commutative_check(S: Semihypergroup) -> bool:
    """Every commutative finite semihypergroup carries a left invariant mean."""
    if not S.is_commutative:
        raise PreconditionError("lim_exists_commutative_check needs a commutative semihypergroup")
    if not find_invariant_mean(S, "left").found:
        raise TheoremViolation("commutative semihypergroup without a left invariant mean")
    return True


def introversion(S: Semihypergroup, mu: Measure, f: FunctionVector, side: str = "left") -> FunctionVector:
    """``T_mu f(x) = mu(L_x f) = sum_y mu(y) f(x*y)`` (left) or
    ``U_mu f(x) = mu(R_x f) = sum_y mu(y) f(y*x)`` (right)."""
    _check_measure(S, mu)
    _check_function(S, f)
    sp = S.table.sparse
    left = _side(side) == "left"
    fv = f.values
    out = []
    for x in range(len(S)):
        total = Fraction(0)
        for y, a in enumerate(mu.weights):
            if a:
                cell = sp[x][y] if left else sp[y][x]
                total += a * sum((w * fv[z] for z, w in cell), Fraction(0))
        out.append(total)
    return FunctionVector(S.carrier, tuple(out))


def introversion_hull_check(S: Semihypergroup, mu: Measure, f: FunctionVector) -> bool:
    """``T_mu f = sum_y mu(y) R_y f``, the finite form of the statement that
    ``T_mu f`` lies in the closed convex hull of the right orbit."""
    total = FunctionVector.constant(S.carrier, 0)
    for y, w in zip(S.names, mu.weights):
        total = total + w * translate(S, f, y, "right")
    return introversion(S, mu, f, "left") == total


def arens_product(S: Semihypergroup, mu: Measure, nu: Measure, side: str = "left") -> Measure:
    """The measure ``w`` with ``w(f) = mu(T_nu f)`` (left) or
    ``w(f) = nu(U_mu f)`` (right), read off on point indicators.

    ``T_nu`` and ``U_mu`` are applied to every indicator at once as the
    matrices ``T[x][z] = sum_y nu(y) (p_x * p_y)(z)`` and
    ``U[x][z] = sum_y mu(y) (p_y * p_x)(z)``.
    """
    _check_measure(S, mu)
    _check_measure(S, nu)
    sp = S.table.sparse
    n = len(S)
    left = _side(side) == "left"
    inner, outer = (nu, mu) if left else (mu, nu)
    weights = [Fraction(0)] * n
    for x, c in enumerate(outer.weights):
        if not c:
            continue
        column = [Fraction(0)] * n
        for y, a in enumerate(inner.weights):
            if a:
                for z, w in sp[x][y] if left else sp[y][x]:
                    column[z] += a * w
        for z in range(n):
            if column[z]:
                weights[z] += c * column[z]
    return Measure(S.carrier, tuple(weights))


def duality_check(S: Semihypergroup, mu: Measure, nu: Measure, f: FunctionVector) -> bool:
    """``mu(T_nu f) = nu(U_mu f)``, evaluated exactly."""
    return pair(mu, introversion(S, nu, f, "left")) == pair(nu, introversion(S, mu, f, "right"))


@dataclass(frozen=True)
class RimVerdict:
    status: str  # "pass" or "not applicable"
    rim: MeanWitness
    minimal_left: tuple[frozenset[str], ...]

    def __bool__(self) -> bool:
        return True


def rim_implies_unique_minimal_left_check(S: Semihypergroup) -> RimVerdict:
    """A right invariant mean forces a unique minimal left ideal."""
    rim = find_invariant_mean(S, "right")
    minimal = tuple(minimal_left_ideals(S))
    if not rim.found:
        return RimVerdict("not applicable", rim, minimal)
    if len(minimal) != 1:
        raise TheoremViolation(
            f"right invariant mean {rim.weights} found but there are "
            f"{len(minimal)} minimal left ideals"
        )
    return RimVerdict("pass", rim, minimal)
