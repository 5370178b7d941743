"""Homomorphisms between finite semihypergroups.

A map ``phi`` is a homomorphism when pushing ``p_x * p_y`` forward along
``phi`` gives ``p_phi(x) * p_phi(y)`` for every pair.  On finite carriers
with rational weights this pushforward identity is exact, so the support
statement holds for every point of the support rather than almost
everywhere.  Openness and properness conditions are vacuous here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import ConvolutionTable, ElementSet, Measure, Semihypergroup
from .errors import (
    AxiomError,
    CarrierMismatchError,
    NotAnIdealError,
    PreconditionError,
    SearchSpaceError,
    TheoremViolation,
)
from .ideals import is_left_ideal

__all__ = [
    "ElementMap",
    "HomVerdict",
    "DEFAULT_CAP",
    "pushforward",
    "is_homomorphism",
    "image_semihypergroup",
    "push_ideal",
    "pull_ideal",
    "support_lemma_check",
    "enumerate_homomorphisms",
]

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class ElementMap:
    """Total map between carriers, stored as target indices."""

    source: ElementSet
    target: ElementSet
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if len(images) != len(self.source):
            raise ValueError("a map needs exactly one image per source element")
        if any(not 0 <= i < len(self.target) for i in images):
            raise ValueError("image index out of range")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_dict(cls, source, target, mapping: Mapping[str, str]) -> ElementMap:
        source = source.carrier if isinstance(source, Semihypergroup) else source
        target = target.carrier if isinstance(target, Semihypergroup) else target
        missing = [x for x in source.names if x not in mapping]
        if missing:
            raise ValueError(f"map is not total; no image for {', '.join(missing)}")
        extra = [x for x in mapping if x not in source]
        if extra:
            raise ValueError(f"map has images for unknown elements {', '.join(extra)}")
        return cls(source, target, tuple(target.position(mapping[x]) for x in source.names))

    @classmethod
    def identity(cls, carrier: ElementSet) -> ElementMap:
        return cls(carrier, carrier, tuple(range(len(carrier))))

    @classmethod
    def constant(cls, source: ElementSet, target: ElementSet, value: str) -> ElementMap:
        return cls(source, target, (target.position(value),) * len(source))

    def __call__(self, x: str) -> str:
        return self.target[self.images[self.source.position(x)]]

    def as_dict(self) -> dict[str, str]:
        return {x: self.target[i] for x, i in zip(self.source.names, self.images)}

    def image(self, subset=None) -> frozenset[str]:
        names = self.source.names if subset is None else subset
        return frozenset(self(x) for x in names)

    def preimage(self, subset) -> frozenset[str]:
        wanted = set(self.target.positions(subset))
        return frozenset(x for x, i in zip(self.source.names, self.images) if i in wanted)

    def compose(self, inner: ElementMap) -> ElementMap:
        """``self o inner``: apply ``inner`` first."""
        if inner.target != self.source:
            raise CarrierMismatchError("maps do not compose: carriers differ")
        return ElementMap(inner.source, self.target, tuple(self.images[i] for i in inner.images))

    def __str__(self) -> str:
        return ", ".join(f"{x} -> {y}" for x, y in self.as_dict().items())


def pushforward(phi: ElementMap, mu: Measure) -> Measure:
    if mu.carrier != phi.source:
        raise CarrierMismatchError("measure does not live on the map's source")
    out = [Fraction(0)] * len(phi.target)
    for i, w in enumerate(mu.weights):
        out[phi.images[i]] += w
    return Measure(phi.target, tuple(out))


def _check_carriers(phi: ElementMap, S: Semihypergroup, T: Semihypergroup) -> None:
    if phi.source != S.carrier or phi.target != T.carrier:
        raise CarrierMismatchError("map carriers do not match the semihypergroups")


@dataclass(frozen=True)
class HomVerdict:
    """Truthy when the map is a homomorphism; otherwise ``witness`` is the
    first failing pair with the pushed and expected measures."""

    ok: bool
    witness: tuple[str, str] | None = None
    pushed: Measure | None = None
    expected: Measure | None = None

    def __bool__(self) -> bool:
        return self.ok


def _pair_ok(images, S: Semihypergroup, T: Semihypergroup, x: int, y: int) -> bool:
    acc: dict[int, Fraction] = {}
    for z, w in S.table.sparse[x][y]:
        t = images[z]
        acc[t] = acc.get(t, Fraction(0)) + w
    want = T.table.sparse[images[x]][images[y]]
    return len(want) == len(acc) and all(acc.get(t) == w for t, w in want)


def is_homomorphism(phi: ElementMap, S: Semihypergroup, T: Semihypergroup) -> HomVerdict:
    _check_carriers(phi, S, T)
    n = len(S)
    for x in range(n):
        for y in range(n):
            if not _pair_ok(phi.images, S, T, x, y):
                xn, yn = S.names[x], S.names[y]
                return HomVerdict(
                    False,
                    (xn, yn),
                    pushforward(phi, S.table.entries[x][y]),
                    T.entry(phi(xn), phi(yn)),
                )
    return HomVerdict(True)


def _require_hom(phi, S, T) -> None:
    verdict = is_homomorphism(phi, S, T)
    if not verdict:
        x, y = verdict.witness
        raise PreconditionError(f"map is not a homomorphism (fails at ({x}, {y}))")


def image_semihypergroup(phi: ElementMap, S: Semihypergroup, T: Semihypergroup) -> Semihypergroup:
    """``T`` restricted to ``phi(K)``, listed in ``T``'s order."""
    _require_hom(phi, S, T)
    idx = sorted(set(phi.images))
    names = tuple(T.names[i] for i in idx)
    carrier = ElementSet(names)
    rows = []
    for u in idx:
        row = []
        for v in idx:
            m = T.table.entries[u][v]
            stray = {T.names[z] for z, w in enumerate(m.weights) if w} - set(names)
            if stray:
                raise TheoremViolation(
                    f"image is not closed: {T.names[u]} * {T.names[v]} reaches {sorted(stray)}"
                )
            row.append(Measure(carrier, tuple(m.weights[i] for i in idx)))
        rows.append(tuple(row))
    try:
        return Semihypergroup(ConvolutionTable(carrier, tuple(rows)))
    except AxiomError as exc:
        raise TheoremViolation(f"image of a homomorphism fails the axioms: {exc}") from exc


def push_ideal(phi: ElementMap, S: Semihypergroup, T: Semihypergroup, subset) -> frozenset[str]:
    """``phi(I)`` for a left ideal ``I``; verified to be a left ideal of the image."""
    _require_hom(phi, S, T)
    if not is_left_ideal(S, subset):
        raise NotAnIdealError("push_ideal needs a left ideal of the source")
    image = phi.image(subset)
    if not is_left_ideal(image_semihypergroup(phi, S, T), image):
        raise TheoremViolation(f"image {sorted(image)} of a left ideal is not a left ideal")
    return image


def pull_ideal(phi: ElementMap, S: Semihypergroup, T: Semihypergroup, subset) -> frozenset[str] | None:
    """``phi^-1(J)`` for a left ideal ``J`` of ``T``.

    Returns ``None`` when the preimage is empty, which is not an ideal.
    """
    _require_hom(phi, S, T)
    if not is_left_ideal(T, subset):
        raise NotAnIdealError("pull_ideal needs a left ideal of the target")
    pre = phi.preimage(subset)
    if not pre:
        return None
    if not is_left_ideal(S, pre):
        raise TheoremViolation(f"preimage {sorted(pre)} of a left ideal is not a left ideal")
    return pre


def support_lemma_check(phi: ElementMap, S: Semihypergroup, T: Semihypergroup) -> bool:
    """Every ``z`` in ``supp(p_x * p_y)`` maps into ``supp(p_phi(x) * p_phi(y))``."""
    _require_hom(phi, S, T)
    masks = T.table.support_masks
    n = len(S)
    for x in range(n):
        for y in range(n):
            allowed = masks[phi.images[x]][phi.images[y]]
            for z, _ in S.table.sparse[x][y]:
                if not allowed >> phi.images[z] & 1:
                    return False
    return True


def enumerate_homomorphisms(
    S: Semihypergroup, T: Semihypergroup, cap: int = DEFAULT_CAP
) -> list[ElementMap]:
    """All homomorphisms ``S -> T`` in lexicographic order of image indices.

    Depth-first search over source elements in declaration order; a pair is
    checked as soon as both factors and its whole support have images.
    """
    n, m = len(S), len(T)
    if m**n > cap:
        raise SearchSpaceError(
            f"search space {m}^{n} = {m**n} exceeds cap {cap}; pass a larger cap"
        )
    sparse = S.table.sparse
    due: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            need = max([x, y] + [z for z, _ in sparse[x][y]])
            due[need].append((x, y))

    found = []
    images = [0] * n

    def extend(k: int) -> None:
        if k == n:
            found.append(ElementMap(S.carrier, T.carrier, tuple(images)))
            return
        for t in range(m):
            images[k] = t
            if all(_pair_ok(images, S, T, x, y) for x, y in due[k]):
                extend(k + 1)

    if n:
        extend(0)
    return found
