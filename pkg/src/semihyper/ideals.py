"""Left, right and two-sided ideals, minimality, and the kernel.

A nonempty subset ``I`` is a left ideal when ``supp(p_x * p_a)`` lies in
``I`` for every ``x`` in ``K`` and ``a`` in ``I``; right ideals use
``p_a * p_x``.  The empty set is never an ideal.

Subsets are handled internally as integer bitmasks over the carrier's
declaration order; the public functions take and return name sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .core import Semihypergroup
from .errors import NotAnIdealError, TheoremViolation

__all__ = [
    "IdealReport",
    "MinimalityVerdict",
    "SandwichReport",
    "scan_bound",
    "classify",
    "is_left_ideal",
    "is_right_ideal",
    "principal_left_ideal",
    "principal_right_ideal",
    "is_minimal_left_ideal",
    "is_minimal_right_ideal",
    "left_ideals",
    "right_ideals",
    "minimal_left_ideals",
    "minimal_right_ideals",
    "ideal_closure",
    "minimal_ideals",
    "kernel",
    "kernel_sandwich_check",
]

DEFAULT_SCAN_BOUND = 12


def scan_bound() -> int:
    """Largest size handled by power-set scans (env ``SHG_SCAN_BOUND``)."""
    raw = os.environ.get("SHG_SCAN_BOUND")
    if raw is None or not raw.strip():
        return DEFAULT_SCAN_BOUND
    value = int(raw)
    if value < 0:
        raise ValueError("SHG_SCAN_BOUND must be nonnegative")
    return value


def _masks(S: Semihypergroup, side: str) -> tuple[tuple[int, ...], ...]:
    """``masks[x][a]`` = support of the side's product of ``x`` with ``a``.

    For ``left`` that is ``p_x * p_a``; for ``right`` it is ``p_a * p_x``.
    """
    m = S.table.support_masks
    if side == "left":
        return m
    if side == "right":
        n = len(m)
        return tuple(tuple(m[a][x] for a in range(n)) for x in range(n))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _bits(mask: int):
    i = 0
    while mask >> i:
        if mask >> i & 1:
            yield i
        i += 1


def _is_ideal(masks, mask: int) -> bool:
    if not mask:
        return False
    for a in _bits(mask):
        for row in masks:
            if row[a] & ~mask:
                return False
    return True


def _violations(masks, mask: int) -> list[tuple[int, int, int]]:
    out = []
    for a in _bits(mask):
        for x, row in enumerate(masks):
            stray = row[a] & ~mask
            if stray:
                out.append((x, a, next(_bits(stray))))
    return out


def _translate(masks, seed: int) -> int:
    """``K * seed`` for the side encoded by ``masks``."""
    out = 0
    for a in _bits(seed):
        for row in masks:
            out |= row[a]
    return out


def _restricted(masks, left_mask: int, seed: int) -> int:
    """``L * seed`` (side-adjusted) for a subset ``L`` of left factors."""
    out = 0
    for a in _bits(seed):
        for x in _bits(left_mask):
            out |= masks[x][a]
    return out


def _full(n: int) -> int:
    return (1 << n) - 1


def _subset_mask(S: Semihypergroup, subset) -> int:
    mask = S.carrier.mask(subset)
    if not mask:
        raise NotAnIdealError("ideals are nonempty; got the empty subset")
    return mask


@dataclass(frozen=True)
class IdealReport:
    """Classification of a subset.  Truthiness answers the question asked
    (``side``): left, right or two-sided ideal."""

    subset: frozenset[str]
    side: str
    is_left: bool
    is_right: bool
    is_minimal_left: bool | None
    is_minimal_right: bool | None
    left_witnesses: tuple[tuple[str, str, str], ...] = field(default=())
    right_witnesses: tuple[tuple[str, str, str], ...] = field(default=())

    @property
    def is_two_sided(self) -> bool:
        return self.is_left and self.is_right

    def __bool__(self) -> bool:
        if self.side == "left":
            return self.is_left
        if self.side == "right":
            return self.is_right
        return self.is_two_sided


def classify(S: Semihypergroup, subset, side: str = "two-sided") -> IdealReport:
    """Full classification of a nonempty subset.

    Witnesses are listed in product order: ``(x, a, z)`` for the left test
    means ``z`` in ``supp(p_x * p_a)`` escapes the subset; ``(a, x, z)`` for
    the right test refers to ``p_a * p_x``.
    """
    mask = _subset_mask(S, subset)
    names = S.names
    reports = {}
    for s in ("left", "right"):
        masks = _masks(S, s)
        bad = _violations(masks, mask)
        minimal = None
        if not bad:
            minimal = _minimality(S, masks, mask)[0]
        if s == "right":
            bad = [(a, x, z) for x, a, z in bad]
        reports[s] = (not bad, minimal, tuple((names[u], names[v], names[z]) for u, v, z in bad))
    return IdealReport(
        subset=S.carrier.names_of(mask),
        side=side,
        is_left=reports["left"][0],
        is_right=reports["right"][0],
        is_minimal_left=reports["left"][1],
        is_minimal_right=reports["right"][1],
        left_witnesses=reports["left"][2],
        right_witnesses=reports["right"][2],
    )


def is_left_ideal(S: Semihypergroup, subset) -> IdealReport:
    return classify(S, subset, side="left")


def is_right_ideal(S: Semihypergroup, subset) -> IdealReport:
    return classify(S, subset, side="right")


def principal_left_ideal(S: Semihypergroup, a: str) -> frozenset[str]:
    """``K * {a}``, always a left ideal."""
    return S.carrier.names_of(_translate(_masks(S, "left"), S.carrier.mask([a])))


def principal_right_ideal(S: Semihypergroup, a: str) -> frozenset[str]:
    """``{a} * K``, always a right ideal."""
    return S.carrier.names_of(_translate(_masks(S, "right"), S.carrier.mask([a])))


@dataclass(frozen=True)
class MinimalityVerdict:
    """The three equivalent minimality criteria, evaluated independently.

    ``no_proper_subideal``: no smaller left ideal inside the subset (found by
    power-set scan, or by descent through principal ideals above the scan
    bound); ``principal_equal``: ``K*{a} = I`` for all ``a`` in ``I``;
    ``translate_equal``: ``I*{a} = I`` for all ``a`` in ``I``.
    """

    subset: frozenset[str]
    minimal: bool
    no_proper_subideal: bool
    principal_equal: bool
    translate_equal: bool
    method: str
    evidence: str

    def __bool__(self) -> bool:
        return self.minimal


def _minimality(S: Semihypergroup, masks, mask: int) -> tuple[bool, bool, bool, str, str]:
    names = S.names
    members = list(_bits(mask))
    evidence = []

    if len(members) <= scan_bound():
        method = "scan"
        no_sub = True
        for r in range(1, len(members)):
            for combo in combinations(members, r):
                sub = sum(1 << i for i in combo)
                if _is_ideal(masks, sub):
                    no_sub = False
                    evidence.append(
                        "proper sub-ideal {" + ", ".join(names[i] for i in combo) + "}"
                    )
                    break
            if not no_sub:
                break
    else:
        method = "descent"
        no_sub = True
        for b in members:
            sub = _translate(masks, 1 << b)
            if sub != mask:
                no_sub = False
                evidence.append(f"principal ideal of {names[b]} is a proper sub-ideal")
                break

    principal = True
    for a in members:
        if _translate(masks, 1 << a) != mask:
            principal = False
            evidence.append(f"K*{{{names[a]}}} differs from the subset")
            break

    translate = True
    for a in members:
        if _restricted(masks, mask, 1 << a) != mask:
            translate = False
            evidence.append(f"I*{{{names[a]}}} differs from the subset")
            break

    if not (no_sub == principal == translate):
        raise TheoremViolation(
            "minimality criteria disagree on {"
            + ", ".join(names[i] for i in members)
            + f"}}: scan={no_sub}, principal={principal}, translate={translate}"
        )
    return no_sub, principal, translate, method, "; ".join(evidence)


def _minimal_verdict(S: Semihypergroup, subset, side: str) -> MinimalityVerdict:
    mask = _subset_mask(S, subset)
    masks = _masks(S, side)
    if not _is_ideal(masks, mask):
        raise NotAnIdealError(f"subset is not a {side} ideal")
    no_sub, principal, translate, method, evidence = _minimality(S, masks, mask)
    return MinimalityVerdict(
        subset=S.carrier.names_of(mask),
        minimal=no_sub,
        no_proper_subideal=no_sub,
        principal_equal=principal,
        translate_equal=translate,
        method=method,
        evidence=evidence,
    )


def is_minimal_left_ideal(S: Semihypergroup, subset) -> MinimalityVerdict:
    """Raises :class:`NotAnIdealError` unless ``subset`` is a left ideal."""
    return _minimal_verdict(S, subset, "left")


def is_minimal_right_ideal(S: Semihypergroup, subset) -> MinimalityVerdict:
    return _minimal_verdict(S, subset, "right")


def _all_ideal_masks(S: Semihypergroup, side: str) -> list[int]:
    masks = _masks(S, side)
    return [m for m in range(1, _full(len(S)) + 1) if _is_ideal(masks, m)]


def left_ideals(S: Semihypergroup) -> list[frozenset[str]]:
    """Every left ideal, by power-set scan (exponential in ``len(S)``)."""
    return [S.carrier.names_of(m) for m in _all_ideal_masks(S, "left")]


def right_ideals(S: Semihypergroup) -> list[frozenset[str]]:
    return [S.carrier.names_of(m) for m in _all_ideal_masks(S, "right")]


def _least(mask: int) -> int:
    return (mask & -mask).bit_length()


def _minimal_scan(S: Semihypergroup, side: str) -> list[int]:
    ideals = _all_ideal_masks(S, side)
    ideals.sort(key=lambda m: bin(m).count("1"))
    minimal = []
    for m in ideals:
        if not any(k & ~m == 0 for k in minimal):
            minimal.append(m)
    return minimal


def _minimal_closure(S: Semihypergroup, side: str) -> list[int]:
    masks = _masks(S, side)
    n = len(S)
    principal = [_translate(masks, 1 << a) for a in range(n)]
    found = set()
    for a in range(n):
        cand = principal[a]
        if all(principal[b] == cand for b in _bits(cand)):
            found.add(cand)
    return list(found)


def _minimal(S: Semihypergroup, side: str, method: str) -> list[frozenset[str]]:
    if method == "auto":
        method = "scan" if len(S) <= scan_bound() else "closure"
    if method == "scan":
        found = _minimal_scan(S, side)
    elif method == "closure":
        found = _minimal_closure(S, side)
    else:
        raise ValueError("method must be 'auto', 'scan' or 'closure'")
    found.sort(key=_least)
    if not found:
        raise TheoremViolation(f"finite semihypergroup without a minimal {side} ideal")
    for i, a in enumerate(found):
        for b in found[i + 1:]:
            if a & b:
                raise TheoremViolation(f"two distinct minimal {side} ideals intersect")
    return [S.carrier.names_of(m) for m in found]


def minimal_left_ideals(S: Semihypergroup, method: str = "auto") -> list[frozenset[str]]:
    """All minimal left ideals, ordered by least member.

    ``method="scan"`` checks every subset; ``"closure"`` keeps each
    principal ideal ``K*{a}`` whose members all generate it back.
    ``"auto"`` scans up to :func:`scan_bound` elements.
    """
    return _minimal(S, "left", method)


def minimal_right_ideals(S: Semihypergroup, method: str = "auto") -> list[frozenset[str]]:
    return _minimal(S, "right", method)


def _closure_mask(S: Semihypergroup, seed: int, side: str) -> int:
    sides = ("left", "right") if side == "two-sided" else (side,)
    tables = [_masks(S, s) for s in sides]
    mask = seed
    while True:
        grown = mask
        for masks in tables:
            grown |= _translate(masks, mask)
        if grown == mask:
            return mask
        mask = grown


def ideal_closure(S: Semihypergroup, seed, side: str = "two-sided") -> frozenset[str]:
    """Smallest ``side`` ideal containing ``seed``."""
    return S.carrier.names_of(_closure_mask(S, _subset_mask(S, seed), side))


def minimal_ideals(S: Semihypergroup) -> list[frozenset[str]]:
    """Minimal two-sided ideals (there is at most one)."""
    n = len(S)
    gen = [_closure_mask(S, 1 << a, "two-sided") for a in range(n)]
    found = {g for g in gen if all(gen[b] == g for b in _bits(g))}
    return [S.carrier.names_of(m) for m in sorted(found, key=_least)]


def kernel(S: Semihypergroup) -> frozenset[str]:
    """Intersection of all two-sided ideals.

    Every ideal contains the ideal generated by any of its points, so it is
    enough to intersect the ideals generated by single elements.
    """
    n = len(S)
    mask = _full(n)
    for a in range(n):
        mask &= _closure_mask(S, 1 << a, "two-sided")
    if not mask:
        raise TheoremViolation("kernel of a finite semihypergroup is empty")
    return S.carrier.names_of(mask)


@dataclass(frozen=True)
class SandwichReport:
    """Inclusions ``union(minimal left) <= Ker <= union_x I*{x}`` for each
    minimal left ideal ``I``, and the mirrored right-ideal statement."""

    kernel: frozenset[str]
    minimal_left: tuple[frozenset[str], ...]
    minimal_right: tuple[frozenset[str], ...]
    union_minimal_left: frozenset[str]
    union_minimal_right: frozenset[str]
    left_upper: tuple[frozenset[str], ...]
    right_upper: tuple[frozenset[str], ...]
    ok: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def kernel_sandwich_check(S: Semihypergroup) -> SandwichReport:
    ker = kernel(S)
    n = len(S)
    full = _full(n)
    kmask = S.carrier.mask(ker)
    failures = []
    result = {}
    for side in ("left", "right"):
        masks = _masks(S, side)
        mins = [S.carrier.mask(m) for m in _minimal(S, side, "auto")]
        union = 0
        for m in mins:
            union |= m
        if union & ~kmask:
            failures.append(f"union of minimal {side} ideals is not inside the kernel")
        uppers = []
        for m in mins:
            upper = _restricted(masks, m, full)
            uppers.append(upper)
            if kmask & ~upper:
                failures.append(
                    f"kernel is not inside the translates of minimal {side} ideal "
                    + "{" + ", ".join(sorted(S.carrier.names_of(m))) + "}"
                )
        result[side] = (mins, union, uppers)
    names_of = S.carrier.names_of
    return SandwichReport(
        kernel=ker,
        minimal_left=tuple(names_of(m) for m in result["left"][0]),
        minimal_right=tuple(names_of(m) for m in result["right"][0]),
        union_minimal_left=names_of(result["left"][1]),
        union_minimal_right=names_of(result["right"][1]),
        left_upper=tuple(names_of(m) for m in result["left"][2]),
        right_upper=tuple(names_of(m) for m in result["right"][2]),
        ok=not failures,
        failures=tuple(failures),
    )
