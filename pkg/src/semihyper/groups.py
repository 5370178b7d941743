"""Finite groups given by Cayley tables, and affine group actions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Sequence

from .core import ElementSet
from .errors import GroupError

__all__ = [
    "CayleyTable",
    "AffineAction",
    "check_associative",
    "cyclic_group",
    "symmetric_group",
    "direct_product",
    "cycle_name",
    "inner_action",
    "translation_action",
    "trivial_action",
]


def check_associative(product_table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Return the first triple violating associativity, or ``None``."""
    n = len(product_table)
    for x, y, z in product(range(n), repeat=3):
        if product_table[product_table[x][y]][z] != product_table[x][product_table[y][z]]:
            return (x, y, z)
    return None


def _index_table(elements: ElementSet, table) -> tuple[tuple[int, ...], ...]:
    n = len(elements)
    rows = []
    for row in table:
        row = tuple(row)
        if len(row) != n:
            raise GroupError(f"product table rows must have {n} entries")
        rows.append(
            tuple(elements.position(v) if isinstance(v, str) else int(v) for v in row)
        )
    if len(rows) != n:
        raise GroupError(f"product table must have {n} rows")
    for row in rows:
        for v in row:
            if not 0 <= v < n:
                raise GroupError(f"product index {v} out of range")
    return tuple(rows)


@dataclass(frozen=True)
class CayleyTable:
    """A finite group: elements, product indices, identity and inverses.

    Use :meth:`from_product`, which verifies the group axioms.
    """

    elements: ElementSet
    product: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @classmethod
    def from_product(cls, names, table) -> CayleyTable:
        """Validate ``table[x][y] = x*y`` (names or indices) as a group."""
        elements = names if isinstance(names, ElementSet) else ElementSet(tuple(names))
        prod = _index_table(elements, table)
        n = len(elements)
        bad = check_associative(prod)
        if bad is not None:
            x, y, z = (elements[i] for i in bad)
            raise GroupError(f"not associative: ({x} {y}) {z} != {x} ({y} {z})")
        ids = [e for e in range(n) if all(prod[e][x] == x == prod[x][e] for x in range(n))]
        if not ids:
            raise GroupError("no identity element")
        e = ids[0]
        inverse = []
        for x in range(n):
            inv = [y for y in range(n) if prod[x][y] == e == prod[y][x]]
            if not inv:
                raise GroupError(f"element {elements[x]} has no inverse")
            inverse.append(inv[0])
        return cls(elements, prod, e, tuple(inverse))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def names(self) -> tuple[str, ...]:
        return self.elements.names

    def mul(self, x: str, y: str) -> str:
        p = self.product[self.elements.position(x)][self.elements.position(y)]
        return self.elements[p]

    def inv(self, x: str) -> str:
        return self.elements[self.inverse[self.elements.position(x)]]

    @cached_property
    def is_abelian(self) -> bool:
        n = len(self)
        return all(self.product[x][y] == self.product[y][x] for x in range(n) for y in range(n))

    def subgroup_indices(self, subset: Iterable[str]) -> tuple[int, ...]:
        """Verify ``subset`` is a subgroup and return its sorted indices."""
        idx = self.elements.positions(subset)
        if not idx:
            raise GroupError("a subgroup must be nonempty")
        members = set(idx)
        if self.identity not in members:
            raise GroupError("subset does not contain the identity")
        for a in idx:
            if self.inverse[a] not in members:
                raise GroupError(f"subset not closed under inverses at {self.elements[a]}")
            for b in idx:
                if self.product[a][b] not in members:
                    raise GroupError(
                        f"subset not closed: {self.elements[a]} {self.elements[b]} = "
                        f"{self.elements[self.product[a][b]]}"
                    )
        return tuple(idx)

    def is_normal(self, subset: Iterable[str]) -> bool:
        H = set(self.subgroup_indices(subset))
        P, inv = self.product, self.inverse
        return all(P[P[g][h]][inv[g]] in H for g in range(len(self)) for h in H)

    def subgroup(self, subset: Iterable[str]) -> CayleyTable:
        """The subgroup as a group in its own right (names kept)."""
        idx = self.subgroup_indices(subset)
        pos = {g: i for i, g in enumerate(idx)}
        names = [self.elements[g] for g in idx]
        return CayleyTable.from_product(
            names, [[pos[self.product[a][b]] for b in idx] for a in idx]
        )

    def subgroups(self) -> list[tuple[int, ...]]:
        """All subgroups, found as closures of one or two generators.

        Adequate for the small groups used in tests and fuzzing.
        """
        n = len(self)
        found = set()
        for a, b in product(range(n), repeat=2):
            found.add(self._closure({a, b}))
        return sorted(found, key=lambda s: (len(s), s))

    def _closure(self, gens: set[int]) -> tuple[int, ...]:
        members = {self.identity} | set(gens)
        frontier = set(members)
        while frontier:
            new = {self.product[a][b] for a in members for b in frontier}
            new |= {self.product[b][a] for a in members for b in frontier}
            frontier = new - members
            members |= frontier
        return tuple(sorted(members))

    def left_cosets(self, subset: Iterable[str]) -> list[tuple[int, ...]]:
        """Left cosets ``xH`` ordered by least member."""
        H = self.subgroup_indices(subset)
        seen: dict[tuple[int, ...], None] = {}
        for g in range(len(self)):
            seen.setdefault(tuple(sorted({self.product[g][h] for h in H})), None)
        return sorted(seen, key=min)

    def quotient(self, subset: Iterable[str], suffix: str = "H") -> CayleyTable:
        """``G/N`` for normal ``N``; cosets are named ``<rep><suffix>``."""
        if not self.is_normal(subset):
            raise GroupError("quotient requires a normal subgroup")
        cosets = self.left_cosets(subset)
        where = {g: i for i, c in enumerate(cosets) for g in c}
        names = [f"{self.elements[c[0]]}{suffix}" for c in cosets]
        table = [[where[self.product[a[0]][b[0]]] for b in cosets] for a in cosets]
        return CayleyTable.from_product(names, table)


def cyclic_group(n: int, prefix: str = "") -> CayleyTable:
    names = [f"{prefix}{i}" for i in range(n)]
    return CayleyTable.from_product(names, [[(i + j) % n for j in range(n)] for i in range(n)])


def cycle_name(perm: Sequence[int]) -> str:
    """Cycle notation with 1-based points, e.g. ``(124)`` or ``(12)(34)``.

    Points are written without separators, so this is unambiguous only for
    degree at most 9.
    """
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(p + 1) for p in cyc) + ")")
    return "".join(cycles) or "e"


def symmetric_group(n: int) -> CayleyTable:
    """``S_n`` on points ``1..n``; ``(xy)(i) = x(y(i))`` (right factor first).

    Elements are listed in lexicographic order of their one-line images, so
    the identity ``e`` comes first.
    """
    if not 1 <= n <= 9:
        raise GroupError("symmetric_group supports degrees 1..9")
    perms = list(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(x[y[i]] for i in range(n))] for y in perms] for x in perms]
    return CayleyTable.from_product([cycle_name(p) for p in perms], table)


def direct_product(G: CayleyTable, H: CayleyTable, sep: str = "|") -> CayleyTable:
    pairs = list(product(range(len(G)), range(len(H))))
    pos = {p: i for i, p in enumerate(pairs)}
    names = [f"{G.elements[a]}{sep}{H.elements[b]}" for a, b in pairs]
    table = [
        [pos[(G.product[a][c], H.product[b][d])] for c, d in pairs] for a, b in pairs
    ]
    return CayleyTable.from_product(names, table)


@dataclass(frozen=True)
class AffineAction:
    """Right action ``x^h = a_h psi_h(x)`` of a group ``H`` on a group ``G``.

    ``maps[h] = (a_h, psi_h)`` with ``psi_h`` an automorphism of ``G`` given
    as a tuple of image indices.  The constructor verifies that every
    ``psi_h`` is an automorphism and that ``x^e = x`` and
    ``x^(st) = (x^s)^t``.
    """

    group: CayleyTable
    target: CayleyTable
    maps: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        H, G = self.group, self.target
        maps = tuple((int(a), tuple(psi)) for a, psi in self.maps)
        object.__setattr__(self, "maps", maps)
        if len(maps) != len(H):
            raise GroupError("an affine action needs one (a_h, psi_h) per element of H")
        n = len(G)
        P = G.product
        for h, (a, psi) in enumerate(maps):
            hn = H.elements[h]
            if not 0 <= a < n:
                raise GroupError(f"translation part of {hn} out of range")
            if sorted(psi) != list(range(n)):
                raise GroupError(f"psi for {hn} is not a permutation of the target")
            for x, y in product(range(n), repeat=2):
                if psi[P[x][y]] != P[psi[x]][psi[y]]:
                    raise GroupError(
                        f"psi for {hn} is not an automorphism at "
                        f"({G.elements[x]}, {G.elements[y]})"
                    )
        for x in range(n):
            if self._act(x, H.identity) != x:
                raise GroupError(f"identity of H moves {G.elements[x]}")
        for s, t in product(range(len(H)), repeat=2):
            st = H.product[s][t]
            for x in range(n):
                if self._act(x, st) != self._act(self._act(x, s), t):
                    raise GroupError(
                        f"action law x^(st) = (x^s)^t fails at x={G.elements[x]}, "
                        f"s={H.elements[s]}, t={H.elements[t]}"
                    )

    def _act(self, x: int, h: int) -> int:
        a, psi = self.maps[h]
        return self.target.product[a][psi[x]]

    def act(self, x: str, h: str) -> str:
        G, H = self.target, self.group
        return G.elements[self._act(G.elements.position(x), H.elements.position(h))]

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits ``x^H`` as sorted index tuples, ordered by least member."""
        seen = {}
        for x in range(len(self.target)):
            orbit = tuple(sorted({self._act(x, h) for h in range(len(self.group))}))
            seen.setdefault(orbit, None)
        return sorted(seen, key=min)


def inner_action(G: CayleyTable, subset: Iterable[str]) -> AffineAction:
    """Conjugation by a subgroup: ``x^h = h^-1 x h``.

    The inverse on the left makes this a right action, as the action law
    requires.
    """
    H = G.subgroup(subset)
    P, inv = G.product, G.inverse
    maps = []
    for hn in H.names:
        h = G.elements.position(hn)
        maps.append((G.identity, tuple(P[P[inv[h]][x]][h] for x in range(len(G)))))
    return AffineAction(H, G, tuple(maps))


def translation_action(G: CayleyTable, subset: Iterable[str]) -> AffineAction:
    """Pure translations ``x^h = h^-1 x``; orbits are right cosets ``Ax``."""
    H = G.subgroup(subset)
    ident = tuple(range(len(G)))
    maps = [(G.inverse[G.elements.position(hn)], ident) for hn in H.names]
    return AffineAction(H, G, tuple(maps))


def trivial_action(G: CayleyTable) -> AffineAction:
    H = CayleyTable.from_product(["1"], [[0]])
    return AffineAction(H, G, ((G.identity, tuple(range(len(G)))),))
