"""Permutations, matroid isomorphism, and automorphism groups.

The isomorphism search is plain backtracking over element images, pruned by
the per-element basis-degree invariant and by checking every r-subset of the
assigned prefix as soon as it is complete.  Ground sets are kept small (the
guard defaults to n <= 12) and a node budget bounds the worst case.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from .errors import InputError, SearchBudgetExceeded
from .matroid import Matroid, mask_elements

DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_MAX_GROUND = 12


class Permutation:
    """Bijection of {1..n}; images[i-1] is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise InputError(f"{images!r} is not a permutation of 1..{n}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for i, e in enumerate(cyc):
                images[e - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, e: int) -> int:
        return self.images[e - 1]

    def apply_mask(self, mask: int) -> int:
        out = 0
        for e in mask_elements(mask):
            out |= 1 << (self.images[e - 1] - 1)
        return out

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(e) = self(other(e))."""
        if self.n != other.n:
            raise InputError("permutation size mismatch")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            cur = self.apply(start)
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.apply(cur)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "Permutation(id)"
        return "Permutation(" + "".join(
            "(" + " ".join(map(str, c)) + ")" for c in cyc
        ) + ")"


def _closure(n: int, generators: Iterable[tuple]) -> frozenset:
    gens = [g for g in generators]
    idn = tuple(range(1, n + 1))
    seen = {idn}
    frontier = [idn]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = tuple(g[cur[i] - 1] for i in range(n))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


class PermutationGroup:
    """Generated subgroup of S_n; the order comes from closing the generators."""

    __slots__ = ("n", "generators", "_elements")

    def __init__(self, n: int, generators: Sequence[Permutation]):
        for g in generators:
            if g.n != n:
                raise InputError("generator size mismatch")
        self.n = n
        self.generators = tuple(g for g in generators if not g.is_identity())
        self._elements = None

    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = _closure(self.n, [g.images for g in self.generators])
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self.elements()

    def __repr__(self):
        return f"PermutationGroup(n={self.n}, order={self.order}, gens={list(self.generators)})"


def _basis_degrees(m: Matroid) -> list[int]:
    deg = [0] * (m.n + 1)
    for b in m.bases:
        for e in mask_elements(b):
            deg[e] += 1
    return deg


def _search_isomorphisms(
    m1: Matroid,
    m2: Matroid,
    find_all: bool,
    node_budget: int,
    max_ground: int,
):
    """Backtracking core; yields image tuples."""
    n, r = m1.n, m1.rank
    if n > max_ground:
        raise SearchBudgetExceeded(
            f"ground set size {n} exceeds the search guard {max_ground}"
        )
    if (n, r, len(m1.bases)) != (m2.n, m2.rank, len(m2.bases)):
        return
    deg1, deg2 = _basis_degrees(m1), _basis_degrees(m2)
    if sorted(deg1[1:]) != sorted(deg2[1:]):
        return
    basis2 = set(m2.bases)
    is_b1 = set(m1.bases)
    candidates = {
        e: [y for y in range(1, n + 1) if deg2[y] == deg1[e]] for e in range(1, n + 1)
    }
    # r-subsets of 1..e that contain e, listed per depth
    subsets_at = {
        e: [c for c in itertools.combinations(range(1, e + 1), r) if c[-1] == e]
        for e in range(1, n + 1)
    }
    assign = [0] * (n + 1)
    used = [False] * (n + 1)
    nodes = 0
    results = []

    def consistent(e: int) -> bool:
        for sub in subsets_at[e]:
            img = 0
            for x in sub:
                img |= 1 << (assign[x] - 1)
            m = 0
            for x in sub:
                m |= 1 << (x - 1)
            if (m in is_b1) != (img in basis2):
                return False
        return True

    def dfs(e: int) -> bool:
        nonlocal nodes
        if e > n:
            results.append(tuple(assign[1:]))
            return not find_all
        for y in candidates[e]:
            if used[y]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"isomorphism search exceeded {node_budget} nodes"
                )
            assign[e] = y
            used[y] = True
            if consistent(e) and dfs(e + 1):
                return True
            used[y] = False
            assign[e] = 0
        return False

    dfs(1)
    return results


def is_isomorphic(
    m1: Matroid,
    m2: Matroid,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_ground: int = DEFAULT_MAX_GROUND,
) -> Optional[Permutation]:
    """A witnessing permutation (bases map to bases), or None."""
    found = _search_isomorphisms(m1, m2, False, node_budget, max_ground)
    if found:
        return Permutation(found[0])
    return None


def automorphism_group(
    m: Matroid,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_ground: int = DEFAULT_MAX_GROUND,
) -> PermutationGroup:
    """Full automorphism group, returned through a small generating set."""
    all_images = _search_isomorphisms(m, m, True, node_budget, max_ground)
    perms = sorted(all_images)
    target = len(perms)
    generators: list[tuple] = []
    have = _closure(m.n, generators)
    for img in perms:
        if img not in have:
            generators.append(img)
            have = _closure(m.n, generators)
            if len(have) == target:
                break
    group = PermutationGroup(m.n, [Permutation(g) for g in generators])
    assert group.order == target
    return group
