"""Complement connectivity, cut validation, neighborhood bounds, and
brute-force extra connectivity.

Vertex sets live in single integers (bit v set = vertex v present), so a
BFS level is n shift-and-mask operations regardless of how many vertices
move.  That keeps exhaustive sweeps over Q_11 complements and over all
C(16, s) removal sets of Q_4 cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .core import Cube, adjacent
from .cuts import CubeStar, CutElement, CutFamily, StructureKind, STRUCTURE
from .embeddings import CubeCycle, CubePath, random_embedded_cycle, random_embedded_path


@lru_cache(maxsize=None)
def coordinate_shift_masks(n: int) -> tuple[tuple[int, int, int], ...]:
    """Per coordinate i: (2^i, mask of labels with bit i clear, with bit i set)."""
    size = 1 << n
    out = []
    for i in range(n):
        b = 1 << i
        lo = 0
        block = (1 << b) - 1
        for base in range(0, size, 2 * b):
            lo |= block << base
        out.append((b, lo, lo << b))
    return tuple(out)


def neighborhood_vertex_mask(n: int, vertex_mask: int) -> int:
    """Bitmask of all vertices adjacent to the given vertex set (set itself excluded)."""
    result = 0
    for b, lo, hi in coordinate_shift_masks(n):
        result |= ((vertex_mask & lo) << b) | ((vertex_mask & hi) >> b)
    return result & ~vertex_mask


def component_masks(n: int, removed_mask: int) -> list[int]:
    """Connected components of Q_n minus the removed vertices, as bitmasks."""
    size = 1 << n
    full = (1 << size) - 1
    remaining = full & ~removed_mask
    shifts = coordinate_shift_masks(n)
    comps: list[int] = []
    while remaining:
        frontier = remaining & -remaining
        visited = frontier
        while frontier:
            nxt = 0
            for b, lo, hi in shifts:
                nxt |= ((frontier & lo) << b) | ((frontier & hi) >> b)
            frontier = nxt & remaining & ~visited
            visited |= frontier
        comps.append(visited)
        remaining &= ~visited
    return comps


def is_disconnecting_mask(n: int, removed_mask: int) -> bool:
    """True iff the complement is trivial (<= 1 vertex) or disconnected."""
    size = 1 << n
    full = (1 << size) - 1
    remaining = full & ~removed_mask
    if remaining & (remaining - 1) == 0:
        return True  # empty or a single vertex
    shifts = coordinate_shift_masks(n)
    frontier = remaining & -remaining
    visited = frontier
    while frontier:
        nxt = 0
        for b, lo, hi in shifts:
            nxt |= ((frontier & lo) << b) | ((frontier & hi) >> b)
        frontier = nxt & remaining & ~visited
        visited |= frontier
    return visited != remaining


@dataclass(frozen=True)
class ComplementReport:
    """What is left of Q_n after removing a vertex set."""

    n: int
    removed: frozenset[int]
    components: tuple[frozenset[int], ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def smallest_component(self) -> frozenset[int]:
        return self.components[0] if self.components else frozenset()

    @property
    def is_trivial(self) -> bool:
        """At most one vertex survives the removal."""
        return sum(len(c) for c in self.components) <= 1

    @property
    def disconnects_or_trivial(self) -> bool:
        return self.is_trivial or self.component_count >= 2


def components_after_removal(n: int, removed: Iterable[int]) -> ComplementReport:
    """BFS the complement of a removed vertex set; components sorted small first."""
    cube = Cube(n)
    removed_set = frozenset(removed)
    for v in removed_set:
        cube.check_vertex(v)
    mask = 0
    for v in removed_set:
        mask |= 1 << v
    comps = []
    for comp_mask in component_masks(n, mask):
        comp = frozenset(i for i in range(1 << n) if (comp_mask >> i) & 1)
        comps.append(comp)
    comps.sort(key=lambda c: (len(c), min(c)))
    return ComplementReport(n=n, removed=removed_set, components=tuple(comps))


VALID_CUT = "valid-cut"
NOT_A_CUT = "elements-ok-but-not-a-cut"
MALFORMED = "malformed-element"


@dataclass(frozen=True)
class CutVerdict:
    status: str
    element_index: int | None = None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == VALID_CUT


def _element_contract_violation(kind: StructureKind, mode: str, el: CutElement) -> str | None:
    """Check one element against the isomorphism contract of (kind, mode).

    Shape checking needs no subgraph-isomorphism engine: every admissible
    element is a path, a cycle of the exact length, or a star, so the
    element's own invariants plus a size check decide it.
    """
    internal = el.violation()
    if internal is not None:
        return internal
    name, size = kind.name, kind.size
    if name == "path":
        if not isinstance(el, CubePath):
            return "path families admit only path elements"
        if mode == STRUCTURE and el.vertex_count != size:
            return f"structure mode needs exactly {size} vertices, got {el.vertex_count}"
        if el.vertex_count > size:
            return f"element has {el.vertex_count} vertices, limit is {size}"
        return None
    if name == "cycle":
        if isinstance(el, CubeCycle):
            if el.length != size:
                return f"cycle element has length {el.length}, expected {size}"
            return None
        if isinstance(el, CubePath):
            if mode == STRUCTURE:
                return "structure mode admits only full cycles"
            if el.vertex_count > size:
                return f"element has {el.vertex_count} vertices, limit is {size}"
            return None
        return "cycle families admit only cycle or path elements"
    if name == "vertex":
        if not isinstance(el, CubePath) or el.vertex_count != 1:
            return "vertex families admit only single-vertex elements"
        return None
    if name == "edge":
        if not isinstance(el, CubePath):
            return "edge families admit only path elements"
        if mode == STRUCTURE and el.vertex_count != 2:
            return f"structure mode needs exactly 2 vertices, got {el.vertex_count}"
        if el.vertex_count > 2:
            return f"element has {el.vertex_count} vertices, limit is 2"
        return None
    if name == "star":
        if isinstance(el, CubeStar):
            if mode == STRUCTURE and len(el.leaves) != size:
                return f"structure mode needs exactly {size} leaves, got {len(el.leaves)}"
            if len(el.leaves) > size:
                return f"element has {len(el.leaves)} leaves, limit is {size}"
            return None
        if isinstance(el, CubePath):
            if mode == STRUCTURE:
                return "structure mode admits only full stars"
            if el.vertex_count > 2:
                return "path elements in star families are limited to 2 vertices"
            return None
        return "star families admit only star or short path elements"
    return f"unknown kind {name!r}"


def validate_cut(family: CutFamily) -> CutVerdict:
    """First malformed element wins; otherwise decide cut vs non-cut by BFS."""
    for idx, el in enumerate(family.elements):
        if getattr(el, "n", None) != family.n:
            return CutVerdict(MALFORMED, idx, f"element dimension {el.n} != family dimension {family.n}")
        reason = _element_contract_violation(family.kind, family.mode, el)
        if reason is not None:
            return CutVerdict(MALFORMED, idx, reason)
    report = components_after_removal(family.n, family.vertex_union())
    if report.disconnects_or_trivial:
        return CutVerdict(VALID_CUT)
    return CutVerdict(NOT_A_CUT)


def path_neighbor_bound(k: int) -> int:
    """Cap on |N({u,v}) & V(P_k)| for an adjacent pair outside the path: 2*floor(k/3) + k mod 3.

    Always at most k - 1.
    """
    if k < 3:
        raise ValueError(f"bound is defined for k >= 3, got {k}")
    return 2 * (k // 3) + k % 3


def check_pair_neighbor_counts(
    n: int, pair: tuple[int, int], obstacle: CubePath | CubeCycle
) -> int:
    """|N({u,v}) & V(obstacle)| for an adjacent pair u, v disjoint from the obstacle."""
    u, v = pair
    cube = Cube(n)
    cube.check_vertex(u)
    cube.check_vertex(v)
    if not adjacent(u, v):
        raise ValueError(f"{u} and {v} are not adjacent")
    obstacle_set = set(obstacle.verts)
    if u in obstacle_set or v in obstacle_set:
        raise ValueError("pair intersects the obstacle")
    around = (set(cube.neighbors(u)) | set(cube.neighbors(v))) - {u, v}
    return len(around & obstacle_set)


def g_extra_connectivity(n: int, g: int, max_dimension: int = 4) -> int:
    """Brute-force minimum removal that disconnects Q_n into components of size >= g + 1.

    Plain cardinality-ordered subset enumeration with early exit; only sane
    up to the exhaustive ceiling (C(16, 6) candidates at n = 4 are trivial,
    n = 5 would not be).
    """
    if n > max_dimension:
        raise ValueError(f"dimension {n} above exhaustive ceiling {max_dimension}")
    if not 0 <= g <= n:
        raise ValueError(f"g must be in [0, {n}], got {g}")
    size = 1 << n
    for s in range(1, size):
        for subset in combinations(range(size), s):
            mask = 0
            for v in subset:
                mask |= 1 << v
            comps = component_masks(n, mask)
            if len(comps) >= 2 and min(c.bit_count() for c in comps) >= g + 1:
                return s
    raise ValueError(f"no removal of Q_{n} satisfies the g = {g} condition")


# --- randomized property suites (seeded; also driven by the CLI) ---


def scan_distance2_common_neighbors(n: int) -> int:
    """Count distance-2 pairs without exactly 2 common neighbors (expected 0), exhaustively."""
    cube = Cube(n)
    violations = 0
    for v in cube.vertices():
        for i in range(n):
            for j in range(i + 1, n):
                u = v ^ (1 << i) ^ (1 << j)
                if v < u and len(cube.common_neighbors(v, u)) != 2:
                    violations += 1
    return violations


def _random_outside_pair(n: int, blocked: frozenset[int], rng: random.Random) -> tuple[int, int]:
    size = 1 << n
    while True:
        u = rng.randrange(size)
        if u in blocked:
            continue
        v = u ^ (1 << rng.randrange(n))
        if v not in blocked:
            return u, v


def run_path_bound_trials(
    n: int, ks: Iterable[int], trials: int, rng: random.Random
) -> list[tuple[int, tuple[int, ...], tuple[int, int], int]]:
    """Random (embedded path, outside adjacent pair) samples vs the 2q+r cap.

    Returns the violating samples (expected none) as
    (k, path vertices, pair, observed count).
    """
    ks = list(ks)
    violations = []
    per_k = max(1, trials // len(ks))
    for k in ks:
        bound = path_neighbor_bound(k)
        for _ in range(per_k):
            path = random_embedded_path(n, k, rng)
            pair = _random_outside_pair(n, path.vertex_set(), rng)
            count = check_pair_neighbor_counts(n, pair, path)
            if count > bound:
                violations.append((k, path.verts, pair, count))
    return violations


def run_cycle_bound_trials(
    n: int, ks: Iterable[int], trials: int, rng: random.Random
) -> list[tuple[int, tuple[int, ...], tuple[int, int], int]]:
    """Random (embedded k-cycle, outside adjacent pair) samples vs the k - 1 cap."""
    ks = list(ks)
    violations = []
    per_k = max(1, trials // len(ks))
    for k in ks:
        for _ in range(per_k):
            cycle = random_embedded_cycle(n, k, rng)
            pair = _random_outside_pair(n, cycle.vertex_set(), rng)
            count = check_pair_neighbor_counts(n, pair, cycle)
            if count > k - 1:
                violations.append((k, cycle.verts, pair, count))
    return violations
