"""Brute-force ground truth for structure/substructure connectivity.

The oracle enumerates every embedded copy of the structure (or of its
connected subgraphs), then searches families by increasing size until one
disconnects or trivializes the cube.  The first element of a family is
restricted to one representative per automorphism orbit, which is sound:
any cut can be carried by an automorphism onto one whose minimum-orbit
element is that orbit's representative, and orbit indices are preserved,
so the remaining elements only need to range over orbits at least as
large.  Before each exhaustive pass, a cheap seeded pass hunts for cuts
that isolate a fixed vertex or edge, since every known minimum cut here
does exactly that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .analysis import is_disconnecting_mask, neighborhood_vertex_mask
from .core import adjacent, automorphism_vertex_tables
from .cuts import CubeStar, CutElement, CutFamily, StructureKind, STRUCTURE, SUBSTRUCTURE
from .embeddings import CubeCycle, CubePath, canonical_cycle_orientation


class BudgetError(RuntimeError):
    """The requested search cannot be answered soundly within the budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits keeping the exhaustive search at desk scale.

    element_cap truncates copy enumeration; a truncated pool supports no
    minimality claim, so the search refuses to run on one.
    """

    max_family_size: int = 4
    max_dimension: int = 4
    element_cap: int | None = None

    def __post_init__(self) -> None:
        if self.max_family_size < 1:
            raise ValueError("max_family_size must be >= 1")
        if self.element_cap is not None and self.element_cap < 1:
            raise ValueError("element_cap must be positive")


EXACT = "exact"
LOWER_BOUND = "lower-bound"

_COMBINATION_CEILING = 20_000_000


@dataclass(frozen=True)
class OracleResult:
    """Outcome of a minimum-cut search.

    status "exact": value is the minimum and witness attains it.
    status "lower-bound": every family of size < value was exhausted
    without finding a cut; the minimum (if any) is at least value.
    exhaustive is True exactly when the minimum was pinned down.
    """

    value: int
    status: str
    witness: CutFamily | None
    exhaustive: bool
    stats: Mapping[str, int] = field(default_factory=dict)


def _shape_key(el: CutElement) -> tuple[int, tuple[int, ...]]:
    if isinstance(el, CubePath):
        return (0, el.verts)
    if isinstance(el, CubeCycle):
        return (1, el.verts)
    return (2, el.verts)


def _canon_key(el: CutElement) -> tuple[int, tuple[int, ...]]:
    return _shape_key(el)


def _canon_image(el: CutElement, table: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    if isinstance(el, CubePath):
        mapped = tuple(table[v] for v in el.verts)
        if len(mapped) > 1 and mapped[0] > mapped[-1]:
            mapped = mapped[::-1]
        return (0, mapped)
    if isinstance(el, CubeCycle):
        return (1, canonical_cycle_orientation(tuple(table[v] for v in el.verts)))
    center = table[el.center]
    leaves = tuple(sorted(table[v] for v in el.leaves))
    return (2, (center,) + leaves)


def _enumerate_paths(n: int, k: int) -> list[CubePath]:
    """All paths on k vertices, one canonical direction each (smaller endpoint first)."""
    size = 1 << n
    if k > size:
        return []
    if k == 1:
        return [CubePath(n, (v,)) for v in range(size)]
    out: list[CubePath] = []

    def dfs(seq: list[int], used: int) -> None:
        if len(seq) == k:
            if seq[0] < seq[-1]:
                out.append(CubePath(n, tuple(seq)))
            return
        v = seq[-1]
        for i in range(n):
            w = v ^ (1 << i)
            if not used >> w & 1:
                seq.append(w)
                dfs(seq, used | (1 << w))
                seq.pop()

    for v0 in range(size):
        dfs([v0], 1 << v0)
    out.sort(key=lambda p: p.verts)
    return out


def _enumerate_cycles(n: int, k: int) -> list[CubeCycle]:
    """All cycles of length k, canonical rotation/reflection each.

    The start is forced to be the cycle minimum and the second vertex
    smaller than the last, so every cycle appears exactly once.
    """
    size = 1 << n
    if k > size:
        return []
    out: list[CubeCycle] = []

    def dfs(seq: list[int], used: int) -> None:
        if len(seq) == k:
            if adjacent(seq[-1], seq[0]) and seq[1] < seq[-1]:
                out.append(CubeCycle(n, tuple(seq)))
            return
        v = seq[-1]
        for i in range(n):
            w = v ^ (1 << i)
            if w > seq[0] and not used >> w & 1:
                seq.append(w)
                dfs(seq, used | (1 << w))
                seq.pop()

    for v0 in range(size):
        dfs([v0], 1 << v0)
    out.sort(key=lambda c: c.verts)
    return out


def _enumerate_stars(n: int, r: int) -> list[CubeStar]:
    out = []
    for center in range(1 << n):
        nbrs = sorted(center ^ (1 << i) for i in range(n))
        for leaves in combinations(nbrs, r):
            out.append(CubeStar(n, center, tuple(leaves)))
    return out


def _pool(n: int, kind: StructureKind, mode: str) -> list[CutElement]:
    name, size = kind.name, kind.size
    elements: list[CutElement] = []
    if name == "path":
        sizes = range(1, size + 1) if mode == SUBSTRUCTURE else (size,)
        for j in sizes:
            elements.extend(_enumerate_paths(n, j))
    elif name == "cycle":
        if mode == SUBSTRUCTURE:
            for j in range(1, size + 1):
                elements.extend(_enumerate_paths(n, j))
        elements.extend(_enumerate_cycles(n, size))
    elif name == "vertex":
        elements.extend(_enumerate_paths(n, 1))
    elif name == "edge":
        if mode == SUBSTRUCTURE:
            elements.extend(_enumerate_paths(n, 1))
        elements.extend(_enumerate_paths(n, 2))
    elif name == "star":
        if mode == SUBSTRUCTURE:
            elements.extend(_enumerate_paths(n, 1))
            elements.extend(_enumerate_paths(n, 2))
            for j in range(2, size):
                elements.extend(_enumerate_stars(n, j))
        elements.extend(_enumerate_stars(n, size))
    else:
        raise ValueError(f"unknown kind {name!r}")
    elements.sort(key=_shape_key)
    return elements


def enumerate_copies(
    n: int, kind: StructureKind, mode: str = STRUCTURE, element_cap: int | None = None
) -> list[CutElement]:
    """Every embedded element admissible for (kind, mode), deduplicated canonically."""
    if mode not in (STRUCTURE, SUBSTRUCTURE):
        raise ValueError(f"mode must be structure or substructure, got {mode!r}")
    elements = _pool(n, kind, mode)
    if element_cap is not None and len(elements) > element_cap:
        return elements[:element_cap]
    return elements


def _orbit_partition(pool: list[CutElement], n: int) -> tuple[list[int], list[int]]:
    """Assign each pool element its automorphism orbit index; return (orbit_of, reps).

    Orbits are discovered in pool order and expanded by applying the whole
    group to each fresh representative, so the cost scales with the number
    of orbits, not the pool size.
    """
    tables = automorphism_vertex_tables(n)
    index = {_canon_key(el): i for i, el in enumerate(pool)}
    orbit_of = [-1] * len(pool)
    reps: list[int] = []
    next_orbit = 0
    for idx, el in enumerate(pool):
        if orbit_of[idx] >= 0:
            continue
        reps.append(idx)
        for table in tables:
            j = index.get(_canon_image(el, table))
            if j is None:
                raise AssertionError("automorphic image missing from enumeration pool")
            if orbit_of[j] < 0:
                orbit_of[j] = next_orbit
        next_orbit += 1
    return orbit_of, reps


def _check_budget(n: int, kind: StructureKind, budget: SearchBudget, need_size: int) -> None:
    if n <= 4:
        if n > budget.max_dimension:
            raise BudgetError(f"dimension {n} above budget ceiling {budget.max_dimension}")
        return
    if n == 5:
        if budget.max_dimension < 5:
            raise BudgetError(
                f"dimension 5 above budget ceiling {budget.max_dimension};"
                " pass SearchBudget(max_family_size=3, max_dimension=5) to opt in"
            )
        allowed = (kind.name == "cycle" and kind.size in (4, 8)) or (
            kind.name == "path" and kind.size <= 4
        )
        if not allowed:
            raise BudgetError(
                "dimension 5 searches are limited to cycle(4), cycle(8) and path(k <= 4)"
            )
        if need_size > 3:
            raise BudgetError("dimension 5 searches are limited to family sizes up to 3")
        return
    raise BudgetError(f"dimension {n} is beyond exhaustive oracle scale")


def _cut_test(n: int, mask: int, memo: dict[int, bool], stats: dict[str, int]) -> bool:
    cached = memo.get(mask)
    if cached is not None:
        stats["memo_hits"] += 1
        return cached
    result = is_disconnecting_mask(n, mask)
    stats["cut_tests"] += 1
    memo[mask] = result
    return result


def _seed_targets(n: int) -> list[tuple[int, int]]:
    """(target neighborhood mask, forbidden vertex mask) around vertex 0 and edge {0, e_0}."""
    vertex_target = 0
    for i in range(n):
        vertex_target |= 1 << (1 << i)
    edge_mask = (1 << 0) | (1 << 1)
    edge_target = neighborhood_vertex_mask(n, edge_mask)
    return [(vertex_target, 1 << 0), (edge_target, edge_mask)]


def _seed_level(
    n: int, masks: list[int], s: int, memo: dict[int, bool], stats: dict[str, int]
) -> tuple[int, ...] | None:
    """Hunt for a size-s cut covering a fixed vertex/edge neighborhood.

    Finding-only: a miss here proves nothing, the exhaustive pass follows.
    """
    for target, forbidden in _seed_targets(n):
        scored = [
            (i, (masks[i] & target).bit_count())
            for i in range(len(masks))
            if masks[i] & target and not masks[i] & forbidden
        ]
        scored.sort(key=lambda t: (-t[1], t[0]))
        scored = scored[:400]
        idxs = [i for i, _ in scored]
        coverages = [c for _, c in scored]
        covers = [masks[i] & target for i in idxs]
        chosen: list[int] = []

        def backtrack(pos: int, covered: int, union: int) -> tuple[int, ...] | None:
            if len(chosen) == s:
                if covered & target == target and _cut_test(n, union, memo, stats):
                    return tuple(sorted(chosen))
                return None
            missing = (target & ~covered).bit_count()
            slots = s - len(chosen)
            for p in range(pos, len(idxs)):
                if coverages[p] * slots < missing:
                    break  # sorted by coverage, nothing later can help
                chosen.append(idxs[p])
                hit = backtrack(p + 1, covered | covers[p], union | masks[p])
                chosen.pop()
                if hit:
                    return hit
            return None

        hit = backtrack(0, 0, 0)
        if hit:
            return hit
    return None


def _level_search(
    n: int,
    pool_size: int,
    masks: list[int],
    orbit_of: list[int],
    reps: list[int],
    s: int,
    stats: dict[str, int],
) -> tuple[int, ...] | None:
    """Search all families of size s; None only after an exhaustive sweep."""
    memo: dict[int, bool] = {}
    hit = _seed_level(n, masks, s, memo, stats)
    if hit:
        return hit
    if s == 1:
        for r in reps:
            if _cut_test(n, masks[r], memo, stats):
                return (r,)
        return None
    orbit_counts: dict[int, int] = {}
    for o in orbit_of:
        orbit_counts[o] = orbit_counts.get(o, 0) + 1
    below = 0
    total = 0
    for orbit, _count in sorted(orbit_counts.items()):
        cands_count = pool_size - below - 1
        total += math.comb(cands_count, s - 1)
        below += orbit_counts[orbit]
    if total > _COMBINATION_CEILING:
        raise BudgetError(
            f"size-{s} sweep needs about {total} family tests, over the {_COMBINATION_CEILING} ceiling"
        )
    for r in reps:
        o = orbit_of[r]
        cands = [j for j in range(pool_size) if j != r and orbit_of[j] >= o]
        base = masks[r]
        for comb in combinations(cands, s - 1):
            union = base
            for j in comb:
                union |= masks[j]
            if _cut_test(n, union, memo, stats):
                return tuple(sorted((r,) + comb))
    return None


def _prepare(
    n: int, kind: StructureKind, mode: str, budget: SearchBudget
) -> tuple[list[CutElement], list[int], list[int], list[int], dict[str, int]]:
    pool = _pool(n, kind, mode)
    if budget.element_cap is not None and len(pool) > budget.element_cap:
        raise BudgetError(
            f"enumeration produced {len(pool)} copies, over the element cap {budget.element_cap};"
            " a truncated pool supports no minimality claim"
        )
    if not pool:
        raise ValueError(f"no embedded copies of {kind.label()} exist in Q_{n}")
    masks = []
    for el in pool:
        m = 0
        for v in el.verts:
            m |= 1 << v
        masks.append(m)
    orbit_of, reps = _orbit_partition(pool, n)
    stats = {
        "copies": len(pool),
        "orbits": len(reps),
        "cut_tests": 0,
        "memo_hits": 0,
    }
    return pool, masks, orbit_of, reps, stats


def min_structure_cut(
    n: int,
    kind: StructureKind,
    mode: str = STRUCTURE,
    budget: SearchBudget | None = None,
) -> OracleResult:
    """Minimum family size whose removal disconnects or trivializes Q_n.

    Iterative deepening over the family size; exact results carry a
    witness, and running past the size budget yields a lower bound, never
    a wrong exact value.
    """
    budget = budget or SearchBudget()
    _check_budget(n, kind, budget, budget.max_family_size)
    pool, masks, orbit_of, reps, stats = _prepare(n, kind, mode, budget)
    for s in range(1, budget.max_family_size + 1):
        hit = _level_search(n, len(pool), masks, orbit_of, reps, s, stats)
        if hit is not None:
            witness = CutFamily(n, kind, mode, tuple(pool[i] for i in hit))
            return OracleResult(s, EXACT, witness, exhaustive=True, stats=stats)
    return OracleResult(
        budget.max_family_size + 1, LOWER_BOUND, None, exhaustive=False, stats=stats
    )


def verify_no_smaller_cut(
    n: int,
    kind: StructureKind,
    mode: str,
    s: int,
    budget: SearchBudget | None = None,
) -> bool:
    """True iff no family of size < s disconnects or trivializes Q_n (exhaustive)."""
    budget = budget or SearchBudget()
    _check_budget(n, kind, budget, s - 1)
    if s <= 1:
        return True
    pool, masks, orbit_of, reps, stats = _prepare(n, kind, mode, budget)
    for t in range(1, s):
        if _level_search(n, len(pool), masks, orbit_of, reps, t, stats) is not None:
            return False
    return True
