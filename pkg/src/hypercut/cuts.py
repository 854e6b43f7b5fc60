"""Explicit structure-cut families around the all-zeros vertex.

Both builders cover every neighbor e_j = (v)^j of v = 00..0 with paths or
cycles that thread weight-2 bridge vertices e_j | e_{j+1} between
consecutive neighbors, so v is isolated once the family is removed.  Long
elements (more vertices than 2n - 1) extend into the subcube x^{n-1} = 1
along a Hamiltonian cycle, or close through an odd path inside the
subcube x^{n-2} = 0, x^{n-1} = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import adjacent
from .embeddings import (
    CubeCycle,
    CubePath,
    hamiltonian_through_edge,
    odd_path_between_adjacent,
    restrict_to_subcube,
    rotate_cycle_to_edge,
)


@dataclass(frozen=True)
class StructureKind:
    """Shape descriptor for the structure H of a cut family.

    name/size pairs: ("vertex", 1), ("edge", 2), ("star", r) for K_{1,r}
    with r >= 2, ("path", k) for the path on k vertices, ("cycle", k) for
    the cycle of even length k >= 4.
    """

    name: str
    size: int

    def __post_init__(self) -> None:
        rules = {
            "vertex": lambda s: s == 1,
            "edge": lambda s: s == 2,
            "star": lambda s: s >= 2,
            "path": lambda s: s >= 1,
            "cycle": lambda s: s >= 4 and s % 2 == 0,
        }
        if self.name not in rules:
            raise ValueError(f"unknown structure kind {self.name!r}")
        if not rules[self.name](self.size):
            raise ValueError(f"invalid size {self.size} for kind {self.name!r}")

    @staticmethod
    def vertex() -> "StructureKind":
        return StructureKind("vertex", 1)

    @staticmethod
    def edge() -> "StructureKind":
        return StructureKind("edge", 2)

    @staticmethod
    def star(leaves: int) -> "StructureKind":
        return StructureKind("star", leaves)

    @staticmethod
    def path(k: int) -> "StructureKind":
        return StructureKind("path", k)

    @staticmethod
    def cycle(k: int) -> "StructureKind":
        return StructureKind("cycle", k)

    def label(self) -> str:
        if self.name == "vertex":
            return "K1"
        if self.name == "edge":
            return "K1,1"
        if self.name == "star":
            return f"K1,{self.size}"
        if self.name == "path":
            return f"P{self.size}"
        return f"C{self.size}"


@dataclass(frozen=True)
class CubeStar:
    """A star K_{1,r} embedded in Q_n: a center and r >= 2 of its neighbors."""

    n: int
    center: int
    leaves: tuple[int, ...]

    def violation(self) -> str | None:
        size = 1 << self.n
        if not 0 <= self.center < size:
            return f"label {self.center} out of range for dimension {self.n}"
        if len(self.leaves) < 2:
            return "a star needs at least 2 leaves (smaller stars are paths)"
        if tuple(sorted(self.leaves)) != self.leaves:
            return "leaves must be sorted"
        if len(set(self.leaves)) != len(self.leaves):
            return "leaves are not distinct"
        for leaf in self.leaves:
            if not 0 <= leaf < size:
                return f"label {leaf} out of range for dimension {self.n}"
            if leaf == self.center:
                return "center listed as a leaf"
            if not adjacent(self.center, leaf):
                return f"leaf {leaf} is not adjacent to center {self.center}"
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    @property
    def verts(self) -> tuple[int, ...]:
        return (self.center,) + self.leaves

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.verts)


CutElement = Union[CubePath, CubeCycle, CubeStar]

STRUCTURE = "structure"
SUBSTRUCTURE = "substructure"


@dataclass(frozen=True)
class CutFamily:
    """A candidate H-structure or H-substructure cut: a set of embedded elements.

    Elements may share vertices; only each element individually must match
    the kind's contract (checked by the validator, not here).
    """

    n: int
    kind: StructureKind
    mode: str
    elements: tuple[CutElement, ...]

    def __post_init__(self) -> None:
        if self.mode not in (STRUCTURE, SUBSTRUCTURE):
            raise ValueError(f"mode must be structure or substructure, got {self.mode!r}")
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")

    def __len__(self) -> int:
        return len(self.elements)

    def vertex_union(self) -> frozenset[int]:
        out: set[int] = set()
        for el in self.elements:
            out.update(el.verts)
        return frozenset(out)


def canonical_isolating_vertex(family: CutFamily) -> int:
    """The vertex every constructed family isolates: all-zeros."""
    return 0


def _window_path(n: int, start: int, h: int, trailing: bool) -> CubePath:
    """Cover neighbors e_start .. e_{start+h-1} with bridges between them.

    With trailing=True a final bridge e_{start+h-1} | e_t is appended,
    where t = start + h, wrapping to coordinate 0 for the last window.
    """
    verts: list[int] = []
    for j in range(start, start + h):
        verts.append(1 << j)
        if j < start + h - 1:
            verts.append((1 << j) | (1 << (j + 1)))
    if trailing:
        t = start + h
        coord = 0 if t >= n else t
        verts.append((1 << (start + h - 1)) | (1 << coord))
    return CubePath(n, tuple(verts))


def _window_starts(n: int, h: int) -> list[int]:
    """Window origins i*h plus a final window at n - h (shifted when h does not divide n)."""
    count = -(-n // h)
    return [i * h for i in range(count - 1)] + [n - h]


def _alternating_spine(n: int) -> list[int]:
    """The 2n - 1 vertices e_0, e_0|e_1, e_1, ..., e_{n-2}, e_{n-2}|e_{n-1}, e_{n-1}."""
    verts: list[int] = []
    for j in range(n):
        verts.append(1 << j)
        if j < n - 1:
            verts.append((1 << j) | (1 << (j + 1)))
    return verts


def _extended_path(n: int, k: int) -> CubePath:
    """One path on k >= 2n - 1 vertices covering all neighbors of the zero vertex.

    The spine already ends with the edge (e_{n-2}|e_{n-1}, e_{n-1}), whose
    endpoints lie in the subcube x^{n-1} = 1.  A Hamiltonian cycle of that
    subcube through this edge supplies the k - (2n - 1) extension vertices,
    taken in the direction leading away from e_{n-2}|e_{n-1}.
    """
    verts = _alternating_spine(n)
    extension = k - (2 * n - 1)
    if extension:
        inner = hamiltonian_through_edge(n - 1, (1 << (n - 2), 0))
        lifted = restrict_to_subcube({n - 1: 1}, inner)
        assert isinstance(lifted, CubeCycle)
        anchor_a = (1 << (n - 2)) | (1 << (n - 1))
        anchor_b = 1 << (n - 1)
        rotated = rotate_cycle_to_edge(lifted, anchor_a, anchor_b)
        verts.extend(rotated[2 : 2 + extension])
    path = CubePath(n, tuple(verts))
    reason = path.violation()
    if reason is not None:
        raise AssertionError(f"extended path construction broke: {reason}")
    return path


def build_path_cut(n: int, k: int) -> CutFamily:
    """The explicit family of k-vertex paths isolating the zero vertex.

    Element count is ceil(2n / (k+1)) for odd k and ceil(2n / k) for even
    k.  Odd k uses windows of (k+1)/2 neighbors; even k uses windows of
    k/2 neighbors with a trailing bridge each; k past 2n - 1 collapses to
    a single extended path.
    """
    if n < 3:
        raise ValueError(f"path cuts need n >= 3, got {n}")
    if not 3 <= k <= 1 << (n - 1):
        raise ValueError(f"k must be in [3, 2^(n-1)] = [3, {1 << (n - 1)}], got {k}")
    elements: tuple[CutElement, ...]
    if (k % 2 == 1 and k >= 2 * n - 1) or (k % 2 == 0 and k >= 2 * n):
        elements = (_extended_path(n, k),)
    elif k % 2 == 1:
        h = (k + 1) // 2
        elements = tuple(_window_path(n, s, h, trailing=False) for s in _window_starts(n, h))
    else:
        h = k // 2
        elements = tuple(_window_path(n, s, h, trailing=True) for s in _window_starts(n, h))
    return CutFamily(n, StructureKind.path(k), STRUCTURE, elements)


def _window_cycle(n: int, start: int, h: int) -> CubeCycle:
    """Close a window of h >= 3 neighbors with a bridge back to the first one."""
    verts: list[int] = []
    for j in range(start, start + h):
        verts.append(1 << j)
        if j < start + h - 1:
            verts.append((1 << j) | (1 << (j + 1)))
    verts.append((1 << (start + h - 1)) | (1 << start))
    return CubeCycle(n, tuple(verts))


def _long_cycle(n: int, k: int) -> CubeCycle:
    """One cycle of length k >= 2n + 2 through all neighbors of the zero vertex.

    The spine runs e_0 .. e_{n-1}; an odd path of length k - (2n - 1) from
    e_{n-1} to e_0|e_{n-1} inside the subcube x^{n-2} = 0, x^{n-1} = 1
    closes it back to e_0.
    """
    verts = _alternating_spine(n)
    q = k - (2 * n - 1)
    inner = odd_path_between_adjacent(n - 2, 0, 1, q)
    lifted = restrict_to_subcube({n - 2: 0, n - 1: 1}, inner)
    assert lifted.verts[0] == 1 << (n - 1)
    assert lifted.verts[-1] == 1 | (1 << (n - 1))
    verts.extend(lifted.verts[1:])
    cycle = CubeCycle(n, tuple(verts))
    reason = cycle.violation()
    if reason is not None:
        raise AssertionError(f"long cycle construction broke: {reason}")
    return cycle


def build_cycle_cut(n: int, k: int) -> CutFamily:
    """The explicit family of k-cycles isolating the zero vertex.

    Element count is ceil(2n / k).  Windows of k/2 neighbors work while
    k/2 <= n; past that a single long cycle closes through the subcube
    x^{n-2} = 0, x^{n-1} = 1.  Length 4 is rejected: the closing bridge of
    a window would coincide with its inner bridge, and the 4-cycle value
    n - 2 comes from the star/C4 baseline, not from this construction.
    """
    if n < 5:
        raise ValueError(f"cycle cuts need n >= 5, got {n}")
    if k % 2:
        raise ValueError(f"cycle length must be even, got {k}")
    if k < 6:
        raise ValueError(f"cycle cuts need k >= 6, got {k}")
    if k > 1 << (n - 2):
        raise ValueError(f"k must be at most 2^(n-2) = {1 << (n - 2)}, got {k}")
    h = k // 2
    elements: tuple[CutElement, ...]
    if h <= n:
        elements = tuple(_window_cycle(n, s, h) for s in _window_starts(n, h))
    else:
        elements = (_long_cycle(n, k),)
    return CutFamily(n, StructureKind.cycle(k), STRUCTURE, elements)
