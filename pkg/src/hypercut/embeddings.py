"""Constructive embeddings the cut builders depend on.

Everything here is deterministic: Hamiltonian cycles come from the
reflected Gray code, a cycle through a prescribed edge is the Gray cycle
pushed through an edge-mapping automorphism, even cycles of any admissible
length fold the first l/2 Gray codewords of Q_{n-1} across the last
coordinate, and odd paths between adjacent vertices are such a cycle minus
one edge.  Returned cycles are canonicalized: smallest vertex first, then
its smaller cycle neighbor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Cube, adjacent, edge_mapping_automorphism


def gray_sequence(n: int) -> list[int]:
    """All 2^n labels in reflected Gray code order; consecutive entries differ in one bit."""
    return [m ^ (m >> 1) for m in range(1 << n)]


@dataclass(frozen=True)
class CubePath:
    """A path embedded in Q_n: distinct vertices, consecutive ones adjacent."""

    n: int
    verts: tuple[int, ...]

    def violation(self) -> str | None:
        """None if the path invariants hold, else the first failure."""
        if not self.verts:
            return "path has no vertices"
        size = 1 << self.n
        for v in self.verts:
            if not 0 <= v < size:
                return f"label {v} out of range for dimension {self.n}"
        if len(set(self.verts)) != len(self.verts):
            return "vertices are not distinct"
        for a, b in zip(self.verts, self.verts[1:]):
            if not adjacent(a, b):
                return f"consecutive vertices {a} and {b} are not adjacent"
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    @property
    def vertex_count(self) -> int:
        return len(self.verts)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.verts)


@dataclass(frozen=True)
class CubeCycle:
    """A cycle embedded in Q_n; the closing edge is implicit (first vertex not repeated).

    Q_n is bipartite, so the length must be even (and at least 4).
    """

    n: int
    verts: tuple[int, ...]

    def violation(self) -> str | None:
        if len(self.verts) < 4:
            return "cycle needs at least 4 vertices"
        if len(self.verts) % 2:
            return "odd cycle cannot embed in a bipartite graph"
        size = 1 << self.n
        for v in self.verts:
            if not 0 <= v < size:
                return f"label {v} out of range for dimension {self.n}"
        if len(set(self.verts)) != len(self.verts):
            return "vertices are not distinct"
        for a, b in zip(self.verts, self.verts[1:]):
            if not adjacent(a, b):
                return f"consecutive vertices {a} and {b} are not adjacent"
        if not adjacent(self.verts[-1], self.verts[0]):
            return f"closing pair {self.verts[-1]} and {self.verts[0]} is not an edge"
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    @property
    def length(self) -> int:
        return len(self.verts)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.verts)

    def has_edge(self, a: int, b: int) -> bool:
        """True iff {a, b} is one of the cycle's edges (including the closing one)."""
        k = len(self.verts)
        for idx, v in enumerate(self.verts):
            if v == a and self.verts[(idx + 1) % k] == b:
                return True
            if v == b and self.verts[(idx + 1) % k] == a:
                return True
        return False


def _require(obj: CubePath | CubeCycle) -> None:
    reason = obj.violation()
    if reason is not None:
        raise AssertionError(f"constructed object violates its invariants: {reason}")


def canonical_cycle_orientation(verts: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex comes first, its smaller neighbor second."""
    pos = verts.index(min(verts))
    fwd = verts[pos:] + verts[:pos]
    bwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, bwd)


def rotate_cycle_to_edge(cycle: CubeCycle, a: int, b: int) -> tuple[int, ...]:
    """The cycle's vertices reordered to start (a, b, ...); {a, b} must be a cycle edge."""
    verts = cycle.verts
    k = len(verts)
    if a not in verts:
        raise ValueError(f"vertex {a} not on the cycle")
    pos = verts.index(a)
    rotated = verts[pos:] + verts[:pos]
    if rotated[1] == b:
        return rotated
    if rotated[-1] == b:
        return (rotated[0],) + tuple(reversed(rotated[1:]))
    raise ValueError(f"({a}, {b}) is not an edge of the cycle")


def gray_hamiltonian(n: int) -> CubeCycle:
    """The reflected-Gray-code Hamiltonian cycle of Q_n."""
    if n < 2:
        raise ValueError(f"Hamiltonian cycles need n >= 2, got {n}")
    cycle = CubeCycle(n, tuple(gray_sequence(n)))
    _require(cycle)
    return cycle


def hamiltonian_through_edge(n: int, edge: tuple[int, int]) -> CubeCycle:
    """A Hamiltonian cycle of Q_n containing the given edge.

    The Gray cycle contains the edge (0, 1); an edge-mapping automorphism
    carries it onto the target, so no search is ever needed.
    """
    sigma = edge_mapping_automorphism(n, (0, 1), edge)
    base = gray_hamiltonian(n)
    mapped = tuple(sigma.apply(v) for v in base.verts)
    cycle = CubeCycle(n, canonical_cycle_orientation(mapped))
    _require(cycle)
    return cycle


def embed_even_cycle(n: int, l: int) -> CubeCycle:
    """A cycle of length l in Q_n, for any even l with 4 <= l <= 2^n.

    Take the first l/2 codewords g_0..g_{l/2-1} of the Gray order of
    Q_{n-1} and fold them across coordinate n-1:

        g_0.0, g_1.0, ..., g_{l/2-1}.0, g_{l/2-1}.1, ..., g_1.1, g_0.1

    Consecutive codewords are adjacent and the two columns are matched, so
    this is always a cycle; at l = 2^n it is the full Gray cycle of Q_n.
    """
    if l % 2:
        raise ValueError(f"cycle length must be even, got {l}")
    if l < 4:
        raise ValueError(f"cycle length must be at least 4, got {l}")
    if l > 1 << n:
        raise ValueError(f"cycle length {l} exceeds 2^{n} vertices")
    half = gray_sequence(n - 1)[: l // 2]
    top = 1 << (n - 1)
    verts = tuple(half) + tuple(g | top for g in reversed(half))
    cycle = CubeCycle(n, canonical_cycle_orientation(verts))
    _require(cycle)
    return cycle


def odd_path_between_adjacent(n: int, u: int, v: int, q: int) -> CubePath:
    """A path of odd length q from u to v, for adjacent u, v and 1 <= q <= 2^n - 1.

    q = 1 is the bare edge; otherwise embed a cycle of length q + 1 through
    the edge uv and drop that edge.
    """
    Cube(n).check_vertex(u)
    Cube(n).check_vertex(v)
    if not adjacent(u, v):
        raise ValueError(f"{u} and {v} are not adjacent")
    if q % 2 == 0:
        raise ValueError(f"path length must be odd, got {q}")
    if not 1 <= q <= (1 << n) - 1:
        raise ValueError(f"path length {q} out of range [1, 2^{n} - 1]")
    if q == 1:
        return CubePath(n, (u, v))
    base = embed_even_cycle(n, q + 1)
    sigma = edge_mapping_automorphism(n, (base.verts[0], base.verts[1]), (u, v))
    mapped = CubeCycle(n, tuple(sigma.apply(w) for w in base.verts))
    rotated = rotate_cycle_to_edge(mapped, u, v)
    # walk the cycle the long way round: u, then back from the far end to v
    path = CubePath(n, (u,) + tuple(reversed(rotated[1:])))
    _require(path)
    return path


def restrict_to_subcube(
    fixed_coords: dict[int, int], inner: CubePath | CubeCycle
) -> CubePath | CubeCycle:
    """Relabel a path/cycle from the cube on the free coordinates into Q_n.

    fixed_coords pins ambient coordinates to constant bits; inner's
    coordinate j maps to the j-th free ambient coordinate in increasing
    order.  The relabeling is injective and adjacency-preserving, so the
    result is the same kind of object one dimension class up.
    """
    ambient_n = inner.n + len(fixed_coords)
    for coord, bit in fixed_coords.items():
        if not 0 <= coord < ambient_n:
            raise ValueError(f"fixed coordinate {coord} collides with the ambient range 0..{ambient_n - 1}")
        if bit not in (0, 1):
            raise ValueError(f"fixed coordinate {coord} must be 0 or 1, got {bit}")
    free = [c for c in range(ambient_n) if c not in fixed_coords]
    base = sum(bit << coord for coord, bit in fixed_coords.items())

    def lift(v: int) -> int:
        w = base
        for j, coord in enumerate(free):
            if (v >> j) & 1:
                w |= 1 << coord
        return w

    verts = tuple(lift(v) for v in inner.verts)
    lifted: CubePath | CubeCycle
    if isinstance(inner, CubeCycle):
        lifted = CubeCycle(ambient_n, verts)
    else:
        lifted = CubePath(ambient_n, verts)
    _require(lifted)
    return lifted


def random_embedded_path(n: int, k: int, rng: random.Random, max_attempts: int = 10_000) -> CubePath:
    """A uniformly-started self-avoiding walk on k vertices, retrying dead ends."""
    if k < 1 or k > 1 << n:
        raise ValueError(f"path on {k} vertices does not fit in Q_{n}")
    size = 1 << n
    for _ in range(max_attempts):
        v = rng.randrange(size)
        verts = [v]
        used = 1 << v
        while len(verts) < k:
            options = [verts[-1] ^ (1 << i) for i in range(n)]
            options = [w for w in options if not used & (1 << w)]
            if not options:
                break
            w = rng.choice(options)
            verts.append(w)
            used |= 1 << w
        if len(verts) == k:
            return CubePath(n, tuple(verts))
    raise RuntimeError(f"no path on {k} vertices found in {max_attempts} attempts")


def random_embedded_cycle(n: int, k: int, rng: random.Random, max_attempts: int = 100_000) -> CubeCycle:
    """A random cycle of length k, sampled by closing self-avoiding walks."""
    if k % 2 or k < 4 or k > 1 << n:
        raise ValueError(f"no cycle of length {k} in Q_{n}")
    for _ in range(max_attempts):
        try:
            walk = random_embedded_path(n, k, rng, max_attempts=1)
        except RuntimeError:
            continue
        if adjacent(walk.verts[-1], walk.verts[0]):
            return CubeCycle(n, walk.verts)
    raise RuntimeError(f"no cycle of length {k} found in {max_attempts} attempts")
