import random

import pytest
from hypothesis import given, strategies as st

from hypercut.core import (
    Automorphism,
    Cube,
    adjacent,
    automorphism_vertex_tables,
    edge_mapping_automorphism,
    hamming_distance,
    vertex_from_string,
    vertex_to_string,
)
from hypercut.embeddings import gray_hamiltonian


def test_neighbor_flips_single_bit():
    cube = Cube(3)
    assert cube.neighbor(0, 0) == 1
    assert cube.to_string(cube.neighbor(0, 0)) == "100"
    # "110" has x^0 = x^1 = 1, so the label is 3; flipping bit 2 gives "111"
    assert cube.neighbor(3, 2) == 7
    assert cube.to_string(7) == "111"


def test_neighbor_index_out_of_range():
    cube = Cube(3)
    with pytest.raises(ValueError):
        cube.neighbor(0, 3)
    with pytest.raises(ValueError):
        cube.neighbor(0, -1)
    with pytest.raises(ValueError):
        cube.neighbor(8, 0)


@given(st.integers(1, 12), st.data())
def test_neighbor_is_involutive(n, data):
    cube = Cube(n)
    v = data.draw(st.integers(0, (1 << n) - 1))
    i = data.draw(st.integers(0, n - 1))
    assert cube.neighbor(cube.neighbor(v, i), i) == v


def test_hamming_distance_examples():
    assert hamming_distance(0, 0) == 0
    assert hamming_distance(0, 3) == 2  # 000 vs 110
    assert hamming_distance(0b1010, 0b0101) == 4


def test_adjacency_iff_distance_one_exhaustive_q3():
    cube = Cube(3)
    for u in cube.vertices():
        for v in cube.vertices():
            assert adjacent(u, v) == (hamming_distance(u, v) == 1)
            assert (v in cube.neighbors(u)) == adjacent(u, v)


def test_degree_and_edge_count():
    for n in range(1, 7):
        cube = Cube(n)
        assert all(len(cube.neighbors(v)) == n for v in cube.vertices())
        assert sum(1 for _ in cube.edges()) == cube.edge_count == n * (1 << (n - 1))


def test_common_neighbors_distance_two():
    # u = 00..0 and v = 11 0..0 share exactly 10..0 and 01..0
    for n in range(2, 7):
        cube = Cube(n)
        assert cube.common_neighbors(0, 3) == {1, 2}


def test_common_neighbors_self_and_odd_distance():
    cube = Cube(4)
    assert cube.common_neighbors(5, 5) == set(cube.neighbors(5))
    assert cube.common_neighbors(0, 0b1111) == set()
    assert cube.common_neighbors(0, 1) == set()


def test_common_neighbors_exhaustive_small():
    for n in range(2, 7):
        cube = Cube(n)
        for v in cube.vertices():
            for u in cube.vertices():
                if hamming_distance(u, v) == 2:
                    assert len(cube.common_neighbors(u, v)) == 2


def test_split_q3():
    cube = Cube(3)
    zero, one = cube.split(2)
    assert zero == (0, 1, 2, 3)
    assert one == (4, 5, 6, 7)


def test_split_sides_are_subcubes():
    for n in range(2, 7):
        cube = Cube(n)
        for i in range(n):
            for side in cube.split(i):
                assert len(side) == 1 << (n - 1)
                members = set(side)
                for v in side:
                    inside = sum(1 for w in cube.neighbors(v) if w in members)
                    assert inside == n - 1


def test_split_errors():
    with pytest.raises(ValueError):
        Cube(1).split(0)
    with pytest.raises(ValueError):
        Cube(3).split(3)


def test_identity_automorphism():
    ident = Automorphism.identity(4)
    assert all(ident.apply(v) == v for v in range(16))


def test_pure_mask_automorphism():
    sigma = Automorphism(3, (0, 1, 2), 0b111)
    assert sigma.apply(0) == 7


def test_automorphism_preserves_adjacency_random():
    rng = random.Random(7)
    n = 6
    for _ in range(200):
        perm = list(range(n))
        rng.shuffle(perm)
        sigma = Automorphism(n, tuple(perm), rng.randrange(1 << n))
        for _ in range(50):
            v = rng.randrange(1 << n)
            i = rng.randrange(n)
            assert adjacent(sigma.apply(v), sigma.apply(v ^ (1 << i)))


def test_sampled_automorphisms_map_every_edge_to_an_edge():
    rng = random.Random(13)
    for n in range(2, 7):
        cube = Cube(n)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            sigma = Automorphism(n, tuple(perm), rng.randrange(1 << n))
            table = sigma.vertex_table()
            assert sorted(table) == list(range(1 << n))  # bijective
            for u, v in cube.edges():
                assert adjacent(table[u], table[v])


def test_automorphism_group_size_n3():
    tables = automorphism_vertex_tables(3)
    assert len(tables) == 48  # 3! * 2^3
    assert len(set(tables)) == 48


def test_automorphism_rejects_bad_perm():
    with pytest.raises(ValueError):
        Automorphism(3, (0, 0, 1), 0)
    with pytest.raises(ValueError):
        Automorphism(3, (0, 1, 2), 8)


def test_edge_mapping_same_edge_is_identity_on_endpoints():
    sigma = edge_mapping_automorphism(4, (3, 7), (3, 7))
    assert sigma.apply(3) == 3
    assert sigma.apply(7) == 7


def test_edge_mapping_q3_example():
    # (000, 100) -> (111, 110): endpoints map and adjacency survives
    sigma = edge_mapping_automorphism(3, (0, 1), (7, 6))
    assert sigma.apply(0) == 7
    assert sigma.apply(1) == 6
    for v in range(8):
        for i in range(3):
            assert adjacent(sigma.apply(v), sigma.apply(v ^ (1 << i)))


def test_edge_mapping_composed_with_gray_cycle():
    # mapping the Gray cycle by an edge automorphism lands the target edge on the image cycle
    rng = random.Random(11)
    n = 5
    base = gray_hamiltonian(n)
    for _ in range(25):
        a = rng.randrange(1 << n)
        b = a ^ (1 << rng.randrange(n))
        sigma = edge_mapping_automorphism(n, (0, 1), (a, b))
        image = [sigma.apply(v) for v in base.verts]
        pos = image.index(a)
        k = len(image)
        assert b in (image[(pos + 1) % k], image[(pos - 1) % k])


def test_edge_mapping_rejects_non_edges():
    with pytest.raises(ValueError):
        edge_mapping_automorphism(3, (0, 3), (0, 1))
    with pytest.raises(ValueError):
        edge_mapping_automorphism(3, (0, 1), (2, 7))


def test_vertex_string_roundtrip():
    assert vertex_to_string(1, 3) == "100"
    assert vertex_from_string("100") == 1
    for n in range(1, 9):
        for v in range(1 << n):
            assert vertex_from_string(vertex_to_string(v, n)) == v


def test_vertex_string_rejects_garbage():
    with pytest.raises(ValueError):
        vertex_from_string("10x")
    with pytest.raises(ValueError):
        vertex_from_string("")
    with pytest.raises(ValueError):
        Cube(3).from_string("10")


def test_cube_rejects_bad_dimension():
    with pytest.raises(ValueError):
        Cube(0)
