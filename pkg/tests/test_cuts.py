import pytest

from hypercut.analysis import validate_cut
from hypercut.core import Cube
from hypercut.cuts import (
    CubeStar,
    CutFamily,
    StructureKind,
    build_cycle_cut,
    build_path_cut,
    canonical_isolating_vertex,
)
from hypercut.formulas import kappa_path


def test_structure_kind_validation():
    assert StructureKind.path(1).size == 1
    assert StructureKind.cycle(6).label() == "C6"
    assert StructureKind.star(3).label() == "K1,3"
    assert StructureKind.vertex().label() == "K1"
    assert StructureKind.edge().label() == "K1,1"
    with pytest.raises(ValueError):
        StructureKind.cycle(5)
    with pytest.raises(ValueError):
        StructureKind.cycle(2)
    with pytest.raises(ValueError):
        StructureKind.star(1)
    with pytest.raises(ValueError):
        StructureKind.path(0)
    with pytest.raises(ValueError):
        StructureKind("blob", 3)


def test_cube_star_validation():
    assert CubeStar(3, 0, (1, 2)).violation() is None
    assert CubeStar(3, 0, (2, 1)).violation() is not None  # unsorted
    assert CubeStar(3, 0, (1,)).violation() is not None
    assert CubeStar(3, 0, (1, 3)).violation() is not None  # 3 not adjacent to 0
    assert CubeStar(3, 0, (0, 1)).violation() is not None


def test_path_cut_fig4_family():
    family = build_path_cut(5, 3)
    assert [el.verts for el in family.elements] == [(1, 3, 2), (4, 12, 8), (8, 24, 16)]
    assert validate_cut(family).ok


def test_path_cut_single_long_path():
    family = build_path_cut(4, 7)
    assert len(family) == 1
    assert family.elements[0].verts == (1, 3, 2, 6, 4, 12, 8)
    assert validate_cut(family).ok


def test_path_cut_even_windows():
    family = build_path_cut(3, 4)
    assert len(family) == 2
    assert [el.verts for el in family.elements] == [(1, 3, 2, 6), (2, 6, 4, 5)]
    assert validate_cut(family).ok


def test_path_cut_extended_even():
    # k = 2n extends the spine by one Hamiltonian-cycle vertex inside x^3 = 1
    family = build_path_cut(4, 8)
    (path,) = family.elements
    assert path.verts[:7] == (1, 3, 2, 6, 4, 12, 8)
    assert len(path.verts) == 8
    assert (path.verts[7] >> 3) & 1 == 1
    assert validate_cut(family).ok


def test_path_cut_cardinality_and_shape():
    for n in range(3, 9):
        nbrs = set(Cube(n).neighbors(0))
        for k in range(3, min(1 << (n - 1), 64) + 1):
            family = build_path_cut(n, k)
            assert len(family) == kappa_path(n, k).value, (n, k)
            for el in family.elements:
                assert el.violation() is None
                assert el.vertex_count == k
            union = family.vertex_union()
            assert nbrs <= union and 0 not in union, (n, k)
            assert validate_cut(family).ok, (n, k)


def test_path_cut_isolates_zero():
    for n in range(3, 9):
        nbrs = set(Cube(n).neighbors(0))
        for k in (3, 4, 2 * n - 1, 2 * n):
            if k > 1 << (n - 1):
                continue
            family = build_path_cut(n, k)
            assert canonical_isolating_vertex(family) == 0
            assert nbrs <= family.vertex_union()
            assert 0 not in family.vertex_union()


def test_path_cut_rejections():
    with pytest.raises(ValueError):
        build_path_cut(2, 3)
    with pytest.raises(ValueError):
        build_path_cut(3, 2)
    with pytest.raises(ValueError):
        build_path_cut(3, 5)  # above 2^(n-1)


def test_cycle_cut_two_window_family():
    family = build_cycle_cut(6, 6)
    assert [el.verts for el in family.elements] == [
        (1, 3, 2, 6, 4, 5),
        (8, 24, 16, 48, 32, 40),
    ]
    assert validate_cut(family).ok


def test_cycle_cut_shifted_window_family():
    family = build_cycle_cut(5, 6)
    assert [el.verts for el in family.elements] == [
        (1, 3, 2, 6, 4, 5),
        (4, 12, 8, 24, 16, 20),
    ]
    assert validate_cut(family).ok


def test_cycle_cut_long_cycle_case():
    family = build_cycle_cut(6, 16)
    assert len(family) == 1  # ceil(12/16)
    (cycle,) = family.elements
    assert len(cycle.verts) == 16
    assert cycle.violation() is None
    # the closing path stays inside the subcube x^4 = 0, x^5 = 1
    for v in cycle.verts[2 * 6 - 1 :]:
        assert (v >> 4) & 1 == 0
        assert (v >> 5) & 1 == 1
    assert validate_cut(family).ok


def test_cycle_cut_cardinality_and_shape():
    for n in range(5, 10):
        nbrs = set(Cube(n).neighbors(0))
        for k in range(6, min(1 << (n - 2), 64) + 1, 2):
            family = build_cycle_cut(n, k)
            assert len(family) == -(-2 * n // k), (n, k)
            for el in family.elements:
                assert el.violation() is None
                assert el.length == k
            union = family.vertex_union()
            assert nbrs <= union and 0 not in union, (n, k)
            assert validate_cut(family).ok, (n, k)


def test_cycle_cut_isolates_zero():
    for n in range(5, 10):
        nbrs = set(Cube(n).neighbors(0))
        for k in (6, 8, 2 * n, 2 * n + 2):
            if k > 1 << (n - 2):
                continue
            family = build_cycle_cut(n, k)
            assert canonical_isolating_vertex(family) == 0
            assert nbrs <= family.vertex_union()
            assert 0 not in family.vertex_union()


def test_cycle_cut_rejections():
    with pytest.raises(ValueError, match="n >= 5"):
        build_cycle_cut(4, 6)
    with pytest.raises(ValueError):
        build_cycle_cut(6, 4)
    with pytest.raises(ValueError):
        build_cycle_cut(6, 7)
    with pytest.raises(ValueError):
        build_cycle_cut(5, 10)  # above 2^(n-2)


def test_overlapping_windows_still_exact_paths():
    # shifted last window shares vertices with its predecessor but stays a P_k
    family = build_path_cut(5, 3)
    assert family.elements[1].vertex_set() & family.elements[2].vertex_set()
    for el in family.elements:
        assert el.vertex_count == 3


def test_cut_family_mode_validation():
    with pytest.raises(ValueError):
        CutFamily(3, StructureKind.path(3), "nonsense", ())
