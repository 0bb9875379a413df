"""Resolutions, arrows, and the hypercube bookkeeping."""

import pytest

from khoarrow.cube import (CoordinateAlreadyOne, check_planarity,
                           count_circles, cube_edges, cube_faces,
                           khovanov_sign, resolve)
from khoarrow.diagram import parse_pd

TREFOIL = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
HOPF = parse_pd("X[4,1,3,2] X[2,3,1,4]")


def test_trefoil_circle_counts():
    ks = {bits: resolve(TREFOIL, bits).k
          for bits in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                       (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]}
    assert ks[(0, 0, 0)] == 3
    assert ks[(1, 0, 0)] == ks[(0, 1, 0)] == ks[(0, 0, 1)] == 2
    assert ks[(1, 1, 0)] == ks[(1, 0, 1)] == ks[(0, 1, 1)] == 1
    assert ks[(1, 1, 1)] == 2


def test_count_circles_matches_resolve():
    for m in range(8):
        bits = tuple((m >> (2 - j)) & 1 for j in range(3))
        assert count_circles(TREFOIL, bits) == resolve(TREFOIL, bits).k


def test_resolution_structure():
    r = resolve(HOPF, (0, 0))
    assert r.k == 2
    assert len(r.arrows) == 2
    for arr in r.arrows:
        assert 0 <= arr.source < r.k and 0 <= arr.target < r.k
    # every arc belongs to exactly one circle
    arcs = [a for circ in r.circles for a in circ]
    assert sorted(arcs) == list(HOPF.arcs)
    assert r.circle_of(r.circles[0][0]) == 0
    with pytest.raises(KeyError):
        r.circle_of(999)


def test_free_loops_become_empty_circles():
    d = parse_pd("")
    r = resolve(d, ())
    assert r.circles == ((),)
    assert r.k == 1


def test_flip_arrows_swaps_endpoints():
    r = resolve(HOPF, (0, 0))
    rf = resolve(HOPF, (0, 0), flip_arrows=True)
    for a, b in zip(r.arrows, rf.arrows):
        assert (a.source, a.target) == (b.target, b.source)


def test_resolve_validates_bits():
    with pytest.raises(ValueError):
        resolve(HOPF, (0,))
    with pytest.raises(ValueError):
        resolve(HOPF, (0, 2))


def test_khovanov_sign():
    assert khovanov_sign((0, 0, 0), 0) == 1
    assert khovanov_sign((1, 0, 0), 1) == -1
    assert khovanov_sign((1, 1, 0), 2) == 1
    with pytest.raises(CoordinateAlreadyOne):
        khovanov_sign((1, 0), 0)


def test_cube_edge_and_face_counts():
    n = TREFOIL.n
    edges = cube_edges(TREFOIL)
    assert len(edges) == n * 2 ** (n - 1)
    assert {e.kind for e in edges} == {"merge", "split"}
    faces = cube_faces(TREFOIL)
    assert len(faces) == 3 * 2 ** (n - 2)    # C(3,2) * 2^(n-2)


def test_edge_kind_matches_circle_count_change():
    for e in cube_edges(TREFOIL):
        dk = count_circles(TREFOIL, e.to) - count_circles(TREFOIL, e.frm)
        assert dk == (-1 if e.kind == "merge" else 1)


def test_check_planarity():
    assert check_planarity(TREFOIL)
    assert check_planarity(HOPF)
