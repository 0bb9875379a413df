"""Integral homology of the unreduced complexes against known tables."""

import numpy as np
import pytest

from khoarrow import corpus
from khoarrow.algebra import EVEN, ODD
from khoarrow.chain import BigradedComplex, build_unreduced
from khoarrow.homology import HomologyTable, NotAComplex, homology
from khoarrow.jones import euler_characteristic, jones


def table(name, p):
    return homology(build_unreduced(corpus.get(name), p)).group_rows()


def test_unknot():
    expected = [(0, -1, 1, ()), (0, 1, 1, ())]
    assert table("unknot", EVEN) == expected
    assert table("unknot", ODD) == expected
    assert table("kink", EVEN) == expected
    assert table("unknot_2", ODD) == expected


def test_hopf_link():
    expected = [(-2, -6, 1, ()), (-2, -4, 1, ()),
                (0, -2, 1, ()), (0, 0, 1, ())]
    assert table("hopf", EVEN) == expected
    assert table("hopf", ODD) == expected


def test_left_trefoil_even_has_2_torsion():
    assert table("trefoil", EVEN) == [
        (-3, -9, 1, ()), (-2, -7, 0, (2,)), (-2, -5, 1, ()),
        (0, -3, 1, ()), (0, -1, 1, ())]


def test_left_trefoil_odd_is_torsion_free():
    assert table("trefoil", ODD) == [
        (-3, -9, 1, ()), (-3, -7, 1, ()), (-2, -7, 1, ()),
        (-2, -5, 1, ()), (0, -3, 1, ()), (0, -1, 1, ())]


def test_figure8_even():
    assert table("figure8", EVEN) == [
        (-2, -5, 1, ()), (-1, -3, 0, (2,)), (-1, -1, 1, ()),
        (0, -1, 1, ()), (0, 1, 1, ()), (1, 1, 1, ()),
        (2, 3, 0, (2,)), (2, 5, 1, ())]


def test_figure8_odd():
    assert table("figure8", ODD) == [
        (-2, -5, 1, ()), (-2, -3, 1, ()), (-1, -3, 1, ()),
        (-1, -1, 1, ()), (0, -1, 1, ()), (0, 1, 1, ()),
        (1, 1, 1, ()), (1, 3, 1, ()), (2, 3, 1, ()), (2, 5, 1, ())]


@pytest.mark.parametrize("name", ["hopf", "trefoil", "figure8"])
@pytest.mark.parametrize("p", [EVEN, ODD])
def test_euler_characteristic_survives_homology(name, p):
    c = build_unreduced(corpus.get(name), p)
    t = homology(c)
    assert euler_characteristic(t) == euler_characteristic(c)
    assert euler_characteristic(t) == jones(corpus.get(name))


def test_table_accessors():
    t = homology(build_unreduced(corpus.get("trefoil"), EVEN))
    assert t.betti(-3, -9) == 1
    assert t.betti(5, 5) == 0
    assert t.torsion(-2, -7) == (2,)
    assert t.torsion(0, 0) == ()
    assert (-3, -9) in t.bidegrees()
    assert sum(c for _, _, c in t.iter_bidegrees()) == 4
    assert t == homology(build_unreduced(corpus.get("trefoil"), EVEN))
    assert t != homology(build_unreduced(corpus.get("figure8"), EVEN))
    assert isinstance(hash(t), int)


def test_rejects_non_complex():
    bad = BigradedComplex(
        groups={0: [0, 0], 1: [0, 0]},
        boundaries={0: np.eye(2, dtype=np.int64),
                    1: np.eye(2, dtype=np.int64)})
    with pytest.raises(NotAComplex):
        homology(bad)


def test_synthetic_torsion():
    # 0 -> Z --2--> Z -> 0 gives Z/2 in degree 1
    c = BigradedComplex(groups={0: [0], 1: [0]},
                        boundaries={0: np.array([[2]], dtype=np.int64)})
    t = homology(c)
    assert t.group_rows() == [(1, 0, 0, (2,))]
