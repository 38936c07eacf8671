import pytest

from mckay_labels.algebra.ff import mk_field
from mckay_labels.core.errors import UnsupportedConfiguration
from mckay_labels.lie.labelcalc import GaloisParam, count_fixed_labels
from mckay_labels.oracles.sscls import (
    charpoly_of_class,
    class_from_charpoly,
    class_power,
    count_sigma_fixed_classes,
    enumerate_ss_classes,
    enumerate_ss_classes_gu3,
    partition_by_determinant,
    steinberg_label,
    universe,
)


@pytest.mark.parametrize("dim,q", [(1, 4), (2, 3), (2, 5), (3, 2), (3, 3), (2, 9)])
def test_class_count(dim, q):
    classes = enumerate_ss_classes(dim, q)
    assert len(classes) == len(set(classes)) == (q - 1) * q ** (dim - 1)
    assert [c.key for c in classes] == sorted(c.key for c in classes)
    assert all(c.dimension == dim for c in classes)


def test_universe_contains_every_degree():
    assert universe(3, 2) is mk_field(2, 6)
    assert universe(2, 9) is mk_field(3, 4)


def test_charpoly_round_trip():
    for cls in enumerate_ss_classes(2, 5):
        assert class_from_charpoly(charpoly_of_class(cls)) == cls


def test_class_from_charpoly_rejects():
    F5 = mk_field(5, 1)
    with pytest.raises(ValueError):
        class_from_charpoly((F5.one, F5.one, F5.prime(2)))
    with pytest.raises(ValueError):
        class_from_charpoly((F5.zero, F5.one))


def test_steinberg_label_gl2():
    for cls in enumerate_ss_classes(2, 5):
        lab = steinberg_label(cls)
        assert lab.b0 == cls.charpoly[0]
        assert lab.b == (-cls.charpoly[1],)


def test_steinberg_label_separates_classes():
    classes = enumerate_ss_classes(3, 3)
    assert len({steinberg_label(c) for c in classes}) == len(classes)


def test_class_power():
    for cls in enumerate_ss_classes(2, 3):
        assert class_power(cls, 1) == cls
        identity = class_power(cls, 0)
        assert all(x == x.ctx.one for x in identity.eigenvalues())
    with pytest.raises(ValueError):
        class_power(enumerate_ss_classes(2, 3)[0], -1)


@pytest.mark.parametrize("dim,p,f", [(2, 3, 2), (2, 5, 1), (3, 2, 2), (3, 3, 1)])
def test_fixed_classes_match_labels(twist, dim, p, f):
    q = p ** f
    t = twist(f"A{dim - 1}")
    for e in range(2 * f + 1):
        g = GaloisParam(p, e)
        assert count_sigma_fixed_classes(dim, q, g) == count_fixed_labels(t, q, g)


def test_fixed_classes_gl2_q9():
    assert count_sigma_fixed_classes(2, 9, GaloisParam(3, 0)) == 72
    assert count_sigma_fixed_classes(2, 9, GaloisParam(3, 1)) == 6


def test_partition_by_determinant():
    split = partition_by_determinant(2, 5, GaloisParam(5, 0))
    assert len(split) == 4
    assert set(split.values()) == {(5, 5)}
    split = partition_by_determinant(2, 9, GaloisParam(3, 1))
    assert sum(1 for _, fixed in split.values() if fixed) == 2


def test_scale_bound(bounds):
    bounds(class_scale_bound=2)
    with pytest.raises(UnsupportedConfiguration):
        enumerate_ss_classes(2, 5)
    with pytest.raises(ValueError):
        enumerate_ss_classes(0, 5)


@pytest.mark.parametrize("q,count", [(2, 12), (3, 36), (4, 80)])
def test_gu3_class_count(q, count):
    assert enumerate_ss_classes_gu3(q) == count


def test_gu3_bound(bounds):
    bounds(gu3_max_q=2)
    with pytest.raises(UnsupportedConfiguration):
        enumerate_ss_classes_gu3(3)
