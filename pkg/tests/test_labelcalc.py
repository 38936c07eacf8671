import pytest

from mckay_labels.algebra.ff import mk_field
from mckay_labels.core.errors import ExcludedConfiguration, McKayLabelsError, UnsupportedConfiguration
from mckay_labels.lie.labelcalc import (
    GaloisParam,
    Label,
    central_character_of_label,
    check_label,
    count_fixed_labels,
    count_fixed_labels_enumerated,
    enumerate_labels,
    fixed_labels_by_central,
    format_label,
    galois_act_label,
    label_field,
    label_set_size,
    labels_enumerable,
)


def test_galois_param_validation():
    with pytest.raises(ValueError):
        GaloisParam(3, -1)
    with pytest.raises(ValueError):
        GaloisParam(3, 1, 6)
    assert GaloisParam(5, 1, 7).kappa == 2
    g = GaloisParam(3, 2)
    assert g.s(4) == 2
    assert g.k_mod(8) == 1
    with pytest.raises(ValueError):
        g.k_mod(6)


@pytest.mark.parametrize("k,p,f,e,kappa", [(19, 3, 2, 1, 1), (7, 2, 2, 0, 1), (25, 3, 2, 0, 1), (11, 3, 1, 0, 2)])
def test_from_k(k, p, f, e, kappa):
    g = GaloisParam.from_k(k, p, f)
    assert (g.e, g.kappa) == (e, kappa)


@pytest.mark.parametrize("k,p,f", [(5, 3, 2), (3, 3, 1), (4, 5, 1)])
def test_from_k_rejects(k, p, f):
    with pytest.raises(ValueError):
        GaloisParam.from_k(k, p, f)


@pytest.mark.parametrize("label,w,q,size", [
    ("C2", 1, 3, 18), ("A1", 1, 5, 20), ("A2", 2, 2, 12), ("D4", 3, 2, 16), ("E8", 1, 2, 2 ** 8), ("D4", 1, 3, 4 * 81),
])
def test_label_set_size(twist, label, w, q, size):
    assert label_set_size(twist(label, w), q) == size


def test_excluded_configuration_has_no_labels(twist):
    with pytest.raises(ExcludedConfiguration):
        label_set_size(twist("D4", 2), 2)
    with pytest.raises(ExcludedConfiguration):
        count_fixed_labels(twist("C2"), 2, GaloisParam(2, 1))


def test_fixed_labels_closed_values(twist):
    c2 = twist("C2")
    assert count_fixed_labels(c2, 3, GaloisParam(3, 0)) == 18
    assert count_fixed_labels(c2, 3, GaloisParam(3, 1)) == 18
    assert count_fixed_labels(c2, 9, GaloisParam(3, 1)) == 18
    assert count_fixed_labels(c2, 9, GaloisParam(3, 2)) == 648


@pytest.mark.parametrize("label,w,p,f", [
    ("A2", 1, 2, 2), ("C2", 1, 3, 1), ("A2", 2, 2, 1), ("D4", 3, 2, 1), ("A3", 2, 3, 1), ("E6", 2, 2, 1), ("G2", 1, 2, 2),
])
def test_formula_matches_enumeration(twist, label, w, p, f):
    t = twist(label, w)
    q = p ** f
    for e in range(2 * f * w + 1):
        g = GaloisParam(p, e)
        assert count_fixed_labels(t, q, g) == count_fixed_labels_enumerated(t, q, g)


def test_enumeration_bound(twist, bounds):
    bounds(label_enumeration_bound=4)
    with pytest.raises(McKayLabelsError):
        count_fixed_labels_enumerated(twist("A1"), 5, GaloisParam(5, 1))


def test_enumeration_label_cap(twist, bounds):
    a1 = twist("A1")
    assert labels_enumerable(a1, 5)
    bounds(class_scale_bound=10)
    assert not labels_enumerable(a1, 5)
    with pytest.raises(UnsupportedConfiguration):
        count_fixed_labels_enumerated(a1, 5, GaloisParam(5, 1))


def test_enumeration_moves_whole_labels(twist):
    # A_1 over F_9, e = 1: gcd(8, 2) central values times the 3 elements of F_3
    assert count_fixed_labels_enumerated(twist("A1"), 9, GaloisParam(3, 1)) == 6
    assert count_fixed_labels_enumerated(twist("A1"), 9, GaloisParam(3, 2)) == 72


def test_enumerate_labels(twist):
    t = twist("A2", 2)
    labels = list(enumerate_labels(t, 2))
    assert len(labels) == len(set(labels)) == 12
    for lab in labels:
        check_label(lab, t, 2)
        assert lab.c0[0].ctx is label_field(t, 2)


def test_action_composes(twist):
    t = twist("A1")
    labels = list(enumerate_labels(t, 9))
    g1, g2, g3 = GaloisParam(3, 1), GaloisParam(3, 2), GaloisParam(3, 3)
    for lab in labels:
        assert galois_act_label(lab, GaloisParam(3, 0)) == lab
        assert galois_act_label(galois_act_label(lab, g1), g2) == galois_act_label(lab, g3)
    assert len({galois_act_label(lab, g1) for lab in labels}) == len(labels)


def test_fixed_labels_by_central(twist):
    t = twist("A1")
    g = GaloisParam(3, 1)
    split = fixed_labels_by_central(t, 9, g)
    assert len(split) == 8
    assert all(total == 9 for total, _ in split.values())
    fixed = {key: n for key, (_, n) in split.items() if n}
    assert set(fixed.values()) == {3}
    assert len(fixed) == 2
    assert sum(n for _, n in split.values()) == count_fixed_labels(t, 9, g)


def test_format_label(twist):
    first = next(enumerate_labels(twist("A1"), 5))
    assert format_label(first) == "(g^0; 0)"
    assert central_character_of_label(first) == first.c0
    ctx = mk_field(5, 1)
    lab = Label((ctx.generator ** 3,), (ctx.generator,))
    assert format_label(lab) == "(g^3; g^1)"
