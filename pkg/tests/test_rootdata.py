import pytest

from mckay_labels.core.errors import RootDatumError
from mckay_labels.lie.rootdata import (
    borel_level_allowed,
    build_root_datum,
    build_twist,
    center_order,
    is_excluded,
    is_good_prime,
    parse_type,
    supported_twists,
)


def test_parse_type():
    assert parse_type("E6") == ("E", 6)
    assert parse_type("c", 3) == ("C", 3)
    assert parse_type("D_4") == ("D", 4)
    with pytest.raises(RootDatumError):
        parse_type("E6", 7)
    with pytest.raises(RootDatumError):
        parse_type("A")


@pytest.mark.parametrize("letter,n", [("B", 1), ("D", 3), ("E", 5), ("F", 3), ("H", 3), ("A", 0)])
def test_invalid_types(letter, n):
    with pytest.raises(RootDatumError):
        build_root_datum(letter, n)


def test_cartan_convention(c2):
    assert c2.cartan == ((2, -1), (-2, 2))
    assert build_root_datum("B", 2).cartan == ((2, -2), (-1, 2))
    assert build_root_datum("G", 2).cartan == ((2, -1), (-3, 2))


@pytest.mark.parametrize("label", ["A1", "A3", "D4", "D5", "E6", "E7", "E8", "B3", "C3", "F4", "G2"])
def test_transpose_changes_only_non_simply_laced(label):
    rd = build_root_datum(label)
    assert (tuple(zip(*rd.cartan)) == rd.cartan) == rd.simply_laced


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transpose_swaps_b_and_c(n):
    assert tuple(zip(*build_root_datum("B", n).cartan)) == build_root_datum("C", n).cartan


@pytest.mark.parametrize("label,count", [
    ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6),
])
def test_positive_root_counts(label, count):
    assert len(build_root_datum(label).positive_roots) == count


@pytest.mark.parametrize("label,highest", [
    ("C2", (2, 1)), ("B2", (1, 2)), ("G2", (3, 2)), ("F4", (2, 3, 4, 2)), ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
    ("A3", (1, 1, 1)), ("D5", (1, 2, 2, 1, 1)),
])
def test_highest_root(label, highest):
    assert build_root_datum(label).highest_root == highest


@pytest.mark.parametrize("label,divisors", [
    ("A3", (4,)), ("B3", (2,)), ("C3", (2,)), ("D4", (2, 2)), ("D5", (4,)), ("E6", (3,)), ("E7", (2,)), ("E8", ()),
    ("F4", ()), ("G2", ()),
])
def test_fundamental_group(label, divisors):
    rd = build_root_datum(label)
    assert rd.elementary_divisors == divisors
    assert rd.d == len(divisors)


@pytest.mark.parametrize("label,l", [("A1", 2), ("A3", 4), ("D4", 2), ("E6", 3), ("E8", 1), ("G2", 1)])
def test_fundamental_group_exponent(label, l):
    assert build_root_datum(label).l == l


def test_center_rank_in_characteristic_p():
    d4 = build_root_datum("D4")
    assert d4.d_p(2) == 0 and d4.d_p(3) == 2
    a2 = build_root_datum("A2")
    assert a2.d_p(3) == 0 and a2.d_p(2) == 1


def test_bad_primes():
    assert build_root_datum("A3").bad_primes == frozenset()
    assert build_root_datum("E8").bad_primes == {2, 3, 5}
    assert not is_good_prime(build_root_datum("G2"), 3)
    assert is_good_prime(build_root_datum("C3"), 3)


def test_borel_level_availability():
    e6, e7 = build_root_datum("E6"), build_root_datum("E7")
    assert not borel_level_allowed(e6, 4)
    assert not borel_level_allowed(e6, 16)
    # Z(G^F) = 1 when 3 does not divide q - 1
    assert borel_level_allowed(e6, 2)
    assert borel_level_allowed(e6, 8)
    assert borel_level_allowed(e6, 3)
    assert not borel_level_allowed(e7, 3)
    assert not borel_level_allowed(e7, 9)
    assert borel_level_allowed(e7, 2)
    assert borel_level_allowed(build_root_datum("E8"), 5)
    assert center_order(e6, 4) == 3
    assert center_order(e6, 8) == 1
    assert center_order(e7, 9) == 2


@pytest.mark.parametrize("label,twists", [
    ("A1", [1]), ("A2", [1, 2]), ("D4", [1, 2, 3]), ("D5", [1, 2]), ("E6", [1, 2]), ("E7", [1]), ("C3", [1]),
])
def test_supported_twists(label, twists):
    assert supported_twists(label) == twists


def test_unitary_twist(twist):
    t = twist("A3", 2)
    assert t.orbits == ((0, 2), (1,))
    assert t.reps == (0, 1)
    assert t.orbit_sizes == (2, 1)
    assert t.dbar == 1
    assert t.center_orders(5) == (6,)
    assert t.name == "^2A_3"


def test_triality_twist(twist):
    t = twist("D4", 3)
    assert t.orbits == ((0, 2, 3), (1,))
    assert t.dbar == 0
    assert t.center_orders(3) == ()
    assert t.name == "^3D_4"


def test_orthogonal_twists(twist):
    assert twist("D4", 2).center_orders(3) == (8,)
    assert twist("D5", 2).center_orders(3) == (4,)
    assert twist("D4").center_orders(3) == (2, 2)


def test_bad_twist_order(c2):
    with pytest.raises(RootDatumError):
        build_twist(c2, 4)
    with pytest.raises(RootDatumError):
        build_twist(c2, 2)


@pytest.mark.parametrize("label,w,q,excluded", [
    ("D4", 2, 2, True), ("D5", 2, 2, True), ("D5", 2, 4, False), ("B2", 1, 2, True), ("C3", 1, 2, True),
    ("C1", 1, 2, False), ("A2", 1, 2, False), ("G2", 1, 3, True), ("G2", 1, 4, False), ("F4", 1, 2, True),
    ("D4", 3, 2, False),
])
def test_exclusion_table(twist, label, w, q, excluded):
    flag, reason = is_excluded(twist(label, w), q)
    assert flag is excluded
    assert bool(reason) is excluded


def test_exclusion_reason(twist):
    assert is_excluded(twist("D4", 2), 2)[1] == "D_4, q=2, w=2 excluded"
