import math
from fractions import Fraction

import pytest
from hypothesis import given

from altchar.characters import (
    AnClass,
    AnIrrep,
    QuadValue,
    an_character,
    an_classes,
    an_irreps,
    character_table_an,
    class_splits,
    in_alternating,
    irrep_splits,
    mn_character,
)
from altchar.partitions import (
    centralizer_order_sn,
    conjugate,
    dimension,
    partitions,
    sn_class_size,
    sn_parity,
)
from conftest import shape_type_pairs

# the symmetric group on 4 points: rows are shapes, columns cycle types
S4_TYPES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
S4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def test_murnaghan_nakayama_on_the_s4_table():
    for lam, row in S4_TABLE.items():
        assert [mn_character(lam, mu) for mu in S4_TYPES] == row


def test_murnaghan_nakayama_hooks():
    # an n-cycle sees only hooks, with the leg sign
    assert mn_character((3, 1, 1), (5,)) == 1
    assert mn_character((4, 1), (5,)) == -1
    assert mn_character((3, 2), (5,)) == 0


@given(shape_type_pairs(max_n=10))
def test_conjugate_shape_twists_by_the_sign(pair):
    lam, mu = pair
    assert mn_character(conjugate(lam), mu) == sn_parity(mu) * mn_character(lam, mu)


@given(shape_type_pairs(max_n=9))
def test_identity_column_is_the_dimension(pair):
    lam, _ = pair
    n = sum(lam)
    assert mn_character(lam, (1,) * n) == dimension(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality_exact(n):
    plist = partitions(n)
    for mu in plist:
        for nu in plist:
            inner = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in plist)
            assert inner == (centralizer_order_sn(mu) if mu == nu else 0)


# --- the alternating side ----------------------------------------------------


def test_split_predicates():
    assert in_alternating((5, 3)) and not in_alternating((4, 3, 1))
    assert class_splits((5, 3)) and not class_splits((3, 3))
    assert not class_splits((1,))  # nothing splits below two points
    assert irrep_splits((2, 1)) and not irrep_splits((3, 1))


def test_labels_round_trip():
    assert AnClass.from_label("5,3:+").label() == "5,3:+"
    assert AnClass.from_label("3,1,1").label() == "3,1,1"
    assert AnIrrep.from_label("2,1:-").label() == "2,1:-"
    assert AnIrrep.from_label("3,1").label() == "3,1"


def test_tag_validation():
    with pytest.raises(ValueError):
        AnClass((5, 3))  # split class needs a tag
    with pytest.raises(ValueError):
        AnClass((3, 3), "+")  # non-split class refuses one
    with pytest.raises(ValueError):
        AnClass((4, 3, 1))  # odd permutation type
    with pytest.raises(ValueError):
        AnIrrep((2, 1))  # self-conjugate shape needs a tag
    with pytest.raises(ValueError):
        AnIrrep((3, 1), "+")


def test_whole_irreps_identify_conjugate_shapes():
    assert AnIrrep((3, 1)) == AnIrrep((2, 1, 1))
    assert AnIrrep((3, 1)).lam == (3, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_class_and_irrep_counts_match(n):
    classes = an_classes(n)
    reps = an_irreps(n)
    assert len(classes) == len(reps)
    order = max(math.factorial(n) // 2, 1)
    assert sum(c.size() for c in classes) == order
    assert sum(r.dim() ** 2 for r in reps) == order


def test_split_class_sizes_halve():
    full = sn_class_size((5, 3))
    assert AnClass((5, 3), "+").size() == full // 2


@pytest.mark.parametrize("n", range(2, 10))
def test_split_pair_sums_to_the_symmetric_value(n):
    """chi+ + chi- must recover the symmetric-group character everywhere."""
    for rep in an_irreps(n):
        if rep.tag != "+":
            continue
        partner = AnIrrep(rep.lam, "-")
        for cls in an_classes(n):
            total = an_character(rep, cls) + an_character(partner, cls)
            assert total.is_rational()
            assert total.as_fraction() == Fraction(mn_character(rep.lam, cls.mu))


@pytest.mark.parametrize("n", range(2, 10))
def test_whole_values_restrict(n):
    for rep in an_irreps(n):
        if rep.tag:
            continue
        for cls in an_classes(n):
            v = an_character(rep, cls)
            assert v.is_rational()
            assert v.as_fraction() == Fraction(mn_character(rep.lam, cls.mu))


def test_a5_golden_ratio_entries():
    plus = an_character(AnIrrep((3, 1, 1), "+"), AnClass((5,), "+"))
    assert (plus.a, plus.b, plus.D) == (1, 1, 5)
    swapped = an_character(AnIrrep((3, 1, 1), "+"), AnClass((5,), "-"))
    assert (swapped.a, swapped.b, swapped.D) == (1, -1, 5)


def test_a3_table_is_the_cube_root_table():
    table = character_table_an(3)
    dims = sorted(r.dim() for r in table.irreps)
    assert dims == [1, 1, 1]
    omega_class = AnClass((3,), "+")
    values = sorted(
        (v.a, v.b, v.D) for v in (table.value(r, omega_class) for r in table.irreps)
    )
    # 1 and the two primitive cube roots (-1 +- sqrt(-3))/2
    assert values == [(-1, -1, -3), (-1, 1, -3), (2, 0, 0)]


def test_table_bound_guard():
    with pytest.raises(ValueError):
        character_table_an(15)


# --- exact quadratic arithmetic ----------------------------------------------


def test_quadvalue_normal_form():
    assert QuadValue(1, 3, 1) == QuadValue(4, 0, 0)  # perfect square folds
    assert QuadValue(2, 0, 5) == QuadValue(2, 0, 0)  # dropped radical clears D
    with pytest.raises(ValueError):
        QuadValue(1, 2, 0)


def test_quadvalue_addition_cancels():
    x = QuadValue(1, 2, 5)
    y = QuadValue(3, -2, 5)
    assert (x + y) == QuadValue(4, 0, 0)
    with pytest.raises(ValueError):
        QuadValue(1, 1, 5) + QuadValue(1, 1, -3)


def test_quadvalue_multiplication():
    golden = QuadValue(1, 1, 5)
    other = QuadValue(1, -1, 5)
    assert golden * other == QuadValue(-2, 0, 0)  # norm of the golden ratio
    assert golden * golden == QuadValue(3, 1, 5)  # phi^2 = phi + 1
    assert complex(QuadValue(-1, 1, -3)) == pytest.approx(
        complex(-0.5, math.sqrt(3) / 2)
    )


def test_quadvalue_conjugations():
    v = QuadValue(-1, 1, -3)
    assert v.complex_conjugate() == QuadValue(-1, -1, -3)
    real = QuadValue(1, 1, 5)
    assert real.complex_conjugate() == real
    assert real.galois_conjugate() == QuadValue(1, -1, 5)


def test_quadvalue_string_forms():
    assert str(QuadValue(4, 0, 0)) == "2"
    assert str(QuadValue(1, 0, 0)) == "1/2"
    assert str(QuadValue(1, 1, 5)) == "(1+sqrt(5))/2"
    assert str(QuadValue(1, -1, 5)) == "(1-sqrt(5))/2"
    assert str(QuadValue(0, 1, -3)) == "sqrt(-3)/2"
    assert str(QuadValue(0, -2, 5)) == "-2*sqrt(5)/2"
