import cmath
import math

import pytest
from hypothesis import assume, given, strategies as st

from altchar import perms
from altchar.characters import AnClass, AnIrrep, an_character, an_classes, an_irreps
from altchar.multiplicity import (
    an_multiplicity,
    an_multiplicity_vector,
    bias,
    bias_oracle,
    bias_vector,
    cyclotomic_polynomial,
    order_of_type,
    power_conjugacy,
    power_cycle_type,
    sn_multiplicity,
    sn_multiplicity_oracle,
    sn_multiplicity_vector,
)
from altchar.partitions import dimension, has_distinct_odd_parts, partitions
from conftest import distinct_odd_types, mid_partitions, shape_type_pairs


@given(mid_partitions, st.integers(min_value=0, max_value=40))
def test_power_cycle_type_matches_permutations(mu, d):
    w = perms.standard_rep(mu)
    assert power_cycle_type(mu, d) == perms.cycle_type(perms.perm_power(w, d))


def test_order_of_type():
    assert order_of_type((15, 9, 3)) == 45
    assert order_of_type((1, 1)) == 1


CYCLOTOMIC_KNOWN = {
    1: (-1, 1),
    2: (1, 1),
    6: (1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("m, coeffs", sorted(CYCLOTOMIC_KNOWN.items()))
def test_cyclotomic_known(m, coeffs):
    assert cyclotomic_polynomial(m) == coeffs


def test_cyclotomic_degrees():
    from altchar.numtheory import euler_phi

    for m in range(1, 40):
        poly = cyclotomic_polynomial(m)
        assert len(poly) == euler_phi(m) + 1
        assert poly[-1] == 1


# --- the symmetric-group engine ----------------------------------------------


@given(shape_type_pairs(max_n=9))
def test_entries_sum_to_the_dimension(pair):
    lam, mu = pair
    vec = sn_multiplicity_vector(lam, mu)
    assert sum(vec.entries) == dimension(lam)
    assert all(a >= 0 for a in vec.entries)


@given(shape_type_pairs(max_n=9), st.data())
def test_multiplicity_depends_only_on_the_gcd(pair, data):
    """Galois conjugate eigenvalues must appear equally often."""
    lam, mu = pair
    m = order_of_type(mu)
    i = data.draw(st.integers(min_value=0, max_value=m - 1))
    j = data.draw(st.integers(min_value=0, max_value=m - 1))
    if math.gcd(i, m) == math.gcd(j, m):
        assert sn_multiplicity(lam, mu, i) == sn_multiplicity(lam, mu, j)


@pytest.mark.parametrize("n", range(1, 8))
def test_engine_equals_oracle(n):
    for mu in partitions(n):
        m = order_of_type(mu)
        for lam in partitions(n):
            for i in range(m):
                assert sn_multiplicity(lam, mu, i) == sn_multiplicity_oracle(lam, mu, i)


def test_trivial_shape_sees_only_eigenvalue_one():
    for mu in partitions(6):
        n = sum(mu)
        m = order_of_type(mu)
        for i in range(m):
            assert sn_multiplicity((n,), mu, i) == (1 if i == 0 else 0)


def test_mismatched_weights_rejected():
    with pytest.raises(ValueError):
        sn_multiplicity((3, 1), (5,), 0)


# --- the bias ----------------------------------------------------------------


def test_bias_worked_example():
    values = {r.i: (r.value, r.abs_formula) for r in bias_vector((15, 9, 3))}
    assert values[0] == (0, 0)
    assert values[1] == (0, 0)
    assert values[15] == (0, 0)
    assert values[3][1] == 3
    assert values[9][1] == 6


def test_bias_on_a_three_cycle():
    assert [bias((3,), i).value for i in range(3)] == [0, 1, -1]


@pytest.mark.parametrize("n", range(1, 14))
def test_bias_equals_the_defining_sum(n):
    for mu in partitions(n):
        if not has_distinct_odd_parts(mu):
            continue
        for i in range(order_of_type(mu)):
            r = bias(mu, i)
            assert r.value == bias_oracle(mu, i)
            assert abs(r.value) == r.abs_formula
            assert r.nonzero == (r.value != 0)


@given(distinct_odd_types, st.integers(min_value=0, max_value=200))
def test_bias_magnitude_bound(mu, i):
    r = bias(mu, i)
    M = math.prod(mu)
    if len(mu) > 1:
        assert r.value * r.value < M
    assert r.value * r.value <= M


def test_bias_zero_index_characterization():
    """d_0 is nonzero exactly when the part product is a perfect square."""
    for n in range(1, 15):
        for mu in partitions(n):
            if not has_distinct_odd_parts(mu):
                continue
            M = math.prod(mu)
            square = math.isqrt(M) ** 2 == M
            assert (bias(mu, 0).value != 0) == square


def test_bias_rejects_bad_types():
    with pytest.raises(ValueError):
        bias((3, 3), 0)
    with pytest.raises(ValueError):
        bias((4, 1), 0)


# --- the alternating dispatch --------------------------------------------------


@pytest.mark.parametrize("n", range(2, 10))
def test_an_vectors_reconstruct_the_character(n):
    for rep in an_irreps(n):
        for cls in an_classes(n):
            vec = an_multiplicity_vector(rep, cls)
            rebuilt = sum(
                a * cmath.exp(2j * math.pi * i / vec.m) for i, a in enumerate(vec.entries)
            )
            assert abs(rebuilt - complex(an_character(rep, cls))) < 1e-8
            assert sum(vec.entries) == rep.dim()
            assert all(a >= 0 for a in vec.entries)


def test_own_type_splits_by_the_bias():
    rep = AnIrrep((2, 1), "+")
    assert [an_multiplicity(rep, AnClass((3,), "+"), i) for i in range(3)] == [0, 1, 0]
    assert [an_multiplicity(rep, AnClass((3,), "-"), i) for i in range(3)] == [0, 0, 1]


def test_split_pair_shares_counts_away_from_its_type():
    plus = AnIrrep((3, 3, 2), "+")
    minus = AnIrrep((3, 3, 2), "-")
    cls = AnClass((7, 1), "+")  # distinct-odd, but not the hook type of (3,3,2)
    for i in range(7):
        assert an_multiplicity(plus, cls, i) == an_multiplicity(minus, cls, i)


# --- power conjugacy -----------------------------------------------------------


def test_power_conjugacy_examples():
    assert power_conjugacy((5, 3), 2) == "same"  # jacobi(2,15) = 1
    assert power_conjugacy((7, 3), 2) == "swapped"
    assert power_conjugacy((3,), 2) == "swapped"


def test_power_conjugacy_rejects():
    with pytest.raises(ValueError):
        power_conjugacy((5, 3), 3)  # not coprime to the order
    with pytest.raises(ValueError):
        power_conjugacy((3, 3), 1)  # class does not split


@given(distinct_odd_types, st.data())
def test_power_conjugacy_matches_explicit_conjugators(mu, data):
    assume(sum(mu) <= 11)
    m = order_of_type(mu)
    units = [i for i in range(1, m + 1) if math.gcd(i, m) == 1]
    i = data.draw(st.sampled_from(units))
    w = perms.standard_rep(mu)
    rho = perms.conjugator(w, perms.perm_power(w, i))
    expected = "same" if perms.sign(rho) == 1 else "swapped"
    assert power_conjugacy(mu, i) == expected
