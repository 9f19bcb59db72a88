from math import factorial

import pytest
from hypothesis import given, strategies as st

from cutshuffle.perm_core import (
    CapError, CycleType, as_perm, compose, cycle_type, cycles, cyclic_descents,
    descent_tables, descents, enumerate_sn, eulerian_numbers, identity, inverse,
    major_index, num_descents, perm_stats, rotation, sign,
)

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_stats_of_a_fixed_permutation():
    s = perm_stats((3, 1, 4, 2))
    assert (s.d, s.maj, s.cd) == (2, 4, 2)
    assert s.cycle_type == CycleType.from_parts([4])


def test_cyclic_descent_adds_wraparound():
    assert cyclic_descents((1, 2, 3)) == 1
    assert cyclic_descents((3, 2, 1)) == 2
    assert cyclic_descents((2, 1)) == 1
    assert cyclic_descents((1,)) == 0


def test_cycles_start_at_minimum():
    assert cycles((2, 3, 1, 5, 4)) == [(1, 2, 3), (4, 5)]
    assert str(cycle_type((2, 3, 1, 5, 4))) == "2^1 3^1"


def test_cycle_type_round_trip():
    t = CycleType.parse("1^2 3^1")
    assert t == CycleType((2, 0, 1))
    assert t.size == 5 and t.parts == (3, 1, 1) and t.mult(2) == 0
    assert CycleType.parse(str(t)) == t


def test_rotation_is_the_long_cycle():
    assert rotation(4) == (2, 3, 4, 1)
    assert rotation(4, 4) == identity(4)
    assert cycle_type(rotation(5)) == CycleType.from_parts([5])


def test_as_perm_rejects_non_permutations():
    with pytest.raises(ValueError):
        as_perm([1, 1, 2])


def test_enumeration_is_lexicographic_and_capped(small_cap):
    s3 = list(enumerate_sn(3))
    assert s3 == sorted(s3) and len(s3) == 6
    with pytest.raises(CapError):
        list(enumerate_sn(5))


@pytest.mark.parametrize("n", range(1, 9))
def test_descent_tables_match_recurrences(n):
    a, b = descent_tables(n)
    assert [a[i] for i in sorted(a)] == eulerian_numbers(n)
    assert sum(b.values()) == factorial(n)


def test_known_rows():
    assert eulerian_numbers(4) == [1, 11, 11, 1]
    a, b = descent_tables(4)
    assert b == {1: 4, 2: 16, 3: 4}


def test_large_eulerian_row_sums():
    assert sum(eulerian_numbers(52)) == factorial(52)


@given(perms)
def test_inverse_and_composition(w):
    assert compose(w, inverse(w)) == identity(len(w))
    assert inverse(inverse(w)) == w


@given(perms, st.data())
def test_sign_is_multiplicative(w, data):
    v = data.draw(st.permutations(range(1, len(w) + 1)).map(tuple))
    assert sign(compose(w, v)) == sign(w) * sign(v)


@given(perms)
def test_major_index_is_sum_of_descents(w):
    assert major_index(w) == sum(descents(w))
    assert num_descents(w) == len(descents(w))
    if len(w) > 1:
        assert 1 <= cyclic_descents(w) <= len(w) - 1
