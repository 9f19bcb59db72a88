import random
from collections import Counter
from fractions import Fraction

import pytest
from scipy.stats import chisquare

from cutshuffle import affine_shuffles as aff
from cutshuffle.affine_shuffles import (
    METHODS, affine2_exact_law, affine2_sample, affine2_split, affine_count, affine_measure,
    euler_phi, mobius, q_binomial, ramanujan_sum, ramanujan_sum_exponential,
)
from cutshuffle.exact_algebra import PermMeasure, convolve
from cutshuffle.perm_core import CapError, cyclic_descents, enumerate_sn, inverse

F = Fraction


def test_mobius_and_phi():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_ramanujan_small_values():
    assert all(ramanujan_sum(1, m) == 1 for m in range(-5, 6))
    assert ramanujan_sum(6, 0) == 2
    assert ramanujan_sum(4, 2) == -2
    assert all(ramanujan_sum(r, 0) == euler_phi(r) for r in range(1, 30))


@pytest.mark.parametrize("r", range(1, 13))
def test_ramanujan_matches_exponential_sum(r):
    for m in range(-r, 2 * r + 1):
        z = ramanujan_sum_exponential(r, m)
        assert abs(z.real - ramanujan_sum(r, m)) < 1e-30
        assert abs(z.imag) < 1e-30


def test_ramanujan_full_period_vanishes():
    assert all(sum(ramanujan_sum(r, j) for j in range(r)) == 0 for r in range(2, 51))


def test_q_binomial():
    assert q_binomial(4, 2) == (1, 1, 2, 1, 1)
    assert q_binomial(3, 0) == (1,)
    assert sum(q_binomial(7, 3)) == 35


def test_box_partition_conjugation():
    assert aff.partition_size_counts(3, 4) == aff.partition_size_counts(4, 3)
    for n in range(2, 6):
        for k in range(1, 6):
            for w in enumerate_sn(n):
                assert affine_count(w, k, "partitions") == affine_count(w, k, "partitions_conjugate")


def test_two_cards_two_shuffle_is_uniform():
    assert affine_measure(2, 2) == PermMeasure(2, {(1, 2): F(1, 2), (2, 1): F(1, 2)})


def test_three_cards_two_shuffle():
    m = affine_measure(3, 2)
    for w in enumerate_sn(3):
        expected = F(1, 4) if cyclic_descents(inverse(w)) == 1 or w == (3, 2, 1) else 0
        assert m[w] == expected


def test_one_shuffle_degenerate_branch():
    # k = cd = 1 forces maj = 0 mod n: only the rotations survive, and only the identity has maj 0
    for n in range(2, 6):
        assert affine_measure(n, 1) == PermMeasure.identity(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_four_definitions_agree(n):
    for k in range(1, 6):
        ref = affine_measure(n, k, "partitions")
        assert ref.total() == 1
        for method in METHODS:
            assert affine_measure(n, k, method) == ref


@pytest.mark.parametrize("n", range(2, 6))
def test_convolution_property(n):
    for k1 in (1, 2, 3):
        for k2 in (1, 2, 3):
            assert convolve(affine_measure(n, k1), affine_measure(n, k2)) == affine_measure(n, k1 * k2)


def test_unknown_method_and_bad_sizes():
    with pytest.raises(ValueError):
        affine_measure(3, 2, "lattice")
    with pytest.raises(ValueError):
        affine_count((1,), 2)
    with pytest.raises(ValueError):
        affine_count((1, 2), 0)


def test_vector_budget(monkeypatch):
    monkeypatch.setattr(aff, "VECTOR_BUDGET", 10)
    aff._vector_count.cache_clear()
    try:
        with pytest.raises(CapError):
            affine_measure(5, 5, "vectors")
    finally:
        aff._vector_count.cache_clear()


def test_split_packets():
    assert affine2_split(6, 0) == ([1, 2, 3, 4, 5, 6], [])
    assert affine2_split(6, 1) == ([2, 3, 4, 5], [6, 1])
    assert affine2_split(5, 2) == ([3], [4, 5, 1, 2])
    with pytest.raises(ValueError):
        affine2_split(5, 3)


@pytest.mark.parametrize("m", range(2, 7))
def test_physical_law_matches_definitions(m):
    assert affine2_exact_law(m) == affine_measure(m, 2)


def test_sampler_is_seeded():
    assert [affine2_sample(6, 7) for _ in range(3)] == [affine2_sample(6, 7)] * 3
    rng = random.Random(3)
    assert all(sorted(affine2_sample(5, rng)) == [1, 2, 3, 4, 5] for _ in range(50))


def test_sampler_deck_two_is_uniform():
    rng = random.Random(11)
    counts = Counter(affine2_sample(2, rng) for _ in range(20000))
    assert abs(counts[(1, 2)] / 20000 - 0.5) < 3 * (0.25 / 20000) ** 0.5


def test_sampler_chi_square_deck_four():
    rng = random.Random(20240602)
    trials = 100_000
    counts = Counter(affine2_sample(4, rng) for _ in range(trials))
    law = affine_measure(4, 2)
    support = sorted(law.coeffs)
    assert set(counts) <= set(support)
    observed = [counts[w] for w in support]
    expected = [float(law[w]) * trials for w in support]
    assert chisquare(observed, expected).pvalue > 0.001
