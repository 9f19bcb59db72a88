from fractions import Fraction
from math import factorial, gcd

import pytest

from cutshuffle.conjecture_lab import (
    class_compare, even_transposition_form, f_coefficient, grand_exponent, grand_identity_check,
    largest_divisor_t, lemma_divide_scan, modular_reciprocity_count, obvious_check, odd_part,
    odd_transposition_form, poly_divides, printed_even_transposition_form, reciprocity_symmetric,
    statement1_report, statement1_tsv, transposition_maj_poly,
)
from cutshuffle.perm_core import CycleType

F = Fraction


def test_largest_divisor():
    assert largest_divisor_t(6, 3) == 3
    assert largest_divisor_t(4, 3) == 1
    assert all(largest_divisor_t(p, 2) == p for p in (2, 3, 5, 7))
    with pytest.raises(ValueError):
        largest_divisor_t(0, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_statement1_no_failures(n):
    cells = statement1_report(n)
    assert not [c for c in cells if c.status == "fail"]
    assert sum(c.size for c in cells) == factorial(n)


def test_statement1_proved_cells():
    cells = statement1_report(4)
    ident = [c for c in cells if c.cycle_type == CycleType.from_parts([1] * 4)]
    assert all(c.paper_proved for c in ident)
    assert [c.status for c in ident] == ["pass", "vacuous", "vacuous", "vacuous"]
    trans = [c for c in cells if c.cycle_type == CycleType.from_parts([2, 1, 1])]
    assert all(c.paper_proved and c.status != "fail" for c in trans)
    assert not any(c.paper_proved for c in cells if c.cycle_type == CycleType.from_parts([4]))


def test_statement1_tsv_layout():
    text = statement1_tsv(statement1_report(3))
    lines = text.splitlines()
    assert lines[0] == "cycle_type\tcd\tt\tcounts\tstatus\tproved_case"
    assert len(lines) == 1 + 3 * 3
    assert all(len(line.split("\t")) == 6 for line in lines)


def test_class_compare_examples():
    assert class_compare(2, 2).discrepancy == 0
    assert class_compare(3, 2).discrepancy == 0
    out = class_compare(4, 3)
    assert out.label == "out-of-hypothesis"
    assert out.discrepancy == F(1, 27)


def test_class_compare_in_hypothesis():
    for n in range(2, 6):
        for q in (2, 3, 4, 5, 7, 8):
            if gcd(n, q - 1) == 1:
                cmp = class_compare(n, q)
                assert cmp.in_hypothesis and cmp.discrepancy == 0


def test_obvious_check():
    assert obvious_check(2, 2) and obvious_check(3, 3) and obvious_check(3, 9)
    with pytest.raises(ValueError):
        obvious_check(4, 4)
    with pytest.raises(ValueError):
        obvious_check(3, 6)


def test_lemma_divide_scan():
    assert lemma_divide_scan(10, 11) == {"checked": 361, "skipped": 32, "failed": 0}


def test_reciprocity_examples():
    assert modular_reciprocity_count(0, 2, 2) == 2
    assert modular_reciprocity_count(1, 2, 3) == 2
    assert modular_reciprocity_count(1, 3, 2) == 2
    assert all(modular_reciprocity_count(m, 1, 5) == 1 for m in range(10))


def test_reciprocity_symmetric():
    assert all(reciprocity_symmetric(m, x, y)
               for x in range(1, 7) for y in range(1, 7) for m in range(x * y))


def test_f_coefficient():
    assert f_coefficient(2, 3, 2) == 3  # (1 + z + z^2)^2
    assert f_coefficient(0, 2, 0) == 1
    assert f_coefficient(5, 2, 3) == 0


def test_grand_exponent_printed_is_fractional():
    assert grand_exponent(1, 3, 2, "printed") == F(1, 2)
    assert grand_exponent(1, 3, 2, "necklace").denominator == 1


def test_grand_identity_necklace_form():
    assert all(v == 0 for v in grand_identity_check(3, 3, 12, "necklace").values())


def test_grand_identity_printed_form_discrepancy():
    report = grand_identity_check(2, 3, 12, "printed")
    assert report[(2, 3)] == F(1, 2)
    assert report[(1, 2)] == 0


def test_grand_identity_limits():
    with pytest.raises(ValueError):
        grand_identity_check(5, 3)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_odd_transposition_polynomial(n):
    assert transposition_maj_poly(n) == odd_transposition_form(n)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_even_transposition_polynomial(n):
    poly = transposition_maj_poly(n)
    assert poly == even_transposition_form(n)
    assert poly != printed_even_transposition_form(n)
    t = odd_part(n)
    assert poly_divides([1] * t, poly)


def test_two_power_case():
    for n in (4, 8):
        # the cofactor 1 + x^(n/2^a) + ... is divisible by x + 1
        assert poly_divides([1, 1], [1] * n)
        assert odd_part(n) == 1
        assert printed_even_transposition_form(n) == [-1, 0] * (n // 2)
        assert all(c >= 0 for c in transposition_maj_poly(n))
