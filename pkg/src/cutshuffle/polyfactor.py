"""
Cycle-type laws of shuffles and factorization types of random monic
polynomials over finite fields.

Polynomials over a prime field F_p are tuples of residues, lowest degree
first, always monic.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .affine_shuffles import divisors, mobius
from .exact_algebra import ClassMeasure, PermMeasure, cycle_index
from .series import Series, SeriesRing
from .perm_core import CycleType, check_cap, cycle_type
from .shuffle_measures import riffle_measure, shuffle_then_cut_measure

__all__ = [
    "CONSTRAINTS", "num_irreducibles", "is_prime", "is_prime_power",
    "monic_polys", "poly_divmod", "is_irreducible", "irreducibles",
    "factor_type", "partitions", "class_measure", "poly_class_measure",
    "expected_fixed_points", "necklace_exponent", "cyc_identity_check",
    "unique_factorization_check",
]

CONSTRAINTS = ("all", "nonzero_constant", "constant_one")
Poly = tuple[int, ...]


def num_irreducibles(q: int, i: int) -> int:
    """Monic irreducibles of degree ``i`` over F_q: ``(1/i) sum_{d|i} mu(d) q^(i/d)``."""
    if q < 2 or i < 1:
        raise ValueError(f"need q >= 2 and i >= 1, got q={q}, i={i}")
    total = sum(mobius(d) * q ** (i // d) for d in divisors(i))
    assert total % i == 0
    return total // i


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


# -- polynomial arithmetic over F_p ----------------------------------------------

def monic_polys(p: int, degree: int) -> Iterator[Poly]:
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    """Division with remainder by a monic ``g``."""
    if g[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(f)
    dg = len(g) - 1
    quot = [0] * max(len(f) - dg, 1)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = rem[i + dg] % p
        quot[i] = c
        if c:
            for j, gj in enumerate(g):
                rem[i + j] = (rem[i + j] - c * gj) % p
    rem = [x % p for x in rem[:dg]] or [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(quot), tuple(rem)


def is_irreducible(f: Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg/2``."""
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not any(poly_divmod(f, g, p)[1]):
                return False
    return True


@lru_cache(maxsize=None)
def irreducibles(p: int, max_degree: int) -> tuple[Poly, ...]:
    """Monic irreducibles over F_p of degree ``1..max_degree``, ascending degree."""
    if not is_prime(p):
        raise ValueError(f"brute-force polynomial arithmetic needs a prime, got {p}")
    out: list[Poly] = []
    for d in range(1, max_degree + 1):
        small = [g for g in out if 2 * (len(g) - 1) <= d]
        for f in monic_polys(p, d):
            if all(any(poly_divmod(f, g, p)[1]) for g in small):
                out.append(f)
    return tuple(out)


def factor_type(f: Poly, p: int) -> CycleType:
    """Degrees of the irreducible factors of monic ``f`` (with multiplicity)."""
    n = len(f) - 1
    parts: list[int] = []
    rest = f
    for g in irreducibles(p, max(n // 2, 1)):
        dg = len(g) - 1
        if 2 * dg > len(rest) - 1:
            break
        while len(rest) - 1 >= dg:
            quot, rem = poly_divmod(rest, g, p)
            if any(rem):
                break
            parts.append(dg)
            rest = quot
    if len(rest) > 1:
        # no factor of degree <= deg/2 remains, so what is left is irreducible
        parts.append(len(rest) - 1)
    return CycleType.from_parts(parts)


# -- class measures ----------------------------------------------------------------

def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def class_measure(m: PermMeasure) -> ClassMeasure:
    """Lump a measure on S_n by cycle type."""
    out: Counter = Counter()
    for w, c in m.coeffs.items():
        out[cycle_type(w)] += c
    return ClassMeasure(m.n, out)


def _count_polys(n: int, q: int, nonzero_constant: bool) -> dict[CycleType, int]:
    out = {}
    for lam in partitions(n):
        t = CycleType.from_parts(lam)
        total = 1
        for i, ni in enumerate(t, start=1):
            if ni:
                irr = num_irreducibles(q, i) - (1 if nonzero_constant and i == 1 else 0)
                total *= comb(irr + ni - 1, ni)
        if total:
            out[t] = total
    return out


def _brute_polys(n: int, p: int, constraint: str) -> dict[CycleType, int]:
    out: Counter = Counter()
    for f in monic_polys(p, n):
        if constraint == "nonzero_constant" and f[0] == 0:
            continue
        if constraint == "constant_one" and f[0] != 1:
            continue
        out[factor_type(f, p)] += 1
    return dict(out)


def poly_class_measure(n: int, q: int, constraint: str = "all",
                       method: str = "count") -> ClassMeasure:
    """
    Law of the factorization type of a uniform monic degree-``n`` polynomial
    over F_q, restricted by ``constraint``.  ``method="count"`` multiplies
    multiset counts of irreducibles; ``method="brute"`` factors every
    polynomial (prime ``q`` only).
    """
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    if n < 1:
        raise ValueError("degree must be positive")
    if method == "count":
        if constraint == "constant_one":
            raise ValueError("constant_one has no counting shortcut; use method='brute'")
        counts = _count_polys(n, q, constraint == "nonzero_constant")
    elif method == "brute":
        if not is_prime(q):
            raise ValueError(f"brute force needs prime q, got {q}")
        counts = _brute_polys(n, q, constraint)
    else:
        raise ValueError(f"unknown method {method!r}")
    total = sum(counts.values())
    expected = {"all": q ** n, "nonzero_constant": q ** n - q ** (n - 1),
                "constant_one": q ** (n - 1)}[constraint]
    if total != expected:
        raise ArithmeticError(f"counted {total} polynomials, expected {expected}")
    return ClassMeasure(n, {t: Fraction(c, total) for t, c in counts.items()})


def expected_fixed_points(n: int, k: int, law: str = "riffle_cut",
                          enumerate_: bool = False) -> Fraction:
    """
    Expected number of fixed points after a k-riffle shuffle (``law="riffle"``)
    or a k-riffle shuffle followed by a cut (``law="riffle_cut"``).  The
    formula path returns ``1 + 1/k + ... + 1/k^(n-1)`` and ``1`` respectively;
    ``enumerate_=True`` sums ``M(w) n_1(w)`` over S_n instead.
    """
    if law not in ("riffle", "riffle_cut"):
        raise ValueError(f"unknown law {law!r}")
    if enumerate_:
        check_cap(n)
        m = riffle_measure(n, k) if law == "riffle" else shuffle_then_cut_measure(n, k)
        return sum((c * sum(1 for i, x in enumerate(w, 1) if i == x)
                    for w, c in m.coeffs.items()), Fraction(0))
    if law == "riffle_cut":
        return Fraction(1)
    return sum((Fraction(1, k ** j) for j in range(n)), Fraction(0))


# -- generating-function identities ------------------------------------------------

def necklace_exponent(k: int, i: int, shift: int = 1) -> Fraction:
    """``(1/i) sum_{d|i} mu(d) (k^(i/d) - shift)``."""
    return Fraction(sum(mobius(d) * (k ** (i // d) - shift) for d in divisors(i)), i)


def _cycle_ring(max_weight: int, with_u: bool) -> SeriesRing:
    names = [f"a{i}" for i in range(1, max_weight + 1)]
    if with_u:
        return SeriesRing(names + ["u"], weights={**{v: 0 for v in names}, "u": 1},
                          max_degree=max_weight, caps={v: max_weight for v in names})
    return SeriesRing(names, weights={f"a{i}": i for i in range(1, max_weight + 1)},
                      max_degree=max_weight)


def _riffle_cut_cycle_sum(ring: SeriesRing, k: int, max_n: int, scale_u: bool,
                          start: int) -> list[Series]:
    """``Z(cs)`` on ``S_N`` for ``N = start..max_n``, optionally times ``u^N``."""
    out = []
    for big_n in range(start, max_n + 1):
        z = cycle_index(shuffle_then_cut_measure(big_n, k), ring)
        if scale_u:
            z = z * ring.monomial({"u": big_n})
        out.append(z)
    return out


def cyc_identity_check(k: int, degree_cap: int) -> dict[str, Fraction]:
    """
    Compare, coefficient by coefficient up to ``degree_cap``, the cycle-index
    generating functions of riffle-then-cut (assembled from the closed-form
    measures) with their product formulas:

    ``cyc``       1 + sum_{N>=2} Z(cs_N)/k
                  = 1 - 1/(k-1) - a1/k + (1/(k-1)) prod_i (1 - a_i/k^i)^(-M_i)
    ``others``    1 + ((k-1)/k) sum_{N>=1} u^N Z(cs_N) = prod_i (1 - a_i u^i/k^i)^(-M_i)
    ``all_ones``  the same at all a_i = 1: 1 + (k-1)u/(k(1-u))
    ``others_neg_binomial``  the (1-u)/(1-u/k) normalised form
    ``others_limit``         the (1-u)/(1-1/k) rearranged form

    with ``M_i = (1/i) sum_{d|i} mu(d)(k^(i/d) - 1)``.  Returns the maximum
    absolute coefficient discrepancy of each identity.
    """
    if k < 2:
        raise ValueError("the identities need k >= 2")
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2 to reach a nontrivial coefficient")
    report: dict[str, Fraction] = {}
    kk = Fraction(k)

    ring = _cycle_ring(degree_cap, with_u=False)
    lhs = ring.one() + sum(_riffle_cut_cycle_sum(ring, k, degree_cap, False, 2),
                           ring.zero()) * (1 / kk)
    prod = ring.one()
    for i in range(1, degree_cap + 1):
        base = 1 - ring.var(f"a{i}") * (1 / kk ** i)
        prod = prod * base.power(-necklace_exponent(k, i))
    rhs = 1 - 1 / (kk - 1) - ring.var("a1") * (1 / kk) + prod * (1 / (kk - 1))
    report["cyc"] = lhs.max_abs_difference(rhs)

    ring = _cycle_ring(degree_cap, with_u=True)
    u = ring.var("u")
    zsum = sum(_riffle_cut_cycle_sum(ring, k, degree_cap, True, 1), ring.zero())
    lhs = 1 + zsum * ((kk - 1) / kk)
    prod = ring.one()
    ratio = ring.one()
    for i in range(1, degree_cap + 1):
        expo = necklace_exponent(k, i)
        ui = ring.monomial({"u": i}, 1 / kk ** i)
        prod = prod * (1 - ui * ring.var(f"a{i}")).power(-expo)
        ratio = ratio * ((1 - ui) / (1 - ui * ring.var(f"a{i}"))).power(expo)
    report["others"] = lhs.max_abs_difference(prod)

    ones = prod
    for i in range(1, degree_cap + 1):
        ones = ones.substitute(f"a{i}", 1)
    report["all_ones"] = ones.max_abs_difference(1 + u * (kk - 1) / (kk * (1 - u)))

    lhs = (1 - u) / (1 - u / kk) + zsum * ((kk - 1) * (1 - u) / (kk - u))
    report["others_neg_binomial"] = lhs.max_abs_difference(ratio)

    lhs = (1 - u) / (1 - 1 / kk) + zsum * (1 - u)
    rhs = (1 - u / kk) / (1 - 1 / kk) * ratio
    report["others_limit"] = lhs.max_abs_difference(rhs)
    return report


def unique_factorization_check(k: int, degree: int) -> Fraction:
    """``prod_i (1 - u^i/k^i)^(-N_k(i)) = 1/(1-u)`` up to ``u^degree``."""
    ring = SeriesRing(["u"], max_degree=degree)
    u = ring.var("u")
    prod = ring.one()
    for i in range(1, degree + 1):
        prod = prod * (1 - (u ** i) * Fraction(1, k ** i)).power(-num_irreducibles(k, i))
    return prod.max_abs_difference((1 - u).inverse())
