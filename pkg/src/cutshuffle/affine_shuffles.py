"""
Type A affine k-shuffles on S_n.

Four exact descriptions are implemented; each computes a count from the
statistics of ``w`` and assigns ``count / k^(n-1)`` to ``w^-1``:

* ``vectors``     integer vectors with sum 0, weakly decreasing, spread at
                  most ``k``, strict at descents and strict spread when
                  ``w(n) > w(1)``
* ``partitions``  partitions in an ``(n-1) x (k - cd)`` box whose size is
                  ``-maj mod n``
* ``ramanujan``   a divisor sum of binomials times Ramanujan sums
* ``qbinom``      coefficients of ``q^(rn)`` in ``q^maj [k+n-cd-1, n-1]_q``

There is also a physical sampler for affine 2-shuffles.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Iterator

from .exact_algebra import PermMeasure
from .perm_core import CapError, Perm, descents, enumerate_sn, inverse, perm_stats

__all__ = [
    "METHODS", "VECTOR_BUDGET", "mobius", "divisors", "euler_phi",
    "ramanujan_sum", "ramanujan_sum_exponential", "box_partitions",
    "partition_size_counts", "q_binomial", "affine_count", "affine_measure",
    "affine2_sample", "affine2_split", "affine2_exact_law",
]

METHODS = ("vectors", "partitions", "ramanujan", "qbinom")

# largest number of gap vectors 'vectors' may scan for one descent pattern
VECTOR_BUDGET = 2_000_000


# -- arithmetic functions ----------------------------------------------------

def divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def euler_phi(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


def ramanujan_sum(r: int, m: int) -> int:
    """``C_r(m) = sum_{d | gcd(r, m)} mu(r/d) d`` (von Sterneck form)."""
    if r < 1:
        raise ValueError(f"ramanujan_sum needs r >= 1, got {r}")
    g = gcd(r, m)  # gcd(r, 0) == r
    return sum(mobius(r // d) * d for d in divisors(g))


def ramanujan_sum_exponential(r: int, m: int, dps: int = 50) -> complex:
    """``sum_{l < r, gcd(l, r) = 1} exp(2 pi i l m / r)`` in high precision."""
    import mpmath

    with mpmath.workdps(dps):
        total = mpmath.mpc(0)
        for l in range(1, r + 1):
            if gcd(l, r) == 1:
                total += mpmath.expjpi(mpmath.mpf(2 * l * m) / r)
        return complex(total)


# -- partitions in a box and q-binomials -------------------------------------

def box_partitions(max_parts: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most ``max_parts`` parts, each at most ``max_size``."""
    if max_parts < 0 or max_size < 0:
        return

    def rec(prefix: list[int], bound: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) == max_parts:
            return
        for part in range(1, bound + 1):
            prefix.append(part)
            yield from rec(prefix, part)
            prefix.pop()

    yield from rec([], max_size)


@lru_cache(maxsize=None)
def partition_size_counts(max_parts: int, max_size: int) -> tuple[int, ...]:
    """``counts[s]`` = number of box partitions of total ``s``."""
    if max_parts < 0 or max_size < 0:
        return ()
    sizes = Counter(sum(p) for p in box_partitions(max_parts, max_size))
    return tuple(sizes.get(s, 0) for s in range(max_parts * max_size + 1))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> tuple[int, ...]:
    """
    Coefficients of ``(1-q)...(1-q^a) / ((1-q)...(1-q^b) (1-q)...(1-q^(a-b)))``
    from the product formula; empty (zero polynomial) when ``b > a`` or ``b < 0``.
    """
    if b < 0 or a < 0 or b > a:
        return ()

    def factorial_poly(m: int) -> list[int]:
        out = [1]
        for i in range(1, m + 1):
            out = _poly_mul(out, [1] + [0] * (i - 1) + [-1])
        return out

    num = factorial_poly(a)
    den = _poly_mul(factorial_poly(b), factorial_poly(a - b))
    return tuple(_poly_exact_div(num, den))


# -- the four counts ---------------------------------------------------------

@lru_cache(maxsize=None)
def _vector_count(n: int, k: int, desc: tuple[int, ...], wrap: bool) -> int:
    # v is fixed by its gaps g_i = v_i - v_{i+1} >= 0 (>= 1 at descents):
    # sum v = 0 forces n v_n = -sum_j j g_j, and v_1 - v_n = sum g <= k
    # (< k with a cyclic descent at n).  Hence |v_i| <= k for all i, well
    # inside the enumeration window [-k n, k n].
    spread = k - 1 if wrap else k
    lows = [1 if i in desc else 0 for i in range(1, n)]
    if sum(lows) > spread:
        return 0
    if comb(spread - sum(lows) + n - 1, n - 1) > VECTOR_BUDGET:
        raise CapError(f"vector enumeration for n={n}, k={k} exceeds budget {VECTOR_BUDGET}")
    count = 0

    def rec(i: int, used: int, weighted: int, gaps: list[int]) -> None:
        nonlocal count
        if i == n:
            if weighted % n == 0:
                vn = -weighted // n
                v = [vn + sum(gaps[j:]) for j in range(n - 1)] + [vn]
                assert sum(v) == 0 and v[0] <= k * n and v[-1] >= -k * n
                count += 1
            return
        for g in range(lows[i - 1], spread - used + 1):
            gaps.append(g)
            rec(i + 1, used + g, weighted + i * g, gaps)
            gaps.pop()

    rec(1, 0, 0, [])
    return count


def _partition_count(n: int, k: int, cd: int, maj: int) -> int:
    box = k - cd
    if box < 0:
        return 0
    sizes = partition_size_counts(n - 1, box)
    target = (-maj) % n
    return sum(c for s, c in enumerate(sizes) if s % n == target)


def _partition_count_conjugate(n: int, k: int, cd: int, maj: int) -> int:
    box = k - cd
    if box < 0:
        return 0
    sizes = partition_size_counts(box, n - 1)
    target = (-maj) % n
    return sum(c for s, c in enumerate(sizes) if s % n == target)


def _ramanujan_value(n: int, k: int, cd: int, maj: int) -> Fraction:
    """Probability (already divided by ``k^(n-1)``)."""
    b = k - cd
    if b > 0:
        total = sum(
            comb((n + b - r) // r, b // r) * ramanujan_sum(r, -maj)
            for r in divisors(gcd(n, b))
        )
        return Fraction(total, n * k ** (n - 1))
    if b == 0 and maj % n == 0:
        return Fraction(1, k ** (n - 1))
    return Fraction(0)


def _qbinom_count(n: int, k: int, cd: int, maj: int) -> int:
    poly = q_binomial(k + n - cd - 1, n - 1)
    if not poly:
        return 0
    top = maj + len(poly) - 1
    # only exponents up to maj + deg can be hit, so r stops at top // n
    return sum(
        poly[r * n - maj]
        for r in range(0, top // n + 1)
        if 0 <= r * n - maj < len(poly)
    )


def affine_count(w: Perm, k: int, method: str = "partitions") -> Fraction:
    """Probability that the affine k-shuffle yields ``w^-1``."""
    n = len(w)
    if n < 2:
        raise ValueError("affine shuffles need n >= 2")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    st = perm_stats(w)
    scale = k ** (n - 1)
    if method == "vectors":
        wrap = w[-1] > w[0]
        return Fraction(_vector_count(n, k, tuple(descents(w)), wrap), scale)
    if method == "partitions":
        return Fraction(_partition_count(n, k, st.cd, st.maj), scale)
    if method == "partitions_conjugate":
        return Fraction(_partition_count_conjugate(n, k, st.cd, st.maj), scale)
    if method == "ramanujan":
        return _ramanujan_value(n, k, st.cd, st.maj)
    if method == "qbinom":
        return Fraction(_qbinom_count(n, k, st.cd, st.maj), scale)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def affine_measure(n: int, k: int, method: str = "partitions") -> PermMeasure:
    """The affine k-shuffle as a probability measure (law of the arrangement)."""
    coeffs = {}
    for w in enumerate_sn(n):
        p = affine_count(w, k, method)
        if p:
            coeffs[inverse(w)] = p
    return PermMeasure(n, coeffs, probability=True, validate=False)


# -- physical affine 2-shuffle -------------------------------------------------

def affine2_split(m: int, j: int) -> tuple[list[int], list[int]]:
    """
    Packets for split ``2j`` of the deck ``1..m`` (top first): the middle
    ``m - 2j`` cards, and the bottom ``j`` cards placed on top of the top
    ``j`` cards.
    """
    if not 0 <= 2 * j <= m:
        raise ValueError(f"split 2j={2 * j} out of range for deck size {m}")
    deck = list(range(1, m + 1))
    second = deck[m - j:] + deck[:j]
    first = deck[j:m - j]
    return first, second


def affine2_sample(m: int, seed: int | random.Random) -> Perm:
    """
    Affine 2-shuffle of a deck of size ``m``: choose ``2j`` with probability
    ``C(m, 2j) / 2^(m-1)``, form the two packets, then drop cards with
    probability proportional to packet size.
    """
    if m < 2:
        raise ValueError("deck size must be at least 2")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    r = rng.randrange(2 ** (m - 1))
    j = 0
    while r >= comb(m, 2 * j):
        r -= comb(m, 2 * j)
        j += 1
    first, second = affine2_split(m, j)
    out = []
    a, b = len(first), len(second)
    ia = ib = 0
    while a or b:
        if rng.randrange(a + b) < a:
            out.append(first[ia])
            ia += 1
            a -= 1
        else:
            out.append(second[ib])
            ib += 1
            b -= 1
    return tuple(out)


def affine2_exact_law(m: int) -> PermMeasure:
    """Exact law of :func:`affine2_sample` by enumerating splits and interleavings."""
    coeffs: dict[Perm, Fraction] = {}
    for j in range(m // 2 + 1):
        first, second = affine2_split(m, j)
        pj = Fraction(comb(m, 2 * j), 2 ** (m - 1))
        slots = list(combinations(range(m), len(second)))
        for pos in slots:
            out = [0] * m
            it1, it2 = iter(first), iter(second)
            chosen = set(pos)
            for i in range(m):
                out[i] = next(it2) if i in chosen else next(it1)
            w = tuple(out)
            coeffs[w] = coeffs.get(w, 0) + pj / len(slots)
    return PermMeasure(m, coeffs, probability=True, validate=False)
