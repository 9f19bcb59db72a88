"""
Riffle shuffles, cuts, and riffle-then-cut as exact measures on S_n.

Measures are laws of the resulting arrangement ``w`` (``w(i)`` is the label
of the card in position ``i``).  The cut is the uniform measure on the
powers of ``zeta = (1 2 ... n)`` and ``shuffle_then_cut_measure`` is the
group-algebra product ``c s``, i.e. ``convolve(cut, riffle)``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exact_algebra import PermMeasure, convolve, total_variation
from .perm_core import (
    Perm, check_cap, cyclic_descents, enumerate_sn, eulerian_numbers,
    inverse, num_descents, rotation,
)

__all__ = [
    "riffle_coefficient", "riffle_cut_coefficient",
    "riffle_measure", "cut_measure", "shuffle_then_cut_measure",
    "cut_then_shuffle_measure", "gsr_sample", "gsr_piles",
    "cyclic_descent_counts", "tv_riffle_table", "tv_riffle_cut_table",
    "brute_cd_counts", "sequence_measure", "random_sequence", "canmove_check",
    "cut_order_gap", "deleted_cuts_gap",
]


def riffle_coefficient(n: int, k: int, w: Perm) -> Fraction:
    return Fraction(comb(n + k - num_descents(inverse(w)) - 1, n), k ** n)


def riffle_cut_coefficient(n: int, k: int, w: Perm) -> Fraction:
    return Fraction(comb(n + k - cyclic_descents(inverse(w)) - 1, n - 1), n * k ** (n - 1))


def _check_params(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")


def riffle_measure(n: int, k: int) -> PermMeasure:
    """GSR k-shuffle: ``C(n + k - d(w^-1) - 1, n) / k^n``."""
    _check_params(n, k)
    return PermMeasure.from_function(n, lambda w: riffle_coefficient(n, k, w), probability=True)


def cut_measure(n: int) -> PermMeasure:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = Fraction(1, n)
    return PermMeasure(n, {rotation(n, j): p for j in range(n)}, probability=True)


def shuffle_then_cut_measure(n: int, k: int) -> PermMeasure:
    """Closed form ``C(n + k - cd(w^-1) - 1, n - 1) / (n k^(n-1))``."""
    _check_params(n, k)
    return PermMeasure.from_function(n, lambda w: riffle_cut_coefficient(n, k, w),
                                     probability=True)


def cut_then_shuffle_measure(n: int, k: int) -> PermMeasure:
    """``convolve(riffle, cut)``; no closed form is used."""
    return convolve(riffle_measure(n, k), cut_measure(n))


def gsr_piles(n: int, k: int, rng: random.Random) -> list[int]:
    """Multinomial(n; 1/k, ..., 1/k) pile sizes."""
    sizes = [0] * k
    for _ in range(n):
        sizes[rng.randrange(k)] += 1
    return sizes


def gsr_sample(n: int, k: int, seed: int | random.Random) -> Perm:
    """
    One Gilbert-Shannon-Reeds k-shuffle of the deck ``1..n`` (top to bottom).

    The deck is cut into consecutive packets with multinomial sizes and cards
    are dropped one at a time, from packet ``i`` with probability
    proportional to its current size.  Returns the arrangement top to bottom,
    whose law is :func:`riffle_measure`.
    """
    _check_params(n, k)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    sizes = gsr_piles(n, k, rng)
    packets: list[list[int]] = []
    start = 1
    for s in sizes:
        packets.append(list(range(start, start + s)))
        start += s
    heads = [0] * k
    remaining = sizes[:]
    left = n
    out = []
    while left:
        r = rng.randrange(left)
        i = 0
        while r >= remaining[i]:
            r -= remaining[i]
            i += 1
        out.append(packets[i][heads[i]])
        heads[i] += 1
        remaining[i] -= 1
        left -= 1
    return tuple(out)


def cyclic_descent_counts(n: int) -> list[int]:
    """
    ``[B_{n,1}, ..., B_{n,n-1}]`` (permutations of S_n with ``i`` cyclic
    descents) without enumeration, by solving the triangular system
    ``x^(n-1) = sum_i (B_{n,i}/n) C(n + x - i - 1, n - 1)`` at
    ``x = 1, ..., n - 1``.
    """
    if n < 2:
        raise ValueError("cyclic descent counts need n >= 2")
    b: list[Fraction] = []
    for x in range(1, n):
        # C(n+x-i-1, n-1) vanishes for i > x and equals 1 at i = x
        acc = Fraction(x ** (n - 1))
        for i, bi in enumerate(b, start=1):
            acc -= bi / n * comb(n + x - i - 1, n - 1)
        b.append(acc * n)
    out = []
    for v in b:
        if v.denominator != 1 or v < 0:
            raise ArithmeticError(f"non-integral cyclic descent count {v}")
        out.append(int(v))
    assert sum(out) == factorial(n)
    return out


def _tv_from_classes(counts: Sequence[int], probs: Sequence[Fraction], total: int) -> Fraction:
    u = Fraction(1, total)
    return sum((c * abs(p - u) for c, p in zip(counts, probs)), Fraction(0)) / 2


def tv_riffle_table(n: int, k: int, max_shuffles: int, with_cut: bool = False,
                    brute_force: bool = False) -> list[Fraction]:
    """
    Entry ``m - 1`` is the total variation distance to uniform after ``m``
    k-shuffles, i.e. of the ``k^m``-shuffle, for ``m = 1..max_shuffles``.

    Permutations are aggregated by descent count (Eulerian numbers from the
    recurrence), so large decks such as ``n = 52`` are cheap.  With
    ``with_cut`` the table is for riffle-then-cut, aggregated by cyclic
    descent count.  ``brute_force`` enumerates S_n instead, as an oracle.
    """
    _check_params(n, k)
    if max_shuffles < 0:
        raise ValueError("max_shuffles must be nonnegative")
    if brute_force:
        check_cap(n)
        law = shuffle_then_cut_measure if with_cut else riffle_measure
        uni = PermMeasure.uniform(n)
        return [total_variation(law(n, k ** m), uni) for m in range(1, max_shuffles + 1)]
    total = factorial(n)
    out = []
    if with_cut:
        if n == 1:
            return [Fraction(0)] * max_shuffles
        counts = cyclic_descent_counts(n)
        for m in range(1, max_shuffles + 1):
            kk = k ** m
            probs = [Fraction(comb(n + kk - i - 1, n - 1), n * kk ** (n - 1))
                     for i in range(1, n)]
            out.append(_tv_from_classes(counts, probs, total))
        return out
    counts = eulerian_numbers(n)
    for m in range(1, max_shuffles + 1):
        kk = k ** m
        probs = [Fraction(comb(kk + n - i, n), kk ** n) for i in range(1, n + 1)]
        out.append(_tv_from_classes(counts, probs, total))
    return out


def tv_riffle_cut_table(n: int, k: int, max_shuffles: int) -> list[Fraction]:
    return tv_riffle_table(n, k, max_shuffles, with_cut=True)


def brute_cd_counts(n: int) -> list[int]:
    """Enumeration oracle for :func:`cyclic_descent_counts`."""
    counts = [0] * (n - 1)
    for w in enumerate_sn(n):
        counts[cyclic_descents(w) - 1] += 1
    return counts


def sequence_measure(n: int, ops: Sequence[tuple]) -> PermMeasure:
    """
    Law of the arrangement after applying ``ops`` in order, each op being
    ``("shuffle", k)`` or ``("cut",)``.  Later operations multiply on the left.
    """
    out = PermMeasure.identity(n)
    for op in ops:
        if op[0] == "shuffle":
            step = riffle_measure(n, op[1])
        elif op[0] == "cut":
            step = cut_measure(n)
        else:
            raise ValueError(f"unknown operation {op!r}")
        out = convolve(step, out)
    return out.as_probability()


def random_sequence(rng: random.Random, length: int, ks: Sequence[int] = (2, 3),
                    cut_prob: float = 0.5) -> list[tuple]:
    ops: list[tuple] = []
    for _ in range(length):
        ops.append(("cut",) if rng.random() < cut_prob else ("shuffle", rng.choice(ks)))
    return ops


def canmove_check(n: int, k: int, max_power: int = 3) -> dict[str, bool]:
    """``csc = cs`` and ``(cs)^h = c s^h`` for ``h <= max_power``."""
    s, c = riffle_measure(n, k), cut_measure(n)
    cs = convolve(c, s)
    out = {"csc=cs": convolve(cs, c) == cs}
    power = cs
    for h in range(2, max_power + 1):
        power = convolve(power, cs)
        out[f"(cs)^{h}=cs^{h}"] = power == shuffle_then_cut_measure(n, k ** h)
    return out


def cut_order_gap(n: int, k: int) -> Fraction:
    """``TV(S*C, U) - TV(C*S, U)``: shuffle-then-cut is never further from uniform."""
    uni = PermMeasure.uniform(n)
    return (total_variation(cut_then_shuffle_measure(n, k), uni)
            - total_variation(shuffle_then_cut_measure(n, k), uni))


def deleted_cuts_gap(n: int, ops: Sequence[tuple]) -> Fraction:
    """
    ``TV(W, U)`` on S_n minus ``TV(W', U)`` on S_{n-1}, where ``W'`` is
    ``ops`` with the cuts removed.
    """
    w = sequence_measure(n, ops)
    w_prime = sequence_measure(n - 1, [op for op in ops if op[0] != "cut"])
    return (total_variation(w, PermMeasure.uniform(n))
            - total_variation(w_prime, PermMeasure.uniform(n - 1)))
