"""
Eulerian idempotents of Q S_n, their signed versions, and the Whitehouse
idempotents ``f_{n+1}^j = Lambda_{n+1} * signed(e_n^j)`` in Q S_{n+1}.

Scalars in the group algebra are multiples of the point mass at the
identity; products are :func:`~cutshuffle.exact_algebra.convolve`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from .exact_algebra import PermMeasure, convolve, cycle_index, cycle_index_ring
from .perm_core import (
    CapError, cyclic_descents, inverse, num_descents, rotation, sign,
)
from .polyfactor import necklace_exponent
from .shuffle_measures import shuffle_then_cut_measure

__all__ = [
    "IDEMPOTENT_CAP", "IdempotentFamily", "eulerian_mu", "split_sum",
    "shuffle_element", "eulerian_idempotents", "cyclic_lambda",
    "signed_and_whitehouse", "family_report", "garsia_form_check",
    "hanlon_check", "signed_cycle_index_check", "form_vs_riffle_cut_check",
]

# group-algebra products cost about (n!)^2; 6! is the largest size used
IDEMPOTENT_CAP = 6


class IdempotentFamily(NamedTuple):
    n: int
    elements: tuple[PermMeasure, ...]  # elements[j - 1] is the j-th member

    def member(self, j: int) -> PermMeasure:
        return self.elements[j - 1]


def _cap(n: int) -> None:
    if n > IDEMPOTENT_CAP:
        raise CapError(f"group-algebra computation in S_{n} exceeds cap S_{IDEMPOTENT_CAP}")


def eulerian_mu(j: int) -> int:
    return 2 ** j - 2


def split_sum(n: int, i: int) -> PermMeasure:
    """Sum of the ``C(n, i)`` permutations increasing on ``1..i`` and on ``i+1..n``."""
    coeffs = {}
    for head in combinations(range(1, n + 1), i):
        tail = tuple(x for x in range(1, n + 1) if x not in head)
        coeffs[head + tail] = 1
    return PermMeasure(n, coeffs, validate=False)


def shuffle_element(n: int) -> PermMeasure:
    """``s_n = sum_{i=1}^{n-1} s_{i,n-i}``."""
    out = PermMeasure(n, {}, validate=False)
    for i in range(1, n):
        out = out + split_sum(n, i)
    return out


@lru_cache(maxsize=None)
def eulerian_idempotents(n: int) -> IdempotentFamily:
    """``e_n^j = prod_{i != j} (s_n - mu_i) / (mu_j - mu_i)`` for ``j = 1..n``."""
    if n < 1:
        raise ValueError("n must be positive")
    _cap(n)
    s = shuffle_element(n)
    one = PermMeasure.identity(n)
    members = []
    for j in range(1, n + 1):
        e = one
        for i in range(1, n + 1):
            if i == j:
                continue
            factor = (s - one.scale(eulerian_mu(i))).scale(
                Fraction(1, eulerian_mu(j) - eulerian_mu(i)))
            e = convolve(e, factor)
        members.append(PermMeasure(n, e.coeffs, validate=False))
    return IdempotentFamily(n, tuple(members))


def cyclic_lambda(m: int) -> PermMeasure:
    """``Lambda_m = (1/m) sum_{i<m} sgn(lambda^i) lambda^i`` with ``lambda = (1 2 ... m)``."""
    coeffs = {}
    for i in range(m):
        w = rotation(m, i)
        coeffs[w] = Fraction(sign(w), m)
    return PermMeasure(m, coeffs, validate=False)


@lru_cache(maxsize=None)
def signed_and_whitehouse(n: int) -> tuple[IdempotentFamily, PermMeasure, IdempotentFamily]:
    """
    ``(signed e_n^j embedded in S_{n+1}, Lambda_{n+1}, f_{n+1}^j)``.  The
    embedding fixes the letter ``n + 1``.
    """
    _cap(n + 1)
    fam = eulerian_idempotents(n)
    signed = tuple(e.signed().embed(n + 1) for e in fam.elements)
    lam = cyclic_lambda(n + 1)
    white = tuple(convolve(lam, e) for e in signed)
    return IdempotentFamily(n + 1, signed), lam, IdempotentFamily(n + 1, white)


def family_report(elements: tuple[PermMeasure, ...], orthogonal: bool = True,
                  partition_of_identity: bool = True) -> dict[str, bool]:
    """Idempotency, pairwise orthogonality and sum-to-identity, checked exactly."""
    n = elements[0].n
    zero = PermMeasure(n, {}, validate=False)
    rep = {"idempotent": all(convolve(e, e) == e for e in elements)}
    if orthogonal:
        rep["orthogonal"] = all(
            convolve(a, b) == zero
            for i, a in enumerate(elements) for j, b in enumerate(elements) if i != j
        )
    if partition_of_identity:
        total = zero
        for e in elements:
            total = total + e
        rep["sum_identity"] = total == PermMeasure.identity(n)
    return rep


def _weighted_sum(elements: tuple[PermMeasure, ...], k: int) -> PermMeasure:
    out = PermMeasure(elements[0].n, {}, validate=False)
    for j, e in enumerate(elements, start=1):
        out = out + e.scale(k ** j)
    return out


def garsia_form_check(n: int, k_values) -> dict[str, Fraction]:
    """
    Largest coefficient discrepancy, over ``k`` in ``k_values``, of

    * ``sum_j k^j e_n^j  =  sum_w C(n + k - d(w) - 1, n) w``
    * ``sum_j k^j Lambda_{n+1} signed(e_n^j)  =  sum_w sgn(w) C(k + n - cd(w), n)/(n+1) w``
      (``w`` in S_{n+1}, ``cd`` computed there)
    """
    fam = eulerian_idempotents(n)
    _, _, white = signed_and_whitehouse(n)
    worst = {"garsia": Fraction(0), "form": Fraction(0)}
    for k in k_values:
        lhs = _weighted_sum(fam.elements, k)
        rhs = PermMeasure.from_function(n, lambda w: comb(n + k - num_descents(w) - 1, n))
        worst["garsia"] = max(worst["garsia"], _max_diff(lhs, rhs))
        lhs = _weighted_sum(white.elements, k)
        rhs = PermMeasure.from_function(
            n + 1, lambda w: Fraction(sign(w) * comb(k + n - cyclic_descents(w), n), n + 1))
        worst["form"] = max(worst["form"], _max_diff(lhs, rhs))
    return worst


def _max_diff(a: PermMeasure, b: PermMeasure) -> Fraction:
    d = a - b
    return max((abs(c) for c in d.coeffs.values()), default=Fraction(0))


def hanlon_check(n_max: int, k_values) -> dict[int, Fraction]:
    """
    ``1 + sum_{n>=1} sum_i k^i Z(e_n^i) = prod_i (1 - a_i)^(-N_k(i))`` through
    weighted degree ``n_max``; returns the discrepancy for each ``k``.
    """
    _cap(n_max)
    ring = cycle_index_ring(n_max, max_degree=n_max)
    out = {}
    for k in k_values:
        lhs = ring.one()
        for n in range(1, n_max + 1):
            lhs = lhs + cycle_index(_weighted_sum(eulerian_idempotents(n).elements, k), ring)
        rhs = ring.one()
        for i in range(1, n_max + 1):
            rhs = rhs * (1 - ring.var(f"a{i}")).power(-necklace_exponent(k, i, shift=0))
        out[k] = lhs.max_abs_difference(rhs)
    return out


def signed_cycle_index_check(n: int) -> bool:
    """``sum_i Z(signed e_n^i) = a_1^n``."""
    ring = cycle_index_ring(n)
    total = ring.zero()
    for e in eulerian_idempotents(n).elements:
        total = total + cycle_index(e.signed(), ring)
    return total == ring.monomial({"a1": n})


def form_vs_riffle_cut_check(n: int, k: int) -> bool:
    """
    ``sgn(w) * [coefficient of w in sum_j k^j f_{n+1}^j] / k^n`` equals the
    riffle-then-cut probability of ``w^-1`` on S_{n+1}.
    """
    _, _, white = signed_and_whitehouse(n)
    weighted = _weighted_sum(white.elements, k)
    cs = shuffle_then_cut_measure(n + 1, k)
    transformed = PermMeasure(
        n + 1, {inverse(w): c * sign(w) / k ** n for w, c in weighted.coeffs.items()},
        validate=False)
    return transformed == PermMeasure(n + 1, cs.coeffs, validate=False)
