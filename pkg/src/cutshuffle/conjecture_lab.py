"""
Exhaustive probes of the major-index equidistribution problem behind the
affine-shuffle cycle conjecture, plus the modular reciprocity statements.

Nothing here asserts the conjecture: reports carry a status per cell and
callers decide what a failure means.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from .affine_shuffles import affine_measure, divisors, mobius
from .exact_algebra import ClassMeasure
from .perm_core import (
    CycleType, check_cap, cycle_type, cyclic_descents, enumerate_sn, major_index,
)
from .polyfactor import class_measure, is_prime, is_prime_power
from .series import SeriesRing
from .shuffle_measures import shuffle_then_cut_measure

__all__ = [
    "largest_divisor_t", "Statement1Cell", "statement1_report", "statement1_tsv",
    "ClassComparison", "class_compare", "obvious_check", "lemma_divide_scan",
    "modular_reciprocity_count", "reciprocity_symmetric", "f_coefficient",
    "GRAND_FORMS", "grand_exponent", "grand_identity_check", "transposition_maj_poly", "odd_transposition_form",
    "even_transposition_form", "printed_even_transposition_form",
    "poly_divides", "odd_part",
]


def largest_divisor_t(n: int, cd: int) -> int:
    """Largest ``t | n`` with ``gcd(cd - 1, t) = 1``."""
    if n < 1 or cd < 1:
        raise ValueError(f"need n >= 1 and cd >= 1, got n={n}, cd={cd}")
    return max(t for t in divisors(n) if gcd(cd - 1, t) == 1)


# -- equidistribution cells ---------------------------------------------------------

@dataclass(frozen=True)
class Statement1Cell:
    cycle_type: CycleType
    cd: int
    t: int
    residues: tuple[int, ...]   # residues[r] = #{w in cell : maj(w) = r mod t}
    paper_proved: bool

    @property
    def size(self) -> int:
        return sum(self.residues)

    @property
    def status(self) -> str:
        if self.size == 0:
            return "vacuous"
        return "pass" if len(set(self.residues)) == 1 else "fail"


def _proved_class(t: CycleType) -> bool:
    # the identity class and the class of transpositions
    parts = t.parts
    return all(p == 1 for p in parts) or (parts.count(2) == 1 and max(parts) == 2)


def statement1_report(n: int) -> list[Statement1Cell]:
    """
    One cell per (cycle type, cd) with ``cd`` in ``1..n``: the tally of
    ``maj mod t`` over the permutations of that class with that many cyclic
    descents.  Empty cells are reported as vacuous.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, what="equidistribution scan")
    tallies: dict[tuple[CycleType, int], Counter] = defaultdict(Counter)
    types = set()
    for w in enumerate_sn(n):
        ct = cycle_type(w)
        types.add(ct)
        cd = max(cyclic_descents(w), 1)
        tallies[(ct, cd)][major_index(w) % largest_divisor_t(n, cd)] += 1
    cells = []
    for ct in sorted(types, key=lambda c: c.parts, reverse=True):
        for cd in range(1, n + 1):
            t = largest_divisor_t(n, cd)
            tally = tallies.get((ct, cd), Counter())
            cells.append(Statement1Cell(ct, cd, t, tuple(tally[r] for r in range(t)),
                                        _proved_class(ct)))
    return cells


def statement1_tsv(cells: Iterable[Statement1Cell]) -> str:
    lines = ["cycle_type\tcd\tt\tcounts\tstatus\tproved_case"]
    for c in cells:
        lines.append(f"{c.cycle_type}\t{c.cd}\t{c.t}\t{','.join(map(str, c.residues))}"
                     f"\t{c.status}\t{'yes' if c.paper_proved else 'no'}")
    return "\n".join(lines) + "\n"


# -- measure coincidence on classes -------------------------------------------------

@dataclass(frozen=True)
class ClassComparison:
    n: int
    q: int
    in_hypothesis: bool          # gcd(n, q - 1) == 1
    discrepancy: Fraction
    affine: ClassMeasure = field(repr=False)
    riffle_cut: ClassMeasure = field(repr=False)

    @property
    def label(self) -> str:
        return "in-hypothesis" if self.in_hypothesis else "out-of-hypothesis"


def class_compare(n: int, q: int, method: str = "partitions") -> ClassComparison:
    """Affine q-shuffle against q-shuffle-then-cut, lumped to cycle types."""
    aff = class_measure(affine_measure(n, q, method=method))
    cs = class_measure(shuffle_then_cut_measure(n, q))
    return ClassComparison(n, q, gcd(n, q - 1) == 1, aff.max_difference(cs), aff, cs)


def obvious_check(n: int, q: int) -> bool:
    """Pointwise equality of the two measures; requires ``n`` prime and ``q`` a power of ``n``."""
    if not is_prime(n):
        raise ValueError(f"n={n} is not prime")
    p = q
    while p > 1 and p % n == 0:
        p //= n
    if q < n or p != 1:
        raise ValueError(f"q={q} is not a power of n={n}")
    return affine_measure(n, q) == shuffle_then_cut_measure(n, q)


def lemma_divide_scan(n_max: int, q_max: int) -> dict[str, int]:
    """
    Over prime powers ``q <= q_max`` and ``n <= n_max`` with
    ``gcd(n, q - 1) = 1``, every ``r`` dividing ``n`` and ``q - cd`` divides
    ``largest_divisor_t(n, cd)``.  Returns counts of checked, skipped and
    failed cases.
    """
    out = {"checked": 0, "skipped": 0, "failed": 0}
    for q in range(2, q_max + 1):
        if not is_prime_power(q):
            continue
        for n in range(1, n_max + 1):
            if gcd(n, q - 1) != 1:
                out["skipped"] += 1
                continue
            for cd in range(1, n + 1):
                t = largest_divisor_t(n, cd)
                for r in divisors(n):
                    if (q - cd) % r == 0:
                        out["checked"] += 1
                        if t % r:
                            out["failed"] += 1
    return out


# -- modular reciprocity ------------------------------------------------------------

def modular_reciprocity_count(m: int, x: int, y: int) -> int:
    """Multisets of ``x`` elements of ``{0, ..., y-1}`` whose sum is ``m`` mod ``y``."""
    if x < 1 or y < 1:
        raise ValueError(f"need x, y >= 1, got x={x}, y={y}")
    # table[c][s]: multisets of size c using the values seen so far, sum = s mod y
    table = [[0] * y for _ in range(x + 1)]
    table[0][0] = 1
    for v in range(y):
        new = [row[:] for row in table]
        for c in range(x + 1):
            for s in range(y):
                if table[c][s]:
                    for extra in range(1, x - c + 1):
                        new[c + extra][(s + extra * v) % y] += table[c][s]
        table = new
    return table[x][m % y]


def reciprocity_symmetric(m: int, x: int, y: int) -> bool:
    return modular_reciprocity_count(m, x, y) == modular_reciprocity_count(m, y, x)


# -- the unsimplified generating-function identity ------------------------------------

def f_coefficient(n: int, k: int, d: int) -> int:
    """Coefficient of ``z^n`` in ``(1 + z + ... + z^(k-1))^d``."""
    poly = [1]
    for _ in range(d):
        new = [0] * (len(poly) + k - 1)
        for i, c in enumerate(poly):
            for j in range(k):
                new[i + j] += c
        poly = new
    return poly[n] if 0 <= n < len(poly) else 0


def _x_names(n_max: int) -> list[str]:
    return [f"x{i}" for i in range(1, n_max + 1)]


def _grand_lhs(n: int, k: int, n_max: int, q_cap: int) -> dict[tuple, Fraction]:
    ring = SeriesRing(["t", "q"] + _x_names(n_max), caps={"t": k, "q": q_cap})
    t, q = ring.var("t"), ring.var("q")
    perms = ring.zero()
    for w in enumerate_sn(n):
        exps = {"t": cyclic_descents(w), "q": major_index(w)}
        exps.update({f"x{i}": m for i, m in enumerate(cycle_type(w), start=1) if m})
        perms = perms + ring.monomial(exps)
    series = perms
    q_power = ring.one()
    for _ in range(n):
        q_power = q_power * q
        series = series * (1 - t * q_power).inverse()
    ti, qi = ring.index["t"], ring.index["q"]
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for e, c in series.terms.items():
        if e[ti] == k and e[qi] % n == 0:
            out[e[2:]] += c
    return {e: c for e, c in out.items() if c}


GRAND_FORMS = ("printed", "necklace")


def grand_exponent(m: int, k: int, i: int, form: str = "printed") -> Fraction:
    """
    Exponent of ``1/(1 - q^m x_i u^i)`` in the product side.

    ``printed``: ``(1/i) sum_{d|i} mu(d) f_{m,k,i/d}``.
    ``necklace``: ``(1/i) sum_{d|gcd(i,m)} mu(d) f_{m/d,k,i/d}``, the number of
    primitive necklaces of ``i`` beads with weights in ``0..k-1`` and total ``m``.
    """
    if form == "printed":
        total = sum(mobius(d) * f_coefficient(m, k, i // d) for d in divisors(i))
    elif form == "necklace":
        total = sum(mobius(d) * f_coefficient(m // d, k, i // d)
                    for d in divisors(i) if m % d == 0)
    else:
        raise ValueError(f"unknown form {form!r}; expected one of {GRAND_FORMS}")
    return Fraction(total, i)


def _grand_rhs(n: int, k: int, n_max: int, q_cap: int, form: str) -> dict[tuple, Fraction]:
    ring = SeriesRing(["u", "q"] + _x_names(n_max), caps={"u": n, "q": q_cap})
    u, q = ring.var("u"), ring.var("q")
    prod = ring.one()
    for i in range(1, n + 1):
        base = ring.var(f"x{i}") * u ** i
        for m in range(1, q_cap + 1):
            e = grand_exponent(m, k, i, form)
            if e:
                prod = prod * (1 - q ** m * base).power(-e)
    ui, qi = ring.index["u"], ring.index["q"]
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for e, c in prod.terms.items():
        if e[ui] == n and e[qi] % (k - 1) == 0:
            out[e[2:]] += c
    return {e: c for e, c in out.items() if c}


def grand_identity_check(n_max: int, k_max: int, q_cap: int = 12,
                         form: str = "printed") -> dict[tuple[int, int], Fraction]:
    """
    For ``1 <= n <= n_max`` and ``2 <= k <= k_max``, compare the coefficient
    of ``u^n t^k`` (summed over q-powers ``0 mod n`` on the permutation side
    and ``0 mod k-1`` on the product side) as polynomials in ``x_1..x_n``.
    Returns the largest coefficient discrepancy per ``(n, k)``.

    Both sides are polynomials in ``q`` of degree at most
    ``n(n-1)/2 + (k-1)n``; a smaller ``q_cap`` truncates them.  ``form``
    selects the exponent, see :func:`grand_exponent`.
    """
    if n_max > 4 or k_max > 3:
        raise ValueError("grand identity check is limited to n <= 4, k <= 3")
    out = {}
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            lhs = _grand_lhs(n, k, n_max, q_cap)
            rhs = _grand_rhs(n, k, n_max, q_cap, form)
            keys = set(lhs) | set(rhs)
            out[(n, k)] = max((abs(lhs.get(e, 0) - rhs.get(e, 0)) for e in keys),
                              default=Fraction(0))
    return out


# -- transposition class polynomials --------------------------------------------------

def transposition_maj_poly(n: int, cd: int = 3) -> list[int]:
    """Coefficients of ``sum x^(maj(w) mod n)`` over transpositions with ``cd`` cyclic descents."""
    out = [0] * n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = list(range(1, n + 1))
            w[i - 1], w[j - 1] = j, i
            w = tuple(w)
            if cyclic_descents(w) == cd:
                out[major_index(w) % n] += 1
    return out


def odd_transposition_form(n: int) -> list[int]:
    """``((n-3)/2) (x^n - 1)/(x - 1)`` for odd ``n``."""
    if n % 2 == 0:
        raise ValueError("odd n required")
    return [(n - 3) // 2] * n


def even_transposition_form(n: int) -> list[int]:
    """``((n-4)/2) (x^n - 1)/(x - 1) + x (x^n - 1)/(x^2 - 1)`` for even ``n >= 4``."""
    if n % 2 or n < 4:
        raise ValueError("even n >= 4 required")
    return [(n - 4) // 2 + (e % 2) for e in range(n)]


def printed_even_transposition_form(n: int) -> list[int]:
    """``-(x^n - 1)/(x^2 - 1)``, the form displayed for the power-of-two case."""
    return [-1 if e % 2 == 0 else 0 for e in range(n - 1)] + [0]


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def poly_divides(divisor: list[int], poly: list[int]) -> bool:
    """Exact divisibility in Z[x] for a monic ``divisor`` (coefficients lowest first)."""
    rem = [Fraction(c) for c in poly]
    while rem and rem[-1] == 0:
        rem.pop()
    d = len(divisor) - 1
    if divisor[-1] != 1:
        raise ValueError("divisor must be monic")
    while len(rem) - 1 >= d and rem:
        lead = rem[-1]
        shift = len(rem) - 1 - d
        for i, c in enumerate(divisor):
            rem[shift + i] -= lead * c
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem
