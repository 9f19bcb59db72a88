"""
Patience sorting on decks with repeated values, Foata's intercalation
calculus for multiset permutations, and the records-to-cycles bijection.

A multiset permutation is given by its bottom line, a word; the top line
is implicitly the sorted word.  Symbols may be any mutually comparable
values (ints or single letters).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from sympy.utilities.iterables import multiset_permutations

from .perm_core import check_cap
from .series import Series, SeriesRing

__all__ = [
    "TIE_RULES", "patience_piles", "patience_play", "first_pile",
    "two_line", "foata_product", "intercalate", "foata_decompose",
    "CycleStats", "cycle_stats", "format_intercalation", "lr_minima_positions",
    "phi_cycles", "phi_bijection", "phi_word", "mult_words", "compositions",
    "expected_first_pile", "average_first_pile", "GENFUNC_IDENTITIES",
    "genfunc_check", "quasisymmetry_check", "fixed_point_free_involutions",
    "involution_firstpile_poly", "involution_product_poly",
]

TIE_RULES = ("allowed", "forbidden")
Word = tuple
Column = tuple  # (top, bottom)
Cycle = tuple   # (x_1, ..., x_m, y) with y the minimum


def _check_rule(rule: str) -> None:
    if rule not in TIE_RULES:
        raise ValueError(f"tie rule must be one of {TIE_RULES}, got {rule!r}")


# -- patience sorting ------------------------------------------------------------------

def patience_piles(word: Iterable, ties: str = "forbidden") -> list[list]:
    """
    Deal ``word`` left to right; each card goes on the leftmost pile whose top
    card is higher (or equal, when ties are allowed), else starts a new pile.
    Piles are listed bottom card first.
    """
    _check_rule(ties)
    piles: list[list] = []
    tops: list = []   # nondecreasing left to right
    find = bisect_left if ties == "allowed" else bisect_right
    for card in word:
        i = find(tops, card)
        if i == len(piles):
            piles.append([card])
            tops.append(card)
        else:
            piles[i].append(card)
            tops[i] = card
    return piles


def patience_play(word: Iterable, ties: str = "forbidden") -> list[int]:
    """Pile sizes ``P_1, P_2, ...``."""
    return [len(p) for p in patience_piles(word, ties)]


def first_pile(word: Sequence, ties: str = "allowed") -> int:
    return patience_play(word, ties)[0] if len(word) else 0


# -- intercalation calculus ------------------------------------------------------------

def two_line(word: Sequence) -> tuple[Column, ...]:
    return tuple(zip(sorted(word), word))


def foata_product(*factors: Sequence[Column]) -> tuple[Column, ...]:
    """Juxtapose two-line forms and stably sort the columns by their top entry."""
    cols = [c for f in factors for c in f]
    return tuple(sorted(cols, key=lambda c: c[0]))


def _cycle_columns(cycle: Cycle) -> list[Column]:
    # (x_1 ... x_m y) has columns y/x_1, x_1/x_2, ..., x_m/y
    y = cycle[-1]
    tops = (y,) + tuple(cycle[:-1])
    return list(zip(tops, cycle))


def intercalate(cycles: Iterable[Cycle]) -> Word:
    """Bottom line of the intercalation product of ``cycles``."""
    return tuple(b for _, b in foata_product(*(_cycle_columns(c) for c in cycles)))


def foata_decompose(word: Sequence) -> tuple[Cycle, ...]:
    """
    The unique factorization into cycles ``(x_1 ... x_m y)`` with
    nondecreasing ``y`` and every ``x_j > y``.
    """
    cols = list(two_line(word))
    used = [False] * len(cols)
    by_top: dict = {}
    for i, (top, _) in enumerate(cols):
        by_top.setdefault(top, []).append(i)
    pointer = {top: 0 for top in by_top}

    def take(top) -> Hashable:
        idx = by_top[top]
        while used[idx[pointer[top]]]:
            pointer[top] += 1
        i = idx[pointer[top]]
        used[i] = True
        return cols[i][1]

    cycles = []
    for top in sorted(by_top):
        while any(not used[i] for i in by_top[top]):
            y = top
            body = []
            b = take(y)
            while b != y:
                body.append(b)
                b = take(b)
            cycles.append(tuple(body) + (y,))
    out = tuple(cycles)
    if intercalate(out) != tuple(word):
        raise AssertionError(f"decomposition of {word!r} does not multiply back")
    return out


class CycleStats(NamedTuple):
    C: int                     # number of cycles
    C_prime: int               # number of distinct cycle minima
    by_length: dict            # i -> C_i
    by_length_prime: dict      # i -> number of distinct minima among i-cycles


def cycle_stats(cycles: Sequence[Cycle]) -> CycleStats:
    by_length = Counter(len(c) for c in cycles)
    minima: dict[int, set] = {}
    for c in cycles:
        minima.setdefault(len(c), set()).add(c[-1])
    return CycleStats(
        len(cycles),
        len({c[-1] for c in cycles}),
        dict(sorted(by_length.items())),
        {i: len(s) for i, s in sorted(minima.items())},
    )


def format_intercalation(cycles: Sequence[Cycle]) -> str:
    return "_T".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


# -- records to cycles -----------------------------------------------------------------

def lr_minima_positions(word: Sequence, ties: str = "allowed") -> list[int]:
    """1-based positions of left-to-right minima (weak when ties are allowed)."""
    _check_rule(ties)
    out = []
    current = None
    for pos, v in enumerate(word, start=1):
        if current is None or v < current or (ties == "allowed" and v == current):
            out.append(pos)
            current = v
    return out


def phi_cycles(word: Sequence) -> tuple[Cycle, ...]:
    """
    Cut the word, from the left, into pieces of lengths
    ``len+1-R_t, R_t-R_{t-1}, ..., R_2-R_1`` where ``R`` are the weak
    left-to-right minima positions of the reversed word.
    """
    n = len(word)
    r = lr_minima_positions(word[::-1], "allowed")
    # piece boundaries, 0-based; the record at R_j ends a piece at n + 1 - R_j
    cuts = [0] + [n + 1 - p for p in reversed(r)]
    return tuple(tuple(word[a:b]) for a, b in zip(cuts, cuts[1:]))


def phi_bijection(word: Sequence) -> tuple[Cycle, ...]:
    """``Phi(word)`` as its list of intercalation cycles."""
    return phi_cycles(tuple(word))


def phi_word(word: Sequence) -> Word:
    """Bottom line of ``Phi(word)``."""
    return intercalate(phi_bijection(word))


# -- enumeration -----------------------------------------------------------------------

def mult_words(a: Sequence[int], cap: int = 10) -> Iterator[Word]:
    """All words with ``a[i]`` copies of the letter ``i + 1``, in lexicographic order."""
    n = sum(a)
    check_cap(n, cap, what="multiset word enumeration")
    letters = [i + 1 for i, m in enumerate(a) for _ in range(m)]
    if not letters:
        yield ()
        return
    for w in multiset_permutations(letters):
        yield tuple(w)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def expected_first_pile(a: Sequence[int], ties: str = "allowed") -> Fraction:
    """
    Closed form: ``sum_k a_k / (a_1 + ... + a_{k-1} + 1)`` with ties allowed,
    ``sum_k a_k / (a_1 + ... + a_k)`` with ties forbidden.
    """
    _check_rule(ties)
    out = Fraction(0)
    below = 0
    for ak in a:
        if ak:
            out += Fraction(ak, below + 1) if ties == "allowed" else Fraction(ak, below + ak)
        below += ak
    return out


def average_first_pile(a: Sequence[int], ties: str = "allowed") -> Fraction:
    total = count = 0
    for w in mult_words(a):
        total += first_pile(w, ties)
        count += 1
    return Fraction(total, count)


# -- generating functions --------------------------------------------------------------

GENFUNC_IDENTITIES = ("multiset_C", "multiset_C'", "words_1", "words_2", "words_3", "words_4")


def _all_words(n_max: int, alphabet: int) -> Iterator[Word]:
    for n in range(1, n_max + 1):
        yield from product(range(1, alphabet + 1), repeat=n)


def _geometric(s: Series) -> Series:
    return (1 - s).inverse()


def _multiset_sides(identity: str, n_max: int, alphabet: int, form: str):
    xs = [f"x{k}" for k in range(1, alphabet + 1)]
    ring = SeriesRing(["u"] + xs, weights={"u": 0}, max_degree=n_max)
    u = ring.var("u")
    lhs = ring.one()
    for w in _all_words(n_max, alphabet):
        st = cycle_stats(foata_decompose(w))
        exps = {"u": st.C if identity == "multiset_C" else st.C_prime}
        exps.update({f"x{k}": m for k, m in Counter(w).items()})
        lhs = lhs + ring.monomial(exps)
    x = [ring.var(v) for v in xs]
    rhs = ring.one()
    for k in range(alphabet):
        above = sum(x[k + 1:], ring.zero())
        y = x[k] * _geometric(above)
        if identity == "multiset_C":
            rhs = rhs * _geometric(u * y)
        elif form == "printed":
            # denominator exactly as displayed: sum over j > k of x_k
            z = x[k] * _geometric((alphabet - k - 1) * x[k])
            rhs = rhs * (1 + u * y * _geometric(z))
        else:
            rhs = rhs * (1 + u * y * _geometric(y))
    return lhs, rhs


def _words_sides(identity: str, n_max: int, alphabet: int, form: str):
    """The four random-word identities; ``x_k`` stands for ``x_k / N``."""
    N = Fraction(alphabet)
    us = [f"u{i}" for i in range(1, n_max + 1)]
    split = identity in ("words_1", "words_3")
    xs = [f"x{k}" for k in range(1, alphabet + 1)] if split else ["x"]
    primed = identity in ("words_3", "words_4")
    single_u = primed and form == "corrected"
    uvars = ["u"] if single_u else us
    ring = SeriesRing(uvars + xs, weights={v: 0 for v in uvars}, max_degree=n_max)

    lhs = ring.zero()
    for w in _all_words(n_max, alphabet):
        st = cycle_stats(foata_decompose(w))
        if single_u:
            exps = {"u": st.C_prime}
        else:
            stat = st.by_length_prime if primed else st.by_length
            exps = {f"u{i}": m for i, m in stat.items()}
        if split:
            exps.update({f"x{k}": m for k, m in Counter(w).items()})
        else:
            exps["x"] = len(w)
        lhs = lhs + ring.monomial(exps, Fraction(1) / N ** len(w))
    lhs = lhs + 1
    if not split:
        lhs = lhs * (1 - ring.var("x"))

    if split:
        letters = [ring.var(v) * (1 / N) for v in xs]
        above = [sum(letters[k + 1:], ring.zero()) for k in range(alphabet)]
    else:
        x = ring.var("x")
        letters = [x * (1 / N)] * alphabet
        above = [x * Fraction(alphabet - k - 1, alphabet) for k in range(alphabet)]
    rhs = ring.one()
    if not primed:
        for k in range(alphabet):
            if form == "printed":
                for i, ui in enumerate(us, start=1):
                    term = ring.var(ui) * letters[k] * above[k] ** (i - 1)
                    rhs = rhs * _geometric(term)
                    if not split:
                        rhs = rhs * (1 - letters[k] * above[k] ** (i - 1))
            else:
                cyc = sum((ring.var(ui) * letters[k] * above[k] ** (i - 1)
                           for i, ui in enumerate(us, start=1)), ring.zero())
                rhs = rhs * _geometric(cyc)
        if form == "corrected" and not split:
            rhs = rhs * (1 - ring.var("x"))
        return lhs, rhs
    for k in range(alphabet):
        y = letters[k] * _geometric(above[k])
        if form == "printed":
            for ui in us:
                rhs = rhs * (1 + ring.var(ui) * y)
                if not split:
                    rhs = rhs * (1 + y).inverse()
        else:
            # cycles with minimum k form a nonempty sequence or are absent
            z = y * _geometric(y)
            rhs = rhs * (1 + ring.var("u") * z)
            if not split:
                rhs = rhs * (1 + z).inverse()
    return lhs, rhs


def genfunc_check(identity: str, n_max: int = 5, alphabet: int = 3,
                  form: str = "corrected") -> Fraction:
    """
    Largest coefficient discrepancy between the enumerated statistic and the
    product side, for words of length ``<= n_max`` over ``alphabet`` letters.

    ``form="printed"`` uses the product sides as displayed; ``"corrected"``
    uses the forms that account for cycles sharing a minimum being ordered
    (see the module README section on generating functions).
    """
    if identity not in GENFUNC_IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if form not in ("printed", "corrected"):
        raise ValueError(f"unknown form {form!r}")
    check_cap(n_max, 8, what="word enumeration length")
    if identity.startswith("multiset"):
        lhs, rhs = _multiset_sides(identity, n_max, alphabet, form)
    else:
        lhs, rhs = _words_sides(identity, n_max, alphabet, form)
    return lhs.max_abs_difference(rhs)


def quasisymmetry_check(n_max: int = 5, alphabet: int = 4, which: str = "multiset_C") -> bool:
    """
    In the multiset generating function, monomials whose nonzero exponents
    read the same left to right have equal coefficients (as polynomials in u).
    """
    lhs, _ = _multiset_sides(which, n_max, alphabet, "corrected")
    ring = lhs.ring
    ui = ring.index["u"]
    groups: dict[tuple, dict] = {}
    for e, c in lhs.terms.items():
        pattern = tuple(v for i, v in enumerate(e) if i != ui and v)
        support = tuple(i for i, v in enumerate(e) if i != ui and v)
        groups.setdefault(pattern, {}).setdefault(support, {})[e[ui]] = c
    for pattern, by_support in groups.items():
        values = list(by_support.values())
        if any(v != values[0] for v in values[1:]):
            return False
        if pattern and len(by_support) != comb(alphabet, len(pattern)):
            return False
    return True


# -- involutions -------------------------------------------------------------------------

def fixed_point_free_involutions(m: int) -> Iterator[tuple[int, ...]]:
    """Fixed-point-free involutions of ``1..m`` in one-line notation."""
    def rec(free: list[int], w: list[int]):
        if not free:
            yield tuple(w)
            return
        a = free[0]
        for j in range(1, len(free)):
            b = free[j]
            w[a - 1], w[b - 1] = b, a
            yield from rec(free[1:j] + free[j + 1:], w)
    if m % 2:
        return
    yield from rec(list(range(1, m + 1)), [0] * m)


def involution_firstpile_poly(n: int) -> list[int]:
    """Coefficients (lowest first) of ``sum x^{P_1(pi)}`` over fixed-point-free involutions of ``2n``."""
    check_cap(2 * n, 12, what="involution enumeration")
    coeffs = [0] * (2 * n + 1)
    for w in fixed_point_free_involutions(2 * n):
        coeffs[first_pile(w, "forbidden")] += 1
    return coeffs


def involution_product_poly(n: int) -> list[int]:
    """Coefficients of ``prod_{i=1}^n (x^2 + 2(i-1))``."""
    poly = [1]
    for i in range(1, n + 1):
        new = [0] * (len(poly) + 2)
        for e, c in enumerate(poly):
            new[e + 2] += c
            new[e] += 2 * (i - 1) * c
        poly = new
    return poly
