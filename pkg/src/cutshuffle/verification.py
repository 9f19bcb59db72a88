"""
Named invariant checks grouped into suites, for ``cutshuffle verify``.

Each check returns a :class:`CheckResult`.  Checks whose ``expected`` flag
is False probe statements known to be misprinted; they are reported but
do not affect the overall verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from . import (
    affine_shuffles as aff, conjecture_lab as lab, idempotents as idem,
    patience as pat, polyfactor as pf, shuffle_measures as sm,
)
from .exact_algebra import convolve
from .perm_core import descent_tables, eulerian_numbers

__all__ = ["CheckResult", "SUITES", "run_suite", "format_result"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    expected: bool = True
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed or not self.expected


def format_result(r: CheckResult) -> str:
    if r.expected:
        tag = "PASS" if r.passed else "FAIL"
    else:
        tag = "XPASS" if r.passed else "XFAIL"
    tail = f"  ({r.detail})" if r.detail else ""
    return f"{tag}\t{r.suite}\t{r.name}{tail}"


Check = Callable[[int], Iterator[CheckResult]]


def _perm(max_n: int) -> Iterator[CheckResult]:
    ok = True
    for n in range(1, max_n + 1):
        a, b = descent_tables(n)
        ok &= [a.get(i, 0) for i in range(1, n + 1)] == eulerian_numbers(n)
        if n >= 2:
            ok &= [b.get(i, 0) for i in range(1, n)] == sm.cyclic_descent_counts(n)
    yield CheckResult("perm", f"descent tables vs recurrences, n<={max_n}", ok)


def _shuffle(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 6)
    ok_cs = ok_conv = ok_move = ok_gap = True
    for n in range(1, n_top + 1):
        for k in range(1, 5):
            ok_cs &= sm.shuffle_then_cut_measure(n, k) == convolve(sm.cut_measure(n), sm.riffle_measure(n, k))
            ok_move &= all(sm.canmove_check(n, k, 2).values())
            ok_gap &= sm.cut_order_gap(n, k) >= 0
            for k2 in range(1, 4):
                ok_conv &= convolve(sm.riffle_measure(n, k), sm.riffle_measure(n, k2)) == sm.riffle_measure(n, k * k2)
    yield CheckResult("shuffle", f"riffle-then-cut closed form, n<={n_top}", ok_cs)
    yield CheckResult("shuffle", f"convolution property, n<={n_top}", ok_conv)
    yield CheckResult("shuffle", f"csc = cs and (cs)^2 = cs^2, n<={n_top}", ok_move)
    yield CheckResult("shuffle", "cut last is never worse than cut first", ok_gap)
    ok = all(sm.tv_riffle_table(n, 2, 4, with_cut=True) == sm.tv_riffle_table(n - 1, 2, 4)
             for n in range(2, n_top + 1))
    yield CheckResult("shuffle", "TV with cut on S_n equals TV on S_{n-1}", ok)
    rng = random.Random(20240601)
    worst = min(sm.deleted_cuts_gap(min(5, max(n_top, 2)), sm.random_sequence(rng, 4))
                for _ in range(10))
    yield CheckResult("shuffle", "deleting cuts never increases distance", worst >= 0)


def _affine(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 5)
    ok = True
    for n in range(2, n_top + 1):
        for k in range(1, 5):
            ref = aff.affine_measure(n, k, "partitions")
            ok &= ref.total() == 1
            ok &= all(aff.affine_measure(n, k, m) == ref for m in ("vectors", "ramanujan", "qbinom"))
    yield CheckResult("affine", f"four definitions agree, n<={n_top}, k<=4", ok)
    ok = all(aff.affine2_exact_law(m) == aff.affine_measure(m, 2) for m in range(2, n_top + 1))
    yield CheckResult("affine", "physical 2-shuffle law", ok)
    ok = all(convolve(aff.affine_measure(n, 2), aff.affine_measure(n, 3)) == aff.affine_measure(n, 6)
             for n in range(2, min(n_top, 4) + 1))
    yield CheckResult("affine", "convolution property 2*3 = 6", ok)


def _polyfactor(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 5)
    ok = True
    for q in (2, 3):
        for n in range(1, n_top + 1):
            cs = pf.class_measure(sm.shuffle_then_cut_measure(n, q))
            ok &= cs == pf.poly_class_measure(n, q, "nonzero_constant")
            ok &= pf.class_measure(sm.riffle_measure(n, q)) == pf.poly_class_measure(n, q, "all")
    yield CheckResult("polyfactor", f"cycle types match factorization types, n<={n_top}", ok)
    ok = all(pf.expected_fixed_points(n, k, "riffle_cut") == 1 for n in range(1, n_top + 1) for k in (2, 3))
    yield CheckResult("polyfactor", "expected fixed points after riffle-then-cut is 1", ok)
    ok = all(not any(pf.cyc_identity_check(k, 4).values()) for k in (2, 3))
    yield CheckResult("polyfactor", "cycle-index series identities", ok)


def _idempotents(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 5)
    ok = all(all(idem.family_report(idem.eulerian_idempotents(n).elements).values())
             for n in range(1, n_top + 1))
    yield CheckResult("idempotents", f"Eulerian family, n<={n_top}", ok)
    ok = all(idem.family_report(idem.signed_and_whitehouse(n)[2].elements, False, False)["idempotent"]
             for n in range(1, n_top))
    yield CheckResult("idempotents", f"Whitehouse family idempotent, n+1<={n_top}", ok)
    ok = all(not any(idem.garsia_form_check(n, (1, 2, 3)).values()) for n in range(1, n_top))
    yield CheckResult("idempotents", "weighted sums match descent formulas", ok)
    ok = not any(idem.hanlon_check(min(n_top, 4), (1, 2, 3)).values())
    yield CheckResult("idempotents", "cycle-index product identity", ok)


def _conjectures(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 8)
    cells = [c for n in range(1, n_top + 1) for c in lab.statement1_report(n)]
    bad = sum(c.status == "fail" for c in cells)
    yield CheckResult("conjectures", f"maj equidistribution cells, n<={n_top}", bad == 0,
                      detail=f"{bad} failing of {len(cells)}")
    ok = all(lab.class_compare(n, q).discrepancy == 0
             for n in range(2, min(max_n, 6) + 1) for q in (2, 3, 4, 5, 7, 8) if gcd(n, q - 1) == 1)
    yield CheckResult("conjectures", "affine and riffle-then-cut agree on classes", ok)
    ok = all(lab.obvious_check(n, q) for n, q in ((2, 2), (3, 3), (3, 9)))
    yield CheckResult("conjectures", "pointwise agreement for prime n, q a power of n", ok)
    yield CheckResult("conjectures", "divisor lemma scan", lab.lemma_divide_scan(10, 11)["failed"] == 0)
    ok = all(lab.reciprocity_symmetric(m, x, y) for x in range(1, 7) for y in range(1, 7) for m in range(x * y))
    yield CheckResult("conjectures", "modular reciprocity symmetry", ok)
    nk = min(max_n, 3)
    printed = lab.grand_identity_check(nk, 3, 12, "printed")
    necklace = lab.grand_identity_check(nk, 3, 12, "necklace")
    yield CheckResult("conjectures", "grand identity, necklace exponent", not any(necklace.values()))
    yield CheckResult("conjectures", "grand identity, exponent as printed", not any(printed.values()),
                      expected=False)


def _patience(max_n: int) -> Iterator[CheckResult]:
    n_top = min(max_n, 6)
    yield CheckResult("patience", "piles of 7 5 1 3 6 2 4",
                      pat.patience_play([7, 5, 1, 3, 6, 2, 4], "forbidden") == [3, 2, 2])
    ok = True
    for size in range(n_top + 1):
        for a in pat.compositions(size, 3):
            words = list(pat.mult_words(a))
            images = {pat.phi_word(w) for w in words}
            ok &= images == set(words)
            for w in words:
                st = pat.cycle_stats(pat.phi_bijection(w))
                ok &= pat.first_pile(w[::-1], "allowed") == st.C
                ok &= pat.first_pile(w[::-1], "forbidden") == st.C_prime
    yield CheckResult("patience", f"records-to-cycles bijection, length<={n_top}", ok)
    ok = all(pat.expected_first_pile(a, r) == pat.average_first_pile(a, r)
             for size in range(1, n_top + 1) for a in pat.compositions(size, 3) for r in pat.TIE_RULES)
    yield CheckResult("patience", "expected first pile", ok)
    for ident in pat.GENFUNC_IDENTITIES:
        yield CheckResult("patience", f"{ident} generating function",
                          pat.genfunc_check(ident, min(n_top, 4), 3, "corrected") == 0)
    for ident in ("words_1", "words_2", "words_3", "words_4"):
        yield CheckResult("patience", f"{ident} as printed",
                          pat.genfunc_check(ident, min(n_top, 4), 3, "printed") == 0, expected=False)
    ok = all(pat.involution_firstpile_poly(n) == pat.involution_product_poly(n)
             for n in range(1, min(n_top, 6) // 2 + 2))
    yield CheckResult("patience", "involution first-pile polynomial", ok)


SUITES: dict[str, Check] = {
    "perm": _perm,
    "shuffle": _shuffle,
    "affine": _affine,
    "polyfactor": _polyfactor,
    "idempotents": _idempotents,
    "conjectures": _conjectures,
    "patience": _patience,
}


def run_suite(name: str, max_n: int = 5) -> Iterator[CheckResult]:
    if name == "all":
        for suite in SUITES.values():
            yield from suite(max_n)
        return
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    yield from SUITES[name](max_n)
