"""
Exact group-algebra elements of S_n, used both as probability measures and
as general elements (idempotents).

Rationals are :class:`fractions.Fraction`.  The product follows

    (A * B)(pi) = sum_tau A(pi tau^-1) B(tau),

i.e. mass ``A(sigma) B(tau)`` lands on ``sigma o tau``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .perm_core import (
    CycleType, Perm, as_perm, check_cap, cycle_type, enumerate_sn,
    identity, inverse, sign,
)
from .series import Series, SeriesRing

__all__ = [
    "format_rational", "parse_rational", "PermMeasure", "ClassMeasure",
    "convolve", "invert_measure", "cycle_index", "cycle_index_ring",
    "total_variation", "class_total_variation",
]


def format_rational(x: Fraction | int) -> str:
    """``"p/q"`` in lowest terms, ``"p"`` when ``q == 1``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class _Group:
    """Lexicographic indexing of S_n with a vectorised rank function."""

    def __init__(self, n: int):
        self.n = n
        self.perms: list[Perm] = list(enumerate_sn(n))
        self.index = {w: i for i, w in enumerate(self.perms)}
        self.array = np.array(self.perms, dtype=np.int64).reshape(len(self.perms), n)
        self.weights = np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
        self._table: np.ndarray | None = None

    def ranks(self, rows: np.ndarray) -> np.ndarray:
        """Lexicographic ranks of the rows of ``rows`` (Lehmer code)."""
        n = self.n
        out = np.zeros(rows.shape[0], dtype=np.int64)
        for i in range(n - 1):
            smaller = (rows[:, i + 1:] < rows[:, i:i + 1]).sum(axis=1)
            out += smaller * self.weights[i]
        return out

    def left_row(self, s: int, taus: np.ndarray) -> np.ndarray:
        """Ranks of ``perms[s] o perms[t]`` for ``t`` in ``taus``."""
        if self._table is not None:
            return self._table[s, taus]
        sigma = self.array[s]
        return self.ranks(sigma[self.array[taus] - 1])

    def build_table(self) -> None:
        size = len(self.perms)
        table = np.empty((size, size), dtype=np.int32)
        everything = np.arange(size)
        for s in range(size):
            table[s] = self.left_row(s, everything)
        self._table = table


@lru_cache(maxsize=None)
def _group(n: int) -> _Group:
    g = _Group(n)
    if n <= 6:
        g.build_table()
    return g


class PermMeasure:
    """
    Map from permutations of ``S_n`` to exact rationals; missing entries are
    zero.  ``probability=True`` asserts nonnegativity and total mass 1.
    """

    __slots__ = ("n", "coeffs", "probability")

    def __init__(self, n: int, coeffs: Mapping[Perm, Fraction | int] | Iterable = (),
                 probability: bool = False, validate: bool = True):
        self.n = n
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        out: dict[Perm, Fraction] = {}
        for w, c in items:
            if validate:
                w = as_perm(w)
                if len(w) != n:
                    raise ValueError(f"permutation {w} is not in S_{n}")
            c = Fraction(c)
            if c:
                out[w] = out.get(w, 0) + c
        self.coeffs = {w: c for w, c in out.items() if c}
        self.probability = probability
        if probability:
            if any(c < 0 for c in self.coeffs.values()):
                raise ValueError("probability measure has a negative coefficient")
            if self.total() != 1:
                raise ValueError(f"probability measure has total mass {self.total()}")

    # -- constructors ---------------------------------------------------------
    @classmethod
    def point_mass(cls, w: Perm) -> "PermMeasure":
        w = as_perm(w)
        return cls(len(w), {w: 1}, probability=True)

    @classmethod
    def identity(cls, n: int) -> "PermMeasure":
        return cls.point_mass(identity(n))

    @classmethod
    def uniform(cls, n: int) -> "PermMeasure":
        p = Fraction(1, factorial(n))
        return cls(n, ((w, p) for w in enumerate_sn(n)), probability=True, validate=False)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Perm], Fraction | int],
                      probability: bool = False) -> "PermMeasure":
        return cls(n, ((w, fn(w)) for w in enumerate_sn(n)),
                   probability=probability, validate=False)

    # -- access -------------------------------------------------------------
    def __getitem__(self, w: Perm) -> Fraction:
        return self.coeffs.get(tuple(w), Fraction(0))

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self) -> list[tuple[Perm, Fraction]]:
        """Nonzero entries in lexicographic order."""
        return sorted(self.coeffs.items())

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermMeasure):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        kind = "probability" if self.probability else "element"
        return f"PermMeasure(n={self.n}, {kind}, support={len(self.coeffs)})"

    # -- linear structure -----------------------------------------------------
    def _check_same(self, other: "PermMeasure") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other: "PermMeasure") -> "PermMeasure":
        self._check_same(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return PermMeasure(self.n, out, validate=False)

    def __sub__(self, other: "PermMeasure") -> "PermMeasure":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "PermMeasure":
        c = Fraction(c)
        return PermMeasure(self.n, {w: v * c for w, v in self.coeffs.items()}, validate=False)

    def __mul__(self, other):
        if isinstance(other, PermMeasure):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def signed(self) -> "PermMeasure":
        """Multiply the coefficient of each ``w`` by ``sgn(w)``."""
        return PermMeasure(self.n, {w: sign(w) * c for w, c in self.coeffs.items()},
                           validate=False)

    def embed(self, m: int) -> "PermMeasure":
        """View in ``S_m`` (``m >= n``) with letters ``n+1..m`` fixed."""
        if m < self.n:
            raise ValueError(f"cannot embed S_{self.n} into S_{m}")
        tail = tuple(range(self.n + 1, m + 1))
        return PermMeasure(m, {w + tail: c for w, c in self.coeffs.items()}, validate=False)

    def as_probability(self) -> "PermMeasure":
        return PermMeasure(self.n, self.coeffs, probability=True, validate=False)

    # -- serialisation ------------------------------------------------------
    def to_tsv(self, include_zero: bool = False) -> str:
        if include_zero:
            check_cap(self.n)
            rows = [(w, self[w]) for w in enumerate_sn(self.n)]
        else:
            rows = self.items()
        return "".join(
            " ".join(map(str, w)) + "\t" + format_rational(c) + "\n" for w, c in rows
        )

    @classmethod
    def from_tsv(cls, text: str, probability: bool = False) -> "PermMeasure":
        entries = []
        for line in text.splitlines():
            if not line.strip():
                continue
            perm, _, value = line.partition("\t")
            entries.append((as_perm(perm.split()), parse_rational(value)))
        if not entries:
            raise ValueError("empty measure")
        n = len(entries[0][0])
        return cls(n, entries, probability=probability)


class ClassMeasure:
    """Map from cycle types (partitions of ``n``) to exact rationals."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[CycleType, Fraction | int]):
        self.n = n
        out = {}
        for t, c in coeffs.items():
            t = CycleType(t)
            if t.size != n:
                raise ValueError(f"cycle type {t} is not a partition of {n}")
            if c:
                out[t] = Fraction(c)
        self.coeffs = out

    def __getitem__(self, t: CycleType) -> Fraction:
        return self.coeffs.get(CycleType(t), Fraction(0))

    def items(self) -> list[tuple[CycleType, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].parts, reverse=True)

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassMeasure):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = ", ".join(f"{t}: {format_rational(c)}" for t, c in self.items())
        return f"ClassMeasure(n={self.n}, {{{body}}})"

    def max_difference(self, other: "ClassMeasure") -> Fraction:
        keys = set(self.coeffs) | set(other.coeffs)
        return max((abs(self[t] - other[t]) for t in keys), default=Fraction(0))

    def to_tsv(self) -> str:
        return "".join(f"{t}\t{format_rational(c)}\n" for t, c in self.items())


def _integer_form(m: PermMeasure) -> tuple[list[int], list[int], int]:
    """Support ranks, integer numerators over a common denominator, denominator."""
    g = _group(m.n)
    den = lcm(*(c.denominator for c in m.coeffs.values())) if m.coeffs else 1
    ranks = [g.index[w] for w in m.coeffs]
    nums = [c.numerator * (den // c.denominator) for c in m.coeffs.values()]
    return ranks, nums, den


def convolve(a: PermMeasure, b: PermMeasure) -> PermMeasure:
    """``(a * b)(pi) = sum_tau a(pi tau^-1) b(tau)``."""
    a._check_same(b)
    n = a.n
    check_cap(n, what="convolve")
    if not a.coeffs or not b.coeffs:
        return PermMeasure(n, {}, validate=False)
    g = _group(n)
    ra, na, da = _integer_form(a)
    rb, nb, db = _integer_form(b)
    taus = np.array(rb, dtype=np.int64)
    bound = sum(abs(x) for x in na) * max(abs(x) for x in nb)
    dtype = np.int64 if bound < 2 ** 62 else object
    bvec = np.array(nb, dtype=dtype)
    acc = np.zeros(len(g.perms), dtype=dtype)
    for s, x in zip(ra, na):
        # left multiplication by a fixed sigma is injective, so no index repeats
        acc[g.left_row(s, taus)] += x * bvec
    den = da * db
    out = {g.perms[i]: Fraction(int(acc[i]), den) for i in np.flatnonzero(acc)}
    prob = a.probability and b.probability
    return PermMeasure(n, out, probability=prob, validate=False)


def invert_measure(a: PermMeasure) -> PermMeasure:
    """Coefficient of ``w`` becomes the old coefficient of ``w^-1``."""
    return PermMeasure(a.n, {inverse(w): c for w, c in a.coeffs.items()},
                       probability=a.probability, validate=False)


def cycle_index_ring(n: int, extra: Iterable[str] = (), max_degree: int | None = None,
                     **kwargs) -> SeriesRing:
    """Ring in ``a1..an`` (``a_i`` of weight ``i``) plus extra variables."""
    names = [f"a{i}" for i in range(1, n + 1)] + list(extra)
    weights = {f"a{i}": i for i in range(1, n + 1)}
    weights.update(kwargs.pop("weights", {}))
    return SeriesRing(names, weights=weights, max_degree=max_degree, **kwargs)


def cycle_index(e: PermMeasure, ring: SeriesRing | None = None) -> Series:
    """
    ``sum_w e(w) prod_i a_i^{n_i(w)}``, without dividing by ``|S_n|``.
    Variables are named ``a1, a2, ...``.
    """
    if ring is None:
        ring = cycle_index_ring(e.n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for w, c in e.coeffs.items():
        t = cycle_type(w)
        exps = ring.exps({f"a{i}": m for i, m in enumerate(t, start=1) if m})
        terms[exps] = terms.get(exps, 0) + c
    return Series(ring, terms)


def _require_probability(p: PermMeasure) -> None:
    if any(c < 0 for c in p.coeffs.values()) or p.total() != 1:
        raise ValueError("total variation needs probability measures")


def total_variation(p: PermMeasure, q: PermMeasure) -> Fraction:
    """``(1/2) sum_x |p(x) - q(x)|``, exactly."""
    p._check_same(q)
    _require_probability(p)
    _require_probability(q)
    keys = set(p.coeffs) | set(q.coeffs)
    diff = sum((abs(p[w] - q[w]) for w in keys), Fraction(0))
    # entries outside both supports contribute zero
    return diff / 2


def class_total_variation(p: ClassMeasure, q: ClassMeasure) -> Fraction:
    keys = set(p.coeffs) | set(q.coeffs)
    return sum((abs(p[t] - q[t]) for t in keys), Fraction(0)) / 2
