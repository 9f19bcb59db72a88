"""
Permutations of ``{1, ..., n}`` in one-line notation and their statistics.

A permutation is a plain tuple ``w`` with ``w[i-1] == w(i)``.  Composition
follows ``(u o v)(i) = u(v(i))``.

>>> perm_stats((2, 1, 3))
PermStats(d=1, maj=1, cd=2, cycle_type=CycleType(1^1 2^1))
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Perm", "CapError", "CycleType", "PermStats",
    "ENUMERATION_CAP", "set_enumeration_cap", "check_cap",
    "as_perm", "identity", "compose", "inverse", "rotation", "sign",
    "descents", "num_descents", "major_index", "cyclic_descents",
    "cycles", "cycle_type", "perm_stats", "enumerate_sn", "descent_tables",
    "eulerian_numbers",
]

Perm = tuple[int, ...]

# exhaustive enumeration over S_n is refused above this n (10! ~ 3.6M)
ENUMERATION_CAP = 10


class CapError(ValueError):
    """A size parameter exceeds what can be enumerated exactly."""


def set_enumeration_cap(n: int) -> int:
    """Set the global enumeration cap; returns the previous value."""
    global ENUMERATION_CAP
    old, ENUMERATION_CAP = ENUMERATION_CAP, int(n)
    return old


def check_cap(n: int, cap: int | None = None, what: str = "S_n") -> None:
    limit = ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise CapError(f"{what}: n={n} exceeds enumeration cap {limit}")


class CycleType(tuple):
    """
    Cycle type stored as multiplicities ``(n_1, n_2, ...)`` with trailing
    zeros stripped, so ``CycleType((1, 1))`` is the type of a transposition
    in ``S_3``.
    """

    def __new__(cls, mults: Iterable[int] = ()):
        m = list(mults)
        while m and m[-1] == 0:
            m.pop()
        if any(x < 0 for x in m):
            raise ValueError(f"negative multiplicity in {m}")
        return super().__new__(cls, m)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "CycleType":
        parts = list(parts)
        if not parts:
            return cls()
        if min(parts) < 1:
            raise ValueError(f"cycle lengths must be positive: {parts}")
        mults = [0] * max(parts)
        for p in parts:
            mults[p - 1] += 1
        return cls(mults)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Inverse of ``str``: ``"1^2 3^1"`` -> ``CycleType((2, 0, 1))``."""
        mults: dict[int, int] = {}
        for tok in text.split():
            base, _, exp = tok.partition("^")
            mults[int(base)] = mults.get(int(base), 0) + (int(exp) if exp else 1)
        size = max(mults, default=0)
        return cls(mults.get(i, 0) for i in range(1, size + 1))

    def mult(self, i: int) -> int:
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(i * m for i, m in enumerate(self, start=1))

    @property
    def parts(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order."""
        out: list[int] = []
        for i in range(len(self), 0, -1):
            out.extend([i] * self[i - 1])
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(f"{i}^{m}" for i, m in enumerate(self, start=1) if m)

    def __repr__(self) -> str:
        return f"CycleType({self})"


class PermStats(NamedTuple):
    d: int
    maj: int
    cd: int
    cycle_type: CycleType


def as_perm(seq: Sequence[int]) -> Perm:
    """Validate one-line notation and return it as a tuple."""
    w = tuple(int(x) for x in seq)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {list(seq)}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """``(u o v)(i) = u(v(i))``."""
    return tuple(u[j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def rotation(n: int, power: int = 1) -> Perm:
    """``zeta^power`` where ``zeta = (1 2 ... n)`` sends ``i`` to ``i + 1 mod n``."""
    return tuple((i + power) % n + 1 for i in range(n))


def descents(w: Perm) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def num_descents(w: Perm) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def major_index(w: Perm) -> int:
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def cyclic_descents(w: Perm) -> int:
    # n = 1: w(1) > w(1) is false, so cd = 0 by convention
    if not w:
        return 0
    return num_descents(w) + (1 if w[-1] > w[0] else 0)


def cycles(w: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting from its smallest element."""
    seen = [False] * (len(w) + 1)
    out = []
    for start in range(1, len(w) + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = w[i - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(w: Perm) -> CycleType:
    return CycleType.from_parts(len(c) for c in cycles(w))


def sign(w: Perm) -> int:
    # parity of n minus the number of cycles
    return -1 if (len(w) - len(cycles(w))) % 2 else 1


def perm_stats(w: Perm) -> PermStats:
    d = maj = 0
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            d += 1
            maj += i
    cd = d + (1 if w and w[-1] > w[0] else 0)
    return PermStats(d, maj, cd, cycle_type(w))


def enumerate_sn(n: int, cap: int | None = None) -> Iterator[Perm]:
    """All of S_n in lexicographic order of one-line notation."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap(n, cap)
    return itertools.permutations(range(1, n + 1))


def descent_tables(n: int, cap: int | None = None) -> tuple[dict[int, int], dict[int, int]]:
    """
    Brute-force ``(A, B)`` with ``A[i] = #{w : d(w) = i - 1}`` and
    ``B[i] = #{w : cd(w) = i}``.  Zero entries are omitted.
    """
    a: Counter[int] = Counter()
    b: Counter[int] = Counter()
    for w in enumerate_sn(n, cap):
        d = num_descents(w)
        a[d + 1] += 1
        b[d + (1 if w[-1] > w[0] else 0)] += 1
    return dict(sorted(a.items())), dict(sorted(b.items()))


def eulerian_numbers(n: int) -> list[int]:
    """
    ``[A_{n,1}, ..., A_{n,n}]`` via ``A_{n,i} = i A_{n-1,i} + (n-i+1) A_{n-1,i-1}``.
    No enumeration, so any ``n >= 1`` is fine.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    row = [1]
    for m in range(2, n + 1):
        prev = [0] + row + [0]
        row = [i * prev[i] + (m - i + 1) * prev[i - 1] for i in range(1, m + 1)]
    assert sum(row) == factorial(n)
    return row
