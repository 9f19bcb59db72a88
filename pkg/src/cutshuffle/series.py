"""
Truncated multivariate formal power series with exact rational coefficients.

A :class:`SeriesRing` fixes the variable names, a weight per variable, an
optional bound on the weighted total degree and optional per-variable
exponent caps.  The set of kept monomials is closed under taking divisors,
so ring operations are exact on every kept coefficient.

>>> R = SeriesRing(["x"], max_degree=3)
>>> x = R.var("x")
>>> (1 - x).inverse()
1 + x + x^2 + x^3
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

__all__ = ["SeriesRing", "Series", "binomial_coefficient"]

Scalar = Union[int, Fraction]
Exps = tuple[int, ...]


def binomial_coefficient(r: Scalar, m: int) -> Fraction:
    """``C(r, m)`` for rational ``r`` and integer ``m >= 0``."""
    out = Fraction(1)
    for j in range(m):
        out = out * (r - j) / (j + 1)
    return out


class SeriesRing:
    def __init__(
        self,
        variables: Iterable[str],
        weights: Mapping[str, int] | None = None,
        max_degree: int | None = None,
        caps: Mapping[str, int] | None = None,
    ):
        self.variables: tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        self.index = {v: i for i, v in enumerate(self.variables)}
        weights = dict(weights or {})
        caps = dict(caps or {})
        for name in list(weights) + list(caps):
            if name not in self.index:
                raise ValueError(f"unknown variable {name!r}")
        self.weights: tuple[int, ...] = tuple(int(weights.get(v, 1)) for v in self.variables)
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        self.max_degree = max_degree
        self.caps: tuple[int | None, ...] = tuple(caps.get(v) for v in self.variables)

    def __repr__(self) -> str:
        return (f"SeriesRing({list(self.variables)}, weights={self.weights}, "
                f"max_degree={self.max_degree}, caps={self.caps})")

    def degree(self, exps: Exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def keeps(self, exps: Exps) -> bool:
        if self.max_degree is not None and self.degree(exps) > self.max_degree:
            return False
        return all(c is None or e <= c for e, c in zip(exps, self.caps))

    def zero(self) -> "Series":
        return Series(self, {})

    def one(self) -> "Series":
        return self.const(1)

    def const(self, c: Scalar) -> "Series":
        return Series(self, {(0,) * len(self.variables): Fraction(c)})

    def monomial(self, exps: Mapping[str, int] | Exps, coeff: Scalar = 1) -> "Series":
        return Series(self, {self.exps(exps): Fraction(coeff)})

    def var(self, name: str) -> "Series":
        return self.monomial({name: 1})

    def exps(self, spec: Mapping[str, int] | Exps) -> Exps:
        if isinstance(spec, Mapping):
            out = [0] * len(self.variables)
            for name, e in spec.items():
                out[self.index[name]] = int(e)
            return tuple(out)
        spec = tuple(int(e) for e in spec)
        if len(spec) != len(self.variables):
            raise ValueError(f"exponent vector {spec} has wrong length")
        return spec

    def from_terms(self, terms: Mapping[Exps, Scalar]) -> "Series":
        return Series(self, {self.exps(e): Fraction(c) for e, c in terms.items()})


class Series:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: SeriesRing, terms: Mapping[Exps, Fraction]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c and ring.keeps(e)}

    # -- coercion -----------------------------------------------------------
    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            if other.ring is not self.ring:
                raise ValueError("series belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Series(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        maxd, caps = ring.max_degree, ring.caps
        left = [(e, c, ring.degree(e)) for e, c in self.terms.items()]
        right = sorted(((e, c, ring.degree(e)) for e, c in other.terms.items()),
                       key=lambda t: t[2])
        out: dict[Exps, Fraction] = {}
        for e1, c1, d1 in left:
            for e2, c2, d2 in right:
                if maxd is not None and d1 + d2 > maxd:
                    break
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(cap is not None and x > cap for x, cap in zip(e, caps)):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return Series(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, r):
        if isinstance(r, int) and r >= 0:
            out, base = self.ring.one(), self
            while r:
                if r & 1:
                    out = out * base
                base = base * base
                r >>= 1
            return out
        return self.power(r)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring.variables), Fraction(0))

    def power(self, r: Scalar) -> "Series":
        """
        ``self ** r`` for rational ``r`` by the binomial series of ``(1 + g)``;
        the constant term must be 1 unless ``r`` is an integer.
        """
        r = Fraction(r)
        c = self.constant_term()
        if c == 0:
            raise ZeroDivisionError("power of a series with zero constant term")
        if c != 1:
            if r.denominator != 1:
                raise ValueError("rational power needs constant term 1")
            return (self / c).power(r) * (c ** int(r))
        g = self - 1
        self._check_nilpotent(g)
        out = self.ring.one()
        gm = self.ring.one()
        m = 0
        while True:
            m += 1
            gm = gm * g
            if not gm.terms:
                break
            out = out + gm * binomial_coefficient(r, m)
        return out

    def inverse(self) -> "Series":
        return self.power(-1)

    def _check_nilpotent(self, g: "Series") -> None:
        # every monomial of g must push towards the truncation boundary
        ring = self.ring
        for e in g.terms:
            if ring.max_degree is not None and ring.degree(e) > 0:
                continue
            if any(x > 0 and cap is not None for x, cap in zip(e, ring.caps)):
                continue
            raise ValueError(f"monomial {e} does not advance the truncation; series would not terminate")

    # -- inspection ---------------------------------------------------------
    def coeff(self, exps: Mapping[str, int] | Exps | None = None, **named: int) -> Fraction:
        if exps is None:
            exps = named
        return self.terms.get(self.ring.exps(exps), Fraction(0))

    def map_terms(self, fn: Callable[[Exps, Fraction], tuple[Exps, Fraction] | None]) -> "Series":
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            res = fn(e, c)
            if res is not None:
                e2, c2 = res
                out[e2] = out.get(e2, 0) + c2
        return Series(self.ring, out)

    def substitute(self, name: str, value: Scalar) -> "Series":
        """Set variable ``name`` to a scalar."""
        i = self.ring.index[name]
        value = Fraction(value)

        def fn(e, c):
            return e[:i] + (0,) + e[i + 1:], c * value ** e[i]
        return self.map_terms(fn)

    def scale_variables(self, factors: Mapping[str, Scalar]) -> "Series":
        """Replace each named variable ``v`` by ``factors[v] * v``."""
        idx = [(self.ring.index[v], Fraction(f)) for v, f in factors.items()]

        def fn(e, c):
            for i, f in idx:
                c = c * f ** e[i]
            return e, c
        return self.map_terms(fn)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def max_abs_difference(self, other: "Series") -> Fraction:
        diff = self - other
        return max((abs(c) for c in diff.terms.values()), default=Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables

        def key(item):
            e = item[0]
            return (self.ring.degree(e), tuple(-x for x in e))
        parts = []
        for e, c in sorted(self.terms.items(), key=key):
            mono = "*".join(
                n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
