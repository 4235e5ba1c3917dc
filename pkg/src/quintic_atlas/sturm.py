"""Sturm chains, sign variations, real-root counting and isolation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import kernels
from .errors import DomainError, PreconditionError
from .polycore import Poly, derivative, squarefree_decompose

Point = Union[int, Fraction, float]  # float only for +/- math.inf


@dataclass(frozen=True)
class SturmChain:
    """``f, f', -rem(f, f'), ...`` up to the last nonzero remainder."""

    polys: tuple[Poly, ...]
    _ints: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ints", tuple(p.integer_form() for p in self.polys))

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> Poly:
        return self.polys[i]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.polys)


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval ``(lo, hi)`` holding exactly one distinct real root.

    ``lo == hi`` marks an exactly known rational root.
    """

    lo: Fraction
    hi: Fraction
    root_multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi


def sturm_chain(f: Poly) -> SturmChain:
    if f.degree < 1:
        raise DomainError("Sturm chain needs a non-constant polynomial")
    polys = [f, derivative(f)]
    while True:
        rem = polys[-2] % polys[-1]
        if rem.is_zero():
            break
        polys.append(-rem)
    return SturmChain(tuple(polys))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    count, prev = 0, 0
    for s in signs:
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def variations_at(chain: SturmChain, point: Point) -> int:
    """Sign changes of the chain at ``point``; ``point`` may be ``+/- math.inf``."""
    if isinstance(point, float):
        if point == math.inf:
            return _variations(_sign(p.lead) for p in chain.polys)
        if point == -math.inf:
            return _variations(_sign(p.lead) * (-1) ** p.degree for p in chain.polys)
        point = Fraction(point)
    point = Fraction(point)
    return kernels.sign_variations_at(chain._ints, point.numerator, point.denominator)


def _is_root(f: Poly, x: Point) -> bool:
    return not isinstance(x, float) and f(x) == 0


def count_real_roots(f: Poly, a: Point = -math.inf, b: Point = math.inf, chain: SturmChain | None = None) -> int:
    """Number of distinct real roots of ``f`` in the open interval ``(a, b)``."""
    for end in (a, b):
        if _is_root(f, end):
            raise PreconditionError(f"interval endpoint {end} is a root")
    if not isinstance(a, float) and not isinstance(b, float) and a >= b:
        return 0
    chain = chain or sturm_chain(f)
    return variations_at(chain, a) - variations_at(chain, b)


def cauchy_bound(f: Poly) -> Fraction:
    lc = abs(f.lead)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc if f.degree > 0 else Fraction(1)


class _Isolator:
    """Bisection with exact rationals over the chain of a square-free polynomial."""

    def __init__(self, g: Poly):
        self.g = g
        self.chain = sturm_chain(g)
        self.ints = self.chain._ints
        self.gint = g.integer_form()

    def value_sign(self, x: Fraction) -> int:
        return _sign(kernels.eval_homogeneous(self.gint, x.numerator, x.denominator))

    def var(self, x: Fraction) -> int:
        return kernels.sign_variations_at(self.ints, x.numerator, x.denominator)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return self.var(lo) - self.var(hi)

    def isolate(self) -> list[tuple[Fraction, Fraction]]:
        b = cauchy_bound(self.g)
        out = []
        stack = [(-b, b, self.count(-b, b))]
        while stack:
            lo, hi, k = stack.pop()
            if k == 0:
                continue
            if k == 1:
                out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if self.value_sign(mid) == 0:
                out.append((mid, mid))
                eps = (hi - lo) / 4
                while self.value_sign(mid - eps) == 0 or self.value_sign(mid + eps) == 0 or self.count(mid - eps, mid + eps) != 1:
                    eps /= 2
                stack.append((lo, mid - eps, self.count(lo, mid - eps)))
                stack.append((mid + eps, hi, self.count(mid + eps, hi)))
            else:
                stack.append((lo, mid, self.count(lo, mid)))
                stack.append((mid, hi, self.count(mid, hi)))
        out.sort()
        return out

    def bisect(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Halve an isolating interval, keeping the half with the root."""
        if lo == hi:
            return lo, hi
        mid = (lo + hi) / 2
        if self.value_sign(mid) == 0:
            return mid, mid
        if self.count(lo, mid) == 1:
            return lo, mid
        return mid, hi


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the open interval ``(lo, hi)``."""
    if lo >= hi:
        raise DomainError("empty interval")
    fl = math.floor(lo)
    if fl + 1 < hi:
        # an integer fits; take the one nearest zero
        if lo < 0 < hi:
            return Fraction(0)
        return Fraction(fl + 1) if lo >= 0 else Fraction(math.ceil(hi) - 1)
    # continued-fraction step on the fractional parts
    a, b = lo - fl, hi - fl
    if a == 0:
        return fl + Fraction(1, math.floor(1 / b) + 1)
    return fl + 1 / simplest_between(1 / b, 1 / a)


def isolate_real_roots(f: Poly) -> list[IsolatingInterval]:
    """Sorted, pairwise disjoint isolating intervals for the distinct real roots of ``f``.

    Roots known to be rational (a linear square-free factor, or the simplest
    rational inside an interval) come back as point intervals.
    """
    if f.degree < 1:
        raise DomainError("root isolation needs a non-constant polynomial")
    dec = squarefree_decompose(f)
    iso = _Isolator(dec.squarefree_part())
    factor_chains = [(g, m, sturm_chain(g) if g.degree >= 1 else None) for g, m in dec.factors]
    out = []
    for lo, hi in iso.isolate():
        mult = None
        for g, m, ch in factor_chains:
            if lo == hi:
                hit = g(lo) == 0
            else:
                hit = count_real_roots(g, lo, hi, chain=ch) == 1
            if hit:
                mult = m
                if g.degree == 1:
                    lo = hi = -g[0] / g[1]
                break
        assert mult is not None, "isolated root matches no square-free factor"
        if lo != hi:
            x = simplest_between(lo, hi)
            if iso.value_sign(x) == 0:
                lo = hi = x
        out.append(IsolatingInterval(lo, hi, mult))
    return out


def refine(f: Poly, interval: IsolatingInterval, width: Fraction) -> IsolatingInterval:
    """Shrink an isolating interval of ``f`` below ``width`` (or to a point)."""
    g = squarefree_decompose(f).squarefree_part()
    iso = _Isolator(g)
    lo, hi = interval.lo, interval.hi
    while hi - lo >= width and lo != hi:
        lo, hi = iso.bisect(lo, hi)
    return IsolatingInterval(lo, hi, interval.root_multiplicity)


def separate_from(f: Poly, interval: IsolatingInterval, x: Fraction) -> IsolatingInterval:
    """Refine ``interval`` until ``x`` lies outside its closure; ``x`` must not be its root."""
    if interval.is_exact:
        if interval.lo == x:
            raise PreconditionError("point coincides with the isolated root")
        return interval
    if f(x) == 0 and interval.lo < x < interval.hi:
        raise PreconditionError("point is a root inside the interval")
    g = squarefree_decompose(f).squarefree_part()
    iso = _Isolator(g)
    lo, hi = interval.lo, interval.hi
    while lo <= x <= hi and lo != hi:
        lo, hi = iso.bisect(lo, hi)
    return IsolatingInterval(lo, hi, interval.root_multiplicity)
