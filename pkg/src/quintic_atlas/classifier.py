"""Sign-condition classification of real monic quintics.

:func:`classify_real` walks the closed-form decision tree over the exact signs
of the invariants and returns one of 22 leaves; :func:`classify_complex` gives
the complex multiplicity class. Sign patterns that the Sturm analysis rules out
raise :class:`InternalInconsistency` instead of being ignored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import InternalInconsistency, PreconditionError
from .invariants import QuinticCoeffs, QuinticInvariants, compute_invariants, evaluate_table
from .polycore import Poly
from .sturm import IsolatingInterval, isolate_real_roots, separate_from

# leaf -> (description, real multiplicities left to right, conjugate-pair multiplicities)
LEAVES: dict[str, tuple[str, tuple[int, ...], tuple[int, ...]]] = {
    "1": ("five distinct real roots", (1, 1, 1, 1, 1), ()),
    "2": ("three simple real roots and one conjugate pair", (1, 1, 1), (1,)),
    "3": ("one simple real root and two distinct conjugate pairs", (1,), (1, 1)),
    "4a": ("double real root and three simple: simple < double < simple < simple", (1, 2, 1, 1), ()),
    "4b": ("double real root and three simple: double < simple < simple < simple", (2, 1, 1, 1), ()),
    "4c": ("double real root and three simple: simple < simple < simple < double", (1, 1, 1, 2), ()),
    "4d": ("double real root and three simple: simple < simple < double < simple", (1, 1, 2, 1), ()),
    "5a": ("double and simple real root with a conjugate pair: simple < double", (1, 2), (1,)),
    "5b": ("double and simple real root with a conjugate pair: double < simple", (2, 1), (1,)),
    "6a": ("two real double roots and a simple one: simple < double < double", (1, 2, 2), ()),
    "6b": ("two real double roots and a simple one: double < simple < double", (2, 1, 2), ()),
    "6c": ("two real double roots and a simple one: double < double < simple", (2, 2, 1), ()),
    "7": ("a conjugate pair of double roots and one simple real root", (1,), (2,)),
    "8a": ("triple real root and two simple: triple < simple < simple", (3, 1, 1), ()),
    "8b": ("triple real root and two simple: simple < triple < simple", (1, 3, 1), ()),
    "8c": ("triple real root and two simple: simple < simple < triple", (1, 1, 3), ()),
    "9": ("triple real root and one conjugate pair", (3,), (1,)),
    "10a": ("quadruple and simple real root: quadruple < simple", (4, 1), ()),
    "10b": ("quadruple and simple real root: simple < quadruple", (1, 4), ()),
    "11a": ("triple and double real root: triple < double", (3, 2), ()),
    "11b": ("triple and double real root: double < triple", (2, 3), ()),
    "12": ("one quintuple real root", (5,), ()),
}
LEAF_IDS = tuple(LEAVES)
_BY_PATTERN = {(real, pairs): leaf for leaf, (_, real, pairs) in LEAVES.items()}


class ComplexMultiplicity(enum.Enum):
    FIVE_DISTINCT = (1, 1, 1, 1, 1)
    DOUBLE_THREE_SINGLE = (2, 1, 1, 1)
    TWO_DOUBLE_SINGLE = (2, 2, 1)
    TRIPLE_TWO_SINGLE = (3, 1, 1)
    QUADRUPLE_SINGLE = (4, 1)
    TRIPLE_DOUBLE = (3, 2)
    QUINTUPLE = (5,)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return self.value

    @property
    def row(self) -> int:
        return list(ComplexMultiplicity).index(self) + 1

    @classmethod
    def from_multiset(cls, mults) -> "ComplexMultiplicity":
        return cls(tuple(sorted(mults, reverse=True)))


@dataclass(frozen=True)
class RealConfiguration:
    leaf: str
    description: str
    ordering: tuple[int, ...]
    pairs: tuple[int, ...] = ()
    detail: str = ""

    @classmethod
    def of(cls, leaf: str, detail: str = "") -> "RealConfiguration":
        desc, real, pairs = LEAVES[leaf]
        return cls(leaf, desc, real, pairs, detail)

    @property
    def distinct_real_roots(self) -> int:
        return len(self.ordering)

    @property
    def multiset(self) -> tuple[int, ...]:
        """All complex multiplicities, each pair counted as two roots."""
        return tuple(sorted(self.ordering + self.pairs + self.pairs, reverse=True))

    def __eq__(self, other):
        if isinstance(other, RealConfiguration):
            return self.leaf == other.leaf
        return NotImplemented

    def __hash__(self):
        return hash(self.leaf)


def leaf_from_pattern(real: tuple[int, ...], pairs: tuple[int, ...]) -> str:
    """Leaf id for a left-to-right real multiplicity pattern and conjugate-pair multiplicities."""
    key = (tuple(real), tuple(sorted(pairs)))
    if sum(real) + 2 * sum(pairs) != 5:
        raise ValueError(f"root pattern {key} does not describe a quintic")
    try:
        return _BY_PATTERN[key]
    except KeyError:
        raise ValueError(f"no configuration leaf for pattern {key}") from None


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_count_from_leads(signs: tuple[int, ...], degrees: tuple[int, ...]) -> int:
    """``V(-inf) - V(+inf)`` for a chain with the given leading signs and degrees."""

    def var(seq):
        n, prev = 0, 0
        for s in seq:
            if s:
                n += prev and s != prev
                prev = s
        return n

    at_minus = tuple(s * (-1) ** d for s, d in zip(signs, degrees))
    return var(at_minus) - var(signs)


def _check_count(inv_signs, degrees, expected: int, where: str) -> None:
    got = sturm_count_from_leads(inv_signs, degrees)
    if got != expected:
        raise InternalInconsistency(
            f"{where}: lead signs {inv_signs} give {got} real roots, configuration needs {expected}"
        )


def _need(value: Optional[Fraction], name: str) -> Fraction:
    if value is None:
        raise InternalInconsistency(f"{name} is undefined where the decision tree needs its sign")
    return value


def order_leaf4(f1: Optional[Fraction], f2: Optional[Fraction], f3: Optional[Fraction]) -> str:
    """Place the double root among three simple real roots."""
    f2 = _need(f2, "F2")
    if f2 == 0:
        raise InternalInconsistency("F2 = 0 with a double and three simple real roots")
    f1, f3 = _need(f1, "F1"), _need(f3, "F3")
    if f1 > 0 and f2 > 0 and f3 > 0:
        return "4c"
    if f1 > 0 and f2 < 0 and f3 < 0:
        return "4b"
    return "4a" if f2 > 0 else "4d"


class CubicMode(enum.Enum):
    THREE_REAL = "three-real-roots"
    ONE_REAL = "one-real-root"


@dataclass(frozen=True)
class CubicPositiveCount:
    count: int
    mode: CubicMode


def cubic_positive_count(p3: Fraction, q3: Fraction, r3: Fraction, mode: CubicMode | str) -> CubicPositiveCount:
    """Positive roots of ``y^3 + p3 y^2 + q3 y + r3`` whose real roots are all simple."""
    mode = CubicMode(mode)
    if r3 == 0:
        raise PreconditionError("cubic has a root at the origin")
    if mode is CubicMode.ONE_REAL:
        return CubicPositiveCount(0 if r3 > 0 else 1, mode)
    if q3 > 0 and r3 > 0 and p3 * q3 - 9 * r3 > 0:
        n = 0
    elif q3 > 0 and r3 < 0 and p3 * q3 - 9 * r3 < 0:
        n = 3
    else:
        n = 2 if r3 > 0 else 1
    return CubicPositiveCount(n, mode)


def classify_real(c: QuinticCoeffs, inv: QuinticInvariants | None = None) -> RealConfiguration:
    inv = inv or compute_invariants(c)
    D, L3, L2, L1 = inv.D, inv.L3, inv.L2, inv.L1
    sD, s3, s2, s1 = _sgn(D), _sgn(L3), _sgn(L2), _sgn(L1)
    if s3 == 0 and s2 > 0:
        raise InternalInconsistency("L2 > 0 while L3 = 0")

    if sD != 0:
        if sD < 0:
            leaf, detail = "2", ""
        elif s3 > 0 and s2 > 0 and s1 > 0:
            leaf, detail = "1", ""
        else:
            leaf = "3"
            detail = "non-positive: " + ",".join(n for n, s in (("L3", s3), ("L2", s2), ("L1", s1)) if s <= 0)
        if s3 and s2 and s1:
            _check_count((1, 1, s3, s2, s1, sD), (5, 4, 3, 2, 1, 0), len(LEAVES[leaf][1]), "distinct roots")
        return RealConfiguration.of(leaf, detail)

    if s1 > 0:
        if not (s3 > 0 and s2 > 0):
            raise InternalInconsistency(f"four distinct real roots need L3 > 0 and L2 > 0, got signs {s3}, {s2}")
        _check_count((1, 1, s3, s2, s1), (5, 4, 3, 2, 1), 4, "double root")
        return RealConfiguration.of(order_leaf4(inv.F1, inv.F2, inv.F3))

    if s1 < 0:
        if s3 and s2:
            _check_count((1, 1, s3, s2, s1), (5, 4, 3, 2, 1), 2, "double root")
        elif s2 == 0 and s3 < 0:
            raise InternalInconsistency("L2 = 0 with a double root forces L3 > 0")
        f2 = _need(inv.F2, "F2")
        if f2 == 0:
            raise InternalInconsistency("F2 = 0 with a double, a simple and a complex pair")
        return RealConfiguration.of("5a" if f2 > 0 else "5b")

    if s2 != 0:
        D2 = inv.D2
        if D2 > 0:
            if s3:
                _check_count((1, 1, s3, s2), (5, 4, 3, 2), 3, "two double roots")
            f4, f5 = _need(inv.F4, "F4"), _need(inv.F5, "F5")
            if f4 < 0:
                return RealConfiguration.of("6b")
            if f4 == 0 or f5 == 0:
                raise InternalInconsistency(f"F4 = {f4}, F5 = {f5} with two real double roots")
            return RealConfiguration.of("6a" if f5 < 0 else "6c")
        if D2 < 0:
            if s3:
                _check_count((1, 1, s3, s2), (5, 4, 3, 2), 1, "complex double roots")
            return RealConfiguration.of("7")
        if s2 < 0:
            if s3:
                _check_count((1, 1, s3, s2), (5, 4, 3, 2), 1, "triple root")
            return RealConfiguration.of("9")
        if s3 == 0:
            raise InternalInconsistency("triple root with three real roots needs L3 != 0")
        _check_count((1, 1, s3, s2), (5, 4, 3, 2), 3, "triple root")
        f6 = _need(inv.F6, "F6")
        if f6 < 0:
            return RealConfiguration.of("8b")
        f7 = _need(inv.F7, "F7")
        if f6 == 0 or f7 == 0:
            raise InternalInconsistency(f"F6 = {f6}, F7 = {f7} with a triple and two simple real roots")
        return RealConfiguration.of("8a" if f7 < 0 else "8c")

    if s3 == 0:
        return RealConfiguration.of("12")
    _check_count((1, 1, s3), (5, 4, 3), 2, "gcd of degree 3")
    if inv.M1 == 0:
        c4 = _need(inv.C4, "C4")
        if c4 == 0:
            raise InternalInconsistency("C4 = 0 with a quadruple and a simple root")
        return RealConfiguration.of("10a" if c4 > 0 else "10b")
    c5 = _need(inv.C5, "C5")
    if c5 == 0:
        raise InternalInconsistency("C5 = 0 with a triple and a double root")
    return RealConfiguration.of("11a" if c5 > 0 else "11b")


def classify_complex(c: QuinticCoeffs, inv: QuinticInvariants | None = None) -> ComplexMultiplicity:
    inv = inv or compute_invariants(c)
    if inv.D:
        return ComplexMultiplicity.FIVE_DISTINCT
    if inv.L1:
        return ComplexMultiplicity.DOUBLE_THREE_SINGLE
    if inv.L2:
        return ComplexMultiplicity.TWO_DOUBLE_SINGLE if inv.D2 else ComplexMultiplicity.TRIPLE_TWO_SINGLE
    if not inv.L3:
        return ComplexMultiplicity.QUINTUPLE
    return ComplexMultiplicity.QUADRUPLE_SINGLE if inv.M1 == 0 else ComplexMultiplicity.TRIPLE_DOUBLE


@dataclass(frozen=True)
class WitnessRoot:
    """A real root of the quintic; ``value`` is exact, or an isolating interval."""

    value: Union[Fraction, IsolatingInterval]
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def position(self) -> Fraction:
        return self.value if self.is_exact else self.value.lo


def _divide_out(f: Poly, factor: Poly, times: int) -> Poly:
    for _ in range(times):
        f, rem = divmod(f, factor)
        if rem:
            raise InternalInconsistency(f"witness factor {factor} does not divide the quintic {times} times")
    return f


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _simple_roots(cofactor: Poly, exact: list[Fraction]) -> list[WitnessRoot]:
    out = []
    if cofactor.degree < 1:
        return out
    for iv in isolate_real_roots(cofactor):
        for x in exact:
            iv = separate_from(cofactor, iv, x)
        out.append(WitnessRoot(iv.lo if iv.is_exact else iv, iv.root_multiplicity))
    return out


def witness_roots(c: QuinticCoeffs, leaf: RealConfiguration | str | None = None,
                  inv: QuinticInvariants | None = None) -> list[WitnessRoot]:
    """Real roots of a quintic with a multiple real root, left to right.

    Multiple roots come from the closed-form shift formulas and are exact
    (or, for two irrational double roots, isolating intervals of the
    degree-2 remainder); the remaining simple real roots come as isolating
    intervals. Every formula root is checked by exact repeated division.
    """
    inv = inv or compute_invariants(c)
    if leaf is None:
        leaf = classify_real(c, inv)
    leaf_id = leaf.leaf if isinstance(leaf, RealConfiguration) else str(leaf)
    group = leaf_id.rstrip("abcd")
    f = c.poly
    multiple: list[tuple[Fraction, int]] = []
    intervals: list[WitnessRoot] = []

    if group in ("4", "5"):
        if not inv.C1:
            raise InternalInconsistency("C1 = 0 in a double-root leaf")
        multiple = [(inv.C0 / inv.C1, 2)]
    elif group in ("8", "9"):
        if not inv.L2:
            raise InternalInconsistency("L2 = 0 in a triple-root leaf")
        multiple = [(inv.C21 / inv.L2, 3)]
    elif group == "6":
        if not inv.L2:
            raise InternalInconsistency("L2 = 0 with two double roots")
        single = inv.C3 / inv.L2
        h = Poly([inv.C20, -2 * inv.C21, inv.L2]).monic()
        _divide_out(f, h, 2)
        root = _rational_sqrt(h[1] ** 2 / 4 - h[0])
        if root is not None:
            mid = -h[1] / 2
            multiple = [(mid - root, 2), (mid + root, 2), (single, 1)]
        else:
            for iv in isolate_real_roots(h):
                iv = separate_from(h, iv, single)
                intervals.append(WitnessRoot(IsolatingInterval(iv.lo, iv.hi, 2), 2))
            multiple = [(single, 1)]
    elif group == "10":
        if not inv.L3:
            raise InternalInconsistency("L3 = 0 with a quadruple root")
        quad = (5 * c.r - c.p * c.q) / (2 * inv.L3)
        multiple = [(quad, 4), (quad + inv.C4, 1)]
    elif group == "11":
        if not inv.M1:
            raise InternalInconsistency("M1 = 0 with a triple and a double root")
        triple = -evaluate_table("M1_CONST", c) / inv.M1
        multiple = [(triple, 3), ((-c.p - 3 * triple) / 2, 2)]
    elif group == "12":
        multiple = [(-c.p / 5, 5)]
    else:
        raise PreconditionError(f"leaf {leaf_id} has no multiple real root")

    cofactor = f if not intervals else f // (h * h)
    for x, m in multiple:
        lin = Poly([-x, 1])
        cofactor = _divide_out(cofactor, lin, m)
        if m > 1 and cofactor(x) == 0:
            raise InternalInconsistency(f"root {x} has multiplicity above {m}")
    roots = [WitnessRoot(x, m) for x, m in multiple] + intervals
    roots += _simple_roots(cofactor, [x for x, _ in multiple])
    roots.sort(key=WitnessRoot.position)
    return roots
