"""Exact dense univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction`. A :class:`Poly` stores its coefficients
low degree first, with no zero stored above the degree; the zero polynomial has
an empty coefficient tuple and degree ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DomainError

Number = Union[int, Fraction]


def _frac(c: Number) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Immutable dense polynomial with :class:`Fraction` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "Poly":
        out = cls([1])
        for rt in roots:
            out = out * cls([-_frac(rt), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly | Number") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Number) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise DomainError("negative polynomial power")
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __call__(self, x0: Number) -> Fraction:
        return evaluate(self, x0)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def derivative(self) -> "Poly":
        return derivative(self)

    def shift(self, a: Number) -> "Poly":
        """Return ``f(x + a)``."""
        a = _frac(a)
        out = Poly()
        lin = Poly([a, 1])
        for c in reversed(self.coeffs):
            out = out * lin + Poly([c])
        return out

    def integer_form(self) -> tuple[int, ...]:
        """Primitive integer coefficients, a positive multiple of ``self``."""
        if not self.coeffs:
            return ()
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = abs(reduce(igcd, ints))
        return tuple(v // g for v in ints)


def _as_poly(x: "Poly | Number") -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown polynomial operation {op!r}")


def derivative(f: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(f.coeffs) if i)


def evaluate(f: Poly, x0: Number) -> Fraction:
    x0 = _frac(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero():
        raise DomainError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.lead
    if len(rem) - 1 < db:
        return Poly(), a
    quo = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lb
        quo[k] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[k + j] -= c * bc
    return Poly(quo), Poly(rem[:db])


def _int_prem_primitive(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of the pseudo-remainder of integer polys ``a`` by ``b``."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        while r and r[-1] == 0:
            r.pop()
    if not r:
        return []
    g = abs(reduce(igcd, r))
    return [x // g for x in r]


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor, via a primitive integer remainder sequence."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd of two zero polynomials")
    if b.is_zero():
        return a.monic()
    if a.is_zero():
        return b.monic()
    x, y = list(a.integer_form()), list(b.integer_form())
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prem_primitive(x, y)
    return Poly(x).monic()


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """``f = c * prod(g**m for g, m in factors)`` with monic, square-free, coprime ``g``."""

    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly([1])
        for g, m in self.factors:
            out = out * g**m
        return out

    def squarefree_part(self) -> Poly:
        out = Poly([1])
        for g, _ in self.factors:
            out = out * g
        return out


def squarefree_decompose(f: Poly) -> SquareFreeDecomposition:
    """Yun's algorithm over the rationals."""
    if f.degree < 1:
        raise DomainError("square-free decomposition needs a non-constant polynomial")
    f = f.monic()
    fp = derivative(f)
    a = gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - derivative(b)
    factors = []
    i = 1
    while b.degree >= 1:
        g = gcd(b, d) if d else b.monic()
        if g.degree >= 1:
            factors.append((g, i))
        b = b // g
        c = d // g
        d = c - derivative(b)
        i += 1
    return SquareFreeDecomposition(tuple(factors))


def sylvester_matrix(f: Poly, g: Poly) -> list[list[Fraction]]:
    m, n = f.degree, g.degree
    if m < 1 or n < 0:
        raise DomainError("Sylvester matrix needs deg f >= 1 and g nonzero")
    size = m + n
    rows = []
    fc, gc = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def determinant(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[_frac(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        for r in range(col + 1, n):
            factor = a[r][col] / pv
            if factor:
                row_r, row_c = a[r], a[col]
                for k in range(col, n):
                    row_r[k] -= factor * row_c[k]
    return det


def resultant(f: Poly, g: Poly) -> Fraction:
    return determinant(sylvester_matrix(f, g))


def discriminant(f: Poly) -> Fraction:
    """``(-1)**(n(n-1)/2) * Res(f, f') / lead(f)``."""
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) / f.lead
