"""Closed-form invariants of the monic quintic ``x^5 + p x^4 + q x^3 + r x^2 + s x + t``.

The big polynomials live in :mod:`._formulas` as monomial tables. They are
evaluated over the integers: with ``lam`` the lcm of the coefficient
denominators, ``(lam p, lam^2 q, ..., lam^5 t)`` is an integer point, and a
table of weighted degree ``w`` scales by exactly ``lam**w``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional, Sequence

from . import _formulas, kernels
from .polycore import Poly, discriminant
from .sturm import SturmChain, sturm_chain

WEIGHTS = (1, 2, 3, 4, 5)


class Table(NamedTuple):
    name: str
    exps: tuple[int, ...]
    coeffs: tuple[int, ...]
    weight: int
    denominator: int


def _build_table(name: str) -> Table:
    terms = getattr(_formulas, name)
    weights = {sum(w * e for w, e in zip(WEIGHTS, ex)) for _, ex in terms}
    if len(weights) != 1:
        raise ImportError(f"formula table {name} is not weighted-homogeneous: {sorted(weights)}")
    exps = tuple(e for _, ex in terms for e in ex)
    coeffs = tuple(c for c, _ in terms)
    return Table(name, exps, coeffs, weights.pop(), _formulas.DENOMINATORS.get(name, 1))


TABLE_NAMES = (
    "DISCRIMINANT", "L3", "L2", "L1", "D2", "M1", "C0", "C1", "C21", "C20", "C3",
    "C5_NUM", "D3", "GCDDEG1_LEAD", "GCDDEG1_CONST", "M1_CONST",
)
TABLES = {name: _build_table(name) for name in TABLE_NAMES}


@dataclass(frozen=True)
class QuinticCoeffs:
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, f.name, Fraction(v))

    @classmethod
    def of(cls, values: Sequence) -> "QuinticCoeffs":
        if len(values) != 5:
            raise ValueError(f"expected 5 coefficients (p, q, r, s, t), got {len(values)}")
        return cls(*values)

    @classmethod
    def from_poly(cls, f: Poly) -> "QuinticCoeffs":
        """Monic associate of a degree-5 polynomial."""
        if f.degree != 5:
            raise ValueError(f"expected a quintic, got degree {f.degree}")
        m = f.monic()
        return cls(m[4], m[3], m[2], m[1], m[0])

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.p, self.q, self.r, self.s, self.t)

    @property
    def poly(self) -> Poly:
        return Poly([self.t, self.s, self.r, self.q, self.p, 1])

    def integer_scaling(self) -> tuple[int, tuple[int, ...]]:
        lam = lcm(*(c.denominator for c in self.as_tuple()))
        pt = tuple(int(c * lam**w) for c, w in zip(self.as_tuple(), WEIGHTS))
        return lam, pt


def evaluate_table(name: str, c: QuinticCoeffs, _scaled=None) -> Fraction:
    tab = TABLES[name]
    lam, pt = _scaled or c.integer_scaling()
    val = kernels.eval_table(tab.exps, tab.coeffs, pt)
    return Fraction(val, lam**tab.weight * tab.denominator)


@dataclass(frozen=True)
class QuinticInvariants:
    D: Fraction
    L3: Fraction
    L2: Fraction
    L1: Fraction
    D2: Fraction
    M1: Fraction
    D3: Fraction
    C0: Fraction
    C1: Fraction
    C21: Fraction
    C20: Fraction
    C3: Fraction
    D22: Fraction
    C4: Optional[Fraction] = None
    C5: Optional[Fraction] = None
    F1: Optional[Fraction] = None
    F2: Optional[Fraction] = None
    F3: Optional[Fraction] = None
    F4: Optional[Fraction] = None
    F5: Optional[Fraction] = None
    F6: Optional[Fraction] = None
    F7: Optional[Fraction] = None

    def as_dict(self) -> dict[str, Optional[Fraction]]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


CORE_FIELDS = ("D", "L3", "L2", "L1", "D2", "M1", "D3", "C0", "C1", "C21", "C20", "C3", "D22")
OPTIONAL_FIELDS = ("C4", "C5", "F1", "F2", "F3", "F4", "F5", "F6", "F7")


def compute_invariants(c: QuinticCoeffs) -> QuinticInvariants:
    scaled = c.integer_scaling()
    ev = {name: evaluate_table(name, c, scaled) for name in TABLE_NAMES}
    p, q, r = c.p, c.q, c.r
    L3, L2, C0, C1 = ev["L3"], ev["L2"], ev["C0"], ev["C1"]
    C21, C20, C3 = ev["C21"], ev["C20"], ev["C3"]
    opt: dict[str, Fraction] = {}
    if L3:
        opt["C4"] = -(4 * p**3 - 15 * p * q + 25 * r) / (2 * L3)
        opt["C5"] = Fraction(27, 4) * ev["C5_NUM"] / L3**3
    if C1:
        d = C0 / C1
        opt["F1"] = q + 4 * p * d + 10 * d**2
        opt["F2"] = r + 3 * q * d + 6 * p * d**2 + 10 * d**3
        opt["F3"] = p * q + 4 * p**2 * d - 24 * p * d**2 - 22 * q * d - 40 * d**3 - 9 * r
    if L2:
        e, g = C21 / L2, C3 / L2
        opt["F4"] = g**2 + C20 / L2 - 2 * g * e
        opt["F5"] = 2 * (g - e)
        opt["F6"] = q + 4 * p * e + 10 * e**2
        opt["F7"] = p + 5 * e
    return QuinticInvariants(
        D=ev["DISCRIMINANT"], L3=L3, L2=L2, L1=ev["L1"], D2=ev["D2"], M1=ev["M1"],
        D3=ev["D3"], C0=C0, C1=C1, C21=C21, C20=C20, C3=C3,
        D22=-4 * q * L2**2 - 6 * p * C21 * L2 - 15 * C21**2 + L2**2 * p**2,
        **opt,
    )


def product_forms(c: QuinticCoeffs, inv: QuinticInvariants | None = None) -> dict[str, Fraction]:
    """Numerator times denominator for each rational-function invariant.

    Each value has the sign of the corresponding rational function wherever
    that function is defined.
    """
    inv = inv or compute_invariants(c)
    p, q, r = c.p, c.q, c.r
    C0, C1, L2, L3 = inv.C0, inv.C1, inv.L2, inv.L3
    C21, C20, C3 = inv.C21, inv.C20, inv.C3
    out = {
        "C4": -(4 * p**3 - 15 * p * q + 25 * r) * 2 * L3,
        "C5": evaluate_table("C5_NUM", c) * L3**3,
        "F1": (q * C1**2 + 4 * p * C0 * C1 + 10 * C0**2) * C1**2,
        "F2": (r * C1**3 + 3 * q * C0 * C1**2 + 6 * p * C0**2 * C1 + 10 * C0**3) * C1**3,
        "F3": (p * q * C1**3 + 4 * p**2 * C1**2 * C0 - 24 * p * C0**2 * C1
               - 22 * q * C0 * C1**2 - 40 * C0**3 - 9 * r * C1**3) * C1**3,
        "F4": (C3**2 + C20 * L2 - 2 * C3 * C21) * L2**2,
        "F5": (2 * C3 - 2 * C21) * L2,
        "F6": (q * L2**2 + 4 * p * C21 * L2 + 10 * C21**2) * L2**2,
        "F7": (p * L2 + 5 * C21) * L2,
    }
    return out


def quintic_gcddeg_chain(c: QuinticCoeffs) -> SturmChain:
    return sturm_chain(c.poly)


def gcddeg3(c: QuinticCoeffs) -> Poly:
    p, q, r, s, t = c.as_tuple()
    return Poly([
        -t + p * s / 25,
        -(Fraction(4, 5) * s - Fraction(2, 25) * p * r),
        -(Fraction(3, 5) * r - Fraction(3, 25) * p * q),
        -(Fraction(2, 5) * q - Fraction(4, 25) * p**2),
    ])


def gcddeg2(c: QuinticCoeffs, inv: QuinticInvariants) -> Poly:
    """Degree-2 remainder; requires ``L3 != 0``."""
    k = Fraction(25, 4) / inv.L3**2
    return Poly([k * inv.C20, -2 * k * inv.C21, k * inv.L2])


def gcddeg1(c: QuinticCoeffs, inv: QuinticInvariants) -> Poly:
    """Degree-1 remainder; requires ``L3 != 0`` and ``L2 != 0``."""
    lead = evaluate_table("GCDDEG1_LEAD", c)
    const = evaluate_table("GCDDEG1_CONST", c)
    return Poly([-Fraction(4, 25) * const / inv.L2**2, Fraction(8, 25) * lead / inv.L2**2])


def gcddeg0(c: QuinticCoeffs, inv: QuinticInvariants) -> Poly:
    """Constant remainder; requires ``L3``, ``L2`` and ``L1`` nonzero."""
    return Poly([25 * inv.L2**2 * inv.D / (4 * inv.L1**2 * inv.L3**2)])


def sylvester_discriminant(c: QuinticCoeffs) -> Fraction:
    return discriminant(c.poly)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    applicable: bool
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    coeffs: QuinticCoeffs
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks if ch.applicable)


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def verify_identities(c: QuinticCoeffs) -> IdentityReport:
    inv = compute_invariants(c)
    chain = quintic_gcddeg_chain(c)
    members = list(chain.polys) + [Poly()] * (6 - len(chain))
    checks = []

    # (a) the constant remainder carries 25 L2^2 D over 4 L1^2 L3^2
    if inv.L3 and inv.L2 and inv.L1:
        c0 = members[5][0]
        checks.append(IdentityCheck(
            "gcddeg0-numerator", True, c0 * 4 * inv.L1**2 * inv.L3**2 == 25 * inv.L2**2 * inv.D,
            f"chain constant {c0}",
        ))
    else:
        checks.append(IdentityCheck("gcddeg0-numerator", False, True, "needs L3, L2, L1 nonzero"))

    # (b) leading-coefficient signs along the literal chain
    ok = True
    notes = []
    g3 = members[2]
    if inv.L3:
        ok &= g3.degree == 3 and _sgn(g3.lead) == _sgn(inv.L3)
        notes.append("gcddeg3")
        g2 = members[3]
        if inv.L2:
            ok &= g2.degree == 2 and _sgn(g2.lead) == _sgn(inv.L2)
            notes.append("gcddeg2")
            g1 = members[4]
            if inv.L1:
                ok &= g1.degree == 1 and _sgn(g1.lead) == _sgn(inv.L1)
                notes.append("gcddeg1")
            else:
                ok &= g1.degree < 1
        else:
            ok &= g2.degree < 2
    else:
        ok &= g3.degree < 3
    checks.append(IdentityCheck("lead-signs", True, bool(ok), ",".join(notes)))

    # the closed-form remainders equal the computed chain members exactly
    ok = members[2] == gcddeg3(c)
    if inv.L3:
        ok &= members[3] == gcddeg2(c, inv)
        if inv.L2:
            ok &= members[4] == gcddeg1(c, inv)
    checks.append(IdentityCheck("gcddeg-formulas", True, bool(ok)))

    # (c)
    checks.append(IdentityCheck("C1-equals-L1", True, inv.C1 == inv.L1))

    # (d)
    if not inv.L3 and not inv.L2:
        want = -64 * (c.p**4 - 125 * c.s) ** 3 / 390625
        checks.append(IdentityCheck("L1-on-L3-L2-zero", True, inv.L1 == want, f"L1={inv.L1}"))
    else:
        checks.append(IdentityCheck("L1-on-L3-L2-zero", False, True, "needs L3 = L2 = 0"))

    # (e)
    if inv.L3 and not inv.L2:
        checks.append(IdentityCheck("L1-nonpositive-on-L2-zero", True, inv.L1 <= 0, f"L1={inv.L1}"))
    else:
        checks.append(IdentityCheck("L1-nonpositive-on-L2-zero", False, True, "needs L2 = 0, L3 != 0"))

    return IdentityReport(c, tuple(checks))
