"""Ground-truth construction and a brute-force cross-check of the classifier.

The independent path uses only square-free decomposition and Sturm isolation;
it never looks at the closed-form invariants.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .classifier import (
    LEAF_IDS,
    LEAVES,
    ComplexMultiplicity,
    RealConfiguration,
    classify_complex,
    classify_real,
    leaf_from_pattern,
)
from .errors import DomainError, InternalInconsistency
from .invariants import QuinticCoeffs
from .polycore import Poly, squarefree_decompose
from .sturm import IsolatingInterval, count_real_roots, isolate_real_roots, sturm_chain, _Isolator


@dataclass(frozen=True)
class RootSpec:
    real_roots: tuple[tuple[Fraction, int], ...] = ()
    conjugate_pairs: tuple[tuple[Fraction, Fraction, int], ...] = ()

    def __post_init__(self):
        reals = tuple((Fraction(v), int(m)) for v, m in self.real_roots)
        pairs = tuple((Fraction(a), Fraction(b), int(m)) for a, b, m in self.conjugate_pairs)
        object.__setattr__(self, "real_roots", reals)
        object.__setattr__(self, "conjugate_pairs", pairs)
        if any(m < 1 for *_, m in reals + pairs):
            raise DomainError("multiplicities must be positive")
        total = sum(m for _, m in reals) + 2 * sum(m for *_, m in pairs)
        if total != 5:
            raise DomainError(f"root multiplicities sum to {total}, not 5")
        vals = [v for v, _ in reals]
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise DomainError("real roots must be strictly increasing")
        if any(im <= 0 for _, im, _ in pairs):
            raise DomainError("conjugate pair imaginary parts must be positive")
        if len({(a, b) for a, b, _ in pairs}) != len(pairs):
            raise DomainError("conjugate pairs must be distinct")

    @property
    def forced_leaf(self) -> str:
        return leaf_from_pattern(tuple(m for _, m in self.real_roots),
                                 tuple(m for *_, m in self.conjugate_pairs))

    def poly(self) -> Poly:
        f = Poly([1])
        for v, m in self.real_roots:
            f = f * Poly([-v, 1]) ** m
        for a, b, m in self.conjugate_pairs:
            f = f * Poly([a * a + b * b, -2 * a, 1]) ** m
        return f


def build_quintic(spec: RootSpec) -> tuple[QuinticCoeffs, RealConfiguration]:
    return QuinticCoeffs.from_poly(spec.poly()), RealConfiguration.of(spec.forced_leaf)


def independent_classify(c: QuinticCoeffs) -> RealConfiguration:
    f = c.poly
    dec = squarefree_decompose(f)
    roots: list[tuple[IsolatingInterval, _Isolator | None]] = []
    pairs: list[int] = []
    for g, m in dec.factors:
        ivs = isolate_real_roots(g)
        iso = _Isolator(g)
        for iv in ivs:
            roots.append((IsolatingInterval(iv.lo, iv.hi, m), iso))
        nonreal = g.degree - len(ivs)
        if nonreal % 2:
            raise InternalInconsistency(f"factor {g} has an odd number of non-real roots")
        pairs += [m] * (nonreal // 2)
    # refine roots from different factors until the intervals are pairwise disjoint
    while True:
        roots.sort(key=lambda r: (r[0].lo, r[0].hi))
        clash = None
        for i in range(len(roots) - 1):
            a, b = roots[i][0], roots[i + 1][0]
            if _overlap(a, b):
                clash = i
                break
        if clash is None:
            break
        for j in (clash, clash + 1):
            iv, iso = roots[j]
            if not iv.is_exact:
                lo, hi = iso.bisect(iv.lo, iv.hi)
                roots[j] = (IsolatingInterval(lo, hi, iv.root_multiplicity), iso)
    real = tuple(iv.root_multiplicity for iv, _ in roots)
    return RealConfiguration.of(leaf_from_pattern(real, tuple(sorted(pairs))))


def _overlap(a: IsolatingInterval, b: IsolatingInterval) -> bool:
    # open intervals; a point interval sits strictly inside or apart
    if a.is_exact and b.is_exact:
        return a.lo == b.lo
    if a.is_exact:
        return b.lo < a.lo < b.hi
    if b.is_exact:
        return a.lo < b.lo < a.hi
    return a.lo < b.hi and b.lo < a.hi


# ---------------------------------------------------------------------------
# generation

GRID_NUM = 20
GRID_DEN = (1, 2, 3, 4, 5)


def _grid_value(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-GRID_NUM, GRID_NUM), rng.choice(GRID_DEN))


def _grid_positive(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, GRID_NUM), rng.choice(GRID_DEN))


def random_spec(leaf: str, rng: random.Random) -> RootSpec:
    """Random root multiset realizing ``leaf``, drawn from the rational grid."""
    _, real, pair_mults = LEAVES[leaf]
    vals: set[Fraction] = set()
    while len(vals) < len(real):
        vals.add(_grid_value(rng))
    ordered = sorted(vals)
    pairs = []
    seen = set()
    for m in pair_mults:
        while True:
            key = (_grid_value(rng), _grid_positive(rng))
            if key not in seen:
                seen.add(key)
                break
        pairs.append((key[0], key[1], m))
    return RootSpec(tuple(zip(ordered, real)), tuple(pairs))


def random_integer_quintic(rng: random.Random, bound: int) -> QuinticCoeffs:
    return QuinticCoeffs(*(rng.randint(-bound, bound) for _ in range(5)))


def trial_rng(seed: int, mode: str, i: int) -> random.Random:
    return random.Random(f"{seed}-{mode}-{i}")


# ---------------------------------------------------------------------------
# cross check


@dataclass(frozen=True)
class Failure:
    coeffs: tuple[Fraction, ...]
    expected: str
    got: str
    reason: str = ""


@dataclass(frozen=True)
class TrialResult:
    index: int
    coeffs: tuple[Fraction, ...]
    expected: str
    got: str
    ok: bool
    reason: str = ""


@dataclass
class CrossCheckReport:
    mode: str
    seed: int
    trials: int = 0
    agreements: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    results: list[TrialResult] = field(default_factory=list, repr=False)
    leaf_counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def write_jsonl(self, path) -> None:
        with open(path, "w") as fh:
            for r in self.results:
                fh.write(json.dumps({
                    "trial": r.index,
                    "coeffs": [_fmt(x) for x in r.coeffs],
                    "expected": r.expected,
                    "got": r.got,
                    "verdict": "pass" if r.ok else "fail",
                    **({"reason": r.reason} if r.reason else {}),
                }) + "\n")


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _run_trial(args: tuple[str, int, int, int]) -> TrialResult:
    mode, seed, i, bound = args
    rng = trial_rng(seed, mode, i)
    if mode == "leaves":
        forced = LEAF_IDS[i % len(LEAF_IDS)]
        spec = random_spec(forced, rng)
        c, _ = build_quintic(spec)
        mults = tuple(m for _, m in spec.real_roots) + 2 * tuple(m for *_, m in spec.conjugate_pairs)
    else:
        c = random_integer_quintic(rng, bound)
        forced = None
    try:
        got = classify_real(c)
        indep = independent_classify(c)
        cplx = classify_complex(c)
    except InternalInconsistency as exc:
        return TrialResult(i, c.as_tuple(), forced or "?", "error", False, str(exc))
    expected = forced or indep.leaf
    reasons = []
    if got.leaf != expected:
        reasons.append("closed form disagrees with expected leaf")
    if indep.leaf != expected:
        reasons.append("independent classification disagrees with construction")
    if cplx is not ComplexMultiplicity.from_multiset(indep.multiset):
        reasons.append(f"complex row {cplx.name} disagrees with multiset {indep.multiset}")
    if forced and cplx is not ComplexMultiplicity.from_multiset(mults):
        reasons.append("complex row disagrees with construction")
    if not forced:
        n_real = count_real_roots(c.poly, chain=sturm_chain(c.poly))
        if n_real != got.distinct_real_roots:
            reasons.append(f"Sturm count {n_real} != leaf's {got.distinct_real_roots} real roots")
    return TrialResult(i, c.as_tuple(), expected, got.leaf, not reasons, "; ".join(reasons))


def cross_check(n: int, mode: str = "leaves", seed: int = 0, bound: int = 10,
                workers: int = 1) -> CrossCheckReport:
    """Run ``n`` trials; in ``leaves`` mode the trials cycle through all 22 leaves.

    Trial ``i`` draws from its own RNG seeded by ``(seed, mode, i)``, so the
    report is identical for any worker count.
    """
    if n < 1:
        raise DomainError("cross_check needs at least one trial")
    if mode not in ("leaves", "random"):
        raise DomainError(f"unknown cross-check mode {mode!r}")
    if bound < 0:
        raise DomainError("bound must be non-negative")
    start = time.perf_counter()
    jobs = [(mode, seed, i, bound) for i in range(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=max(1, n // (8 * workers))))
    else:
        results = [_run_trial(j) for j in jobs]
    report = CrossCheckReport(mode=mode, seed=seed, trials=n, results=results)
    for r in results:
        report.leaf_counts[r.got] = report.leaf_counts.get(r.got, 0) + 1
        if r.ok:
            report.agreements += 1
        else:
            report.failures.append(Failure(r.coeffs, r.expected, r.got, r.reason))
    report.elapsed = time.perf_counter() - start
    return report
