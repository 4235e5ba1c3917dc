"""Acceptance criteria 1-7, one verdict line each.

All comparisons are exact rational arithmetic, so every tolerance is zero.
Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import functools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from oracles import euclid_sturm  # noqa: E402
from quintic_atlas.classifier import LEAF_IDS, LEAVES, witness_roots  # noqa: E402
from quintic_atlas.invariants import QuinticCoeffs, compute_invariants, sylvester_discriminant  # noqa: E402
from quintic_atlas.oracle import build_quintic, cross_check, random_spec, trial_rng  # noqa: E402
from quintic_atlas.parsing import format_polynomial, parse_polynomial  # noqa: E402
from quintic_atlas.polycore import Poly  # noqa: E402
from quintic_atlas.sturm import isolate_real_roots  # noqa: E402

PER_LEAF = 50
LEAF_SEED = 1
LEAF_TIME_LIMIT = 300.0  # seconds
RANDOM_TRIALS = 10_000
RANDOM_BOUND = 10
RANDOM_SEED = 2
IDENTITY_POINTS = 1000
SLICE_POINTS = 100
THEOREM_POINTS = 1000
SYLVESTER_POINTS = 1000
ROUND_TRIPS = 1000
TOLERANCE = 0  # exact arithmetic throughout


def report(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def sgn(x) -> int:
    return (x > 0) - (x < 0)


def rand_q(rng, num=30, dens=(1, 2, 3, 4, 5, 6, 7)):
    return Fraction(rng.randint(-num, num), rng.choice(dens))


def rand_coeffs(rng):
    return QuinticCoeffs(*(rand_q(rng) for _ in range(5)))


# 1 -----------------------------------------------------------------------


def test_1_leaf_coverage():
    rep = cross_check(PER_LEAF * len(LEAF_IDS), mode="leaves", seed=LEAF_SEED)
    counts = rep.leaf_counts
    ok = (rep.ok and rep.agreements == rep.trials
          and all(counts.get(leaf, 0) >= PER_LEAF for leaf in LEAF_IDS)
          and rep.elapsed < LEAF_TIME_LIMIT)
    report(1, ok, f"{rep.agreements}/{rep.trials} agree over {len(LEAF_IDS)} leaves, "
                  f"{len(rep.failures)} failures, {rep.elapsed:.1f}s")
    assert rep.failures == []
    assert all(counts.get(leaf, 0) >= PER_LEAF for leaf in LEAF_IDS)
    assert rep.elapsed < LEAF_TIME_LIMIT


# 2 -----------------------------------------------------------------------


def test_2_independent_agreement():
    rep = cross_check(RANDOM_TRIALS, mode="random", seed=RANDOM_SEED, bound=RANDOM_BOUND, workers=0)
    report(2, rep.ok, f"{rep.agreements}/{rep.trials} random quintics, bound {RANDOM_BOUND}, "
                      f"leaf and Sturm count agree, {rep.elapsed:.1f}s")
    assert rep.failures == []
    assert rep.trials == RANDOM_TRIALS


# 3 -----------------------------------------------------------------------


def _identity_a_b(rng):
    done = bad = 0
    while done < IDENTITY_POINTS:
        c = rand_coeffs(rng)
        inv = compute_invariants(c)
        if not (inv.L3 and inv.L2 and inv.L1):
            continue
        # plain Euclid, no normalization of any member
        ch = euclid_sturm(list(c.poly.coeffs))
        const = ch[5][0] if len(ch) == 6 else Fraction(0)
        numer_ok = const * 4 * inv.L1**2 * inv.L3**2 == 25 * inv.L2**2 * inv.D
        signs_ok = ([len(m) - 1 for m in ch[2:5]] == [3, 2, 1]
                    and (sgn(ch[2][-1]), sgn(ch[3][-1]), sgn(ch[4][-1])) == (sgn(inv.L3), sgn(inv.L2), sgn(inv.L1)))
        bad += not (numer_ok and signs_ok)
        done += 1
    return done, bad


def _identity_c():
    # per-variable degrees of C1 and L1 are at most (4, 4, 4, 3, 2)
    grids = [range(-2, 3), range(-2, 3), range(-2, 3), range(-2, 2), range(-1, 2)]
    n = bad = 0
    for p in grids[0]:
        for q in grids[1]:
            for r in grids[2]:
                for s in grids[3]:
                    for t in grids[4]:
                        inv = compute_invariants(QuinticCoeffs(Fraction(p, 3), q, r, s, t))
                        bad += inv.C1 != inv.L1
                        n += 1
    return n, bad


def _identity_d(rng):
    bad = 0
    for _ in range(SLICE_POINTS):
        p = rand_q(rng)
        c = QuinticCoeffs(p, 2 * p * p / 5, 2 * p**3 / 25, rand_q(rng), rand_q(rng))
        inv = compute_invariants(c)
        bad += not (inv.L3 == 0 and inv.L2 == 0 and inv.L1 == -64 * (c.p**4 - 125 * c.s) ** 3 / 390625)
    return SLICE_POINTS, bad


def _identity_e(rng):
    done = bad = 0
    while done < SLICE_POINTS:
        p, q, r, t = (rand_q(rng) for _ in range(4))
        # L2 is affine in s
        a = compute_invariants(QuinticCoeffs(p, q, r, 0, t)).L2
        b = compute_invariants(QuinticCoeffs(p, q, r, 1, t)).L2 - a
        if b == 0:
            continue
        c = QuinticCoeffs(p, q, r, -a / b, t)
        inv = compute_invariants(c)
        if inv.L3 == 0:
            continue
        bad += not (inv.L2 == 0 and inv.L1 <= 0)
        done += 1
    return done, bad


@functools.lru_cache(maxsize=None)
def criterion_3():
    rng = random.Random(3)
    results = {
        "a+b": _identity_a_b(rng),
        "c": _identity_c(),
        "d": _identity_d(rng),
        "e": _identity_e(rng),
    }
    ok = all(bad == 0 for _, bad in results.values())
    report(3, ok, ", ".join(f"({k}) {n - bad}/{n}" for k, (n, bad) in results.items()))
    return results


def test_3ab_gcddeg0_numerator_and_lead_signs():
    n, bad = criterion_3()["a+b"]
    assert n >= IDENTITY_POINTS and bad == 0


def test_3c_C1_equals_L1_on_grid():
    n, bad = criterion_3()["c"]
    assert n == 5 * 5 * 5 * 4 * 3 and bad == 0


def test_3d_L1_on_L3_L2_zero():
    n, bad = criterion_3()["d"]
    assert n >= SLICE_POINTS and bad == 0


def test_3e_L1_nonpositive_on_L2_zero():
    # On L2 = 0, L1 = -N^2 / (32 L3^3): the sign of L1 is opposite to L3,
    # so this fails wherever the sample lands on L3 < 0.
    n, bad = criterion_3()["e"]
    assert n >= SLICE_POINTS and bad == 0, f"{bad}/{n} slice points have L1 > 0"


# 4 -----------------------------------------------------------------------


def test_4_discriminant_sign():
    rng = random.Random(4)
    done = bad = 0
    pair_counts = {0: 0, 1: 0, 2: 0}
    while done < THEOREM_POINTS:
        if done % 3 == 0:
            # real-rooted and one-pair shapes are rare among random quintics
            c, _ = build_quintic(random_spec(rng.choice(("1", "2", "3")), rng))
        else:
            c = QuinticCoeffs(*(rng.randint(-RANDOM_BOUND, RANDOM_BOUND) for _ in range(5)))
        D = compute_invariants(c).D
        if D == 0:
            continue
        n_real = len(isolate_real_roots(c.poly))
        pairs = (5 - n_real) // 2
        pair_counts[pairs] += 1
        bad += sgn(D) != (-1) ** pairs
        done += 1
    report(4, bad == 0, f"{done - bad}/{done} square-free instances, pair counts {pair_counts}")
    assert bad == 0
    assert all(pair_counts.values())


# 5 -----------------------------------------------------------------------


def test_5_discriminant_equals_sylvester():
    rng = random.Random(5)
    bad = sum(compute_invariants(c).D != sylvester_discriminant(c)
              for c in (rand_coeffs(rng) for _ in range(SYLVESTER_POINTS)))
    report(5, bad == 0, f"{SYLVESTER_POINTS - bad}/{SYLVESTER_POINTS} points")
    assert bad == 0


# 6 -----------------------------------------------------------------------


def _divides(f: Poly, g: Poly, times: int) -> bool:
    return (f % g**times).is_zero()


def test_6_witness_roots():
    """Reuses the exact instances of criterion 1 that have a multiple real root."""
    X = Poly([0, 1])
    checked = bad = 0
    for i in range(PER_LEAF * len(LEAF_IDS)):
        leaf = LEAF_IDS[i % len(LEAF_IDS)]
        if max(LEAVES[leaf][1]) < 2:
            continue
        spec = random_spec(leaf, trial_rng(LEAF_SEED, "leaves", i))
        c, _ = build_quintic(spec)
        ws = witness_roots(c)
        got = [(w.value, w.multiplicity) for w in ws if w.multiplicity > 1]
        want = [(a, m) for a, m in spec.real_roots if m > 1]
        ok = got == want and all(w.is_exact for w in ws if w.multiplicity > 1)
        for a, m in want:
            lin = X - a
            ok &= _divides(c.poly, lin, m) and not _divides(c.poly, lin, m + 1)
        bad += not ok
        checked += 1
    report(6, bad == 0, f"{checked - bad}/{checked} multiple-root instances")
    assert bad == 0


# 7 -----------------------------------------------------------------------


def test_7_cli_contract(capsys):
    from test_cli import GOLDEN, GOLDEN_CASES
    from quintic_atlas.cli import main

    golden_ok = 0
    for name, coeffs in sorted(GOLDEN_CASES.items()):
        code = main(["classify", "--coeffs", coeffs, "--format", "json", "--witness"])
        out = capsys.readouterr().out
        golden_ok += code == 0 and out == (GOLDEN / f"classify_{name}.json").read_text()

    rng = random.Random(7)
    trips = 0
    for _ in range(ROUND_TRIPS):
        f = Poly([rand_q(rng, 200, (1, 2, 3, 5, 7, 11)) if rng.random() < 0.7 else 0
                  for _ in range(rng.randint(0, 9))])
        text = format_polynomial(f)
        g = parse_polynomial(text)
        trips += g == f and format_polynomial(g) == text
    ok = golden_ok == len(GOLDEN_CASES) and trips == ROUND_TRIPS
    with capsys.disabled():
        report(7, ok, f"{golden_ok}/{len(GOLDEN_CASES)} golden files, {trips}/{ROUND_TRIPS} round trips")
    assert ok


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, "-q", "-s"]))
