import dataclasses
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coeffs_pqrst, expand
from quintic_atlas.classifier import (
    LEAF_IDS,
    LEAVES,
    ComplexMultiplicity,
    CubicMode,
    RealConfiguration,
    classify_complex,
    classify_real,
    cubic_positive_count,
    leaf_from_pattern,
    order_leaf4,
    sturm_count_from_leads,
    witness_roots,
)
from quintic_atlas.errors import InternalInconsistency, PreconditionError
from quintic_atlas.invariants import QuinticCoeffs, compute_invariants
from quintic_atlas.oracle import build_quintic, independent_classify, random_spec
from quintic_atlas.polycore import Poly
from quintic_atlas.sturm import count_real_roots

CM = ComplexMultiplicity

EXAMPLES = [
    ((-15, 85, -225, 274, -120), "1", CM.FIVE_DISTINCT),
    ((-6, 11, -6, 0, 0), "4b", CM.DOUBLE_THREE_SINGLE),
    ((-6, 10, 0, -11, 6), "4a", CM.DOUBLE_THREE_SINGLE),
    ((0, -1, 0, 0, 0), "8b", CM.TRIPLE_TWO_SINGLE),
    ((-1, 2, -2, 1, -1), "7", CM.TWO_DOUBLE_SINGLE),
    ((-1, 0, 0, 0, 0), "10a", CM.QUADRUPLE_SINGLE),
    ((-2, 1, 0, 0, 0), "11a", CM.TRIPLE_DOUBLE),
    ((-5, 10, -10, 5, -1), "12", CM.QUINTUPLE),
    ((-6, 12, -12, 11, -6), "2", CM.FIVE_DISTINCT),
]


def from_factors(reals, quads=()):
    return QuinticCoeffs(*coeffs_pqrst(expand(reals, quads)))


@pytest.mark.parametrize("coeffs,leaf,row", EXAMPLES)
def test_examples(coeffs, leaf, row):
    c = QuinticCoeffs(*coeffs)
    conf = classify_real(c)
    assert conf.leaf == leaf
    assert conf.ordering == LEAVES[leaf][1]
    assert classify_complex(c) is row
    assert CM.from_multiset(conf.multiset) is row


def test_example_construction_matches_coefficients():
    assert from_factors([(k, 1) for k in range(1, 6)]).as_tuple() == EXAMPLES[0][0]
    assert from_factors([(0, 2), (1, 1), (2, 1), (3, 1)]).as_tuple() == EXAMPLES[1][0]
    assert from_factors([(-1, 1), (1, 2), (2, 1), (3, 1)]).as_tuple() == EXAMPLES[2][0]
    assert from_factors([(-1, 1), (0, 3), (1, 1)]).as_tuple() == EXAMPLES[3][0]
    assert from_factors([(1, 1)], [(0, 1, 2)]).as_tuple() == EXAMPLES[4][0]
    assert from_factors([(0, 4), (1, 1)]).as_tuple() == EXAMPLES[5][0]
    assert from_factors([(0, 3), (1, 2)]).as_tuple() == EXAMPLES[6][0]
    assert from_factors([(1, 5)]).as_tuple() == EXAMPLES[7][0]
    assert from_factors([(1, 1), (2, 1), (3, 1)], [(0, 1, 1)]).as_tuple() == EXAMPLES[8][0]


def test_example_invariant_values():
    inv = compute_invariants(QuinticCoeffs(-1, 0, 0, 0, 0))
    assert inv.C4 == 1
    inv = compute_invariants(QuinticCoeffs(0, -1, 0, 0, 0))
    assert inv.F6 == -1 and inv.C21 == 0
    inv = compute_invariants(QuinticCoeffs(-6, 10, 0, -11, 6))
    assert order_leaf4(inv.F1, inv.F2, inv.F3) == "4a"


def test_leaf3_detail():
    conf = classify_real(QuinticCoeffs(0, 0, 0, 0, -1))
    assert conf.leaf == "3"
    assert conf.detail.startswith("non-positive:")


def test_complex_rows():
    assert [r.row for r in CM] == list(range(1, 8))
    for r in CM:
        assert sum(r.multiplicities) == 5


def test_leaf_table_is_consistent():
    assert len(LEAF_IDS) == 22
    for leaf, (_, real, pairs) in LEAVES.items():
        assert sum(real) + 2 * sum(pairs) == 5
        assert leaf_from_pattern(real, pairs) == leaf
    with pytest.raises(ValueError):
        leaf_from_pattern((1, 1), ())
    with pytest.raises(ValueError):
        leaf_from_pattern((1, 1, 1), (1, 0))


def test_configuration_equality_by_leaf():
    assert RealConfiguration.of("4a") == RealConfiguration.of("4a")
    assert RealConfiguration.of("4a") != RealConfiguration.of("4b")


@pytest.mark.parametrize("signs,leaf", [
    ((1, 1, 1), "4c"), ((-1, 1, 1), "4a"), ((-1, 1, -1), "4a"), ((1, 1, -1), "4a"),
    ((1, -1, -1), "4b"), ((-1, -1, -1), "4d"), ((1, -1, 1), "4d"), ((0, 1, 1), "4a"), ((1, -1, 0), "4d"),
])
def test_order_leaf4(signs, leaf):
    assert order_leaf4(*(Fraction(s) for s in signs)) == leaf


def test_order_leaf4_rejects_bad_F2():
    with pytest.raises(InternalInconsistency):
        order_leaf4(Fraction(1), Fraction(0), Fraction(1))
    with pytest.raises(InternalInconsistency):
        order_leaf4(Fraction(1), None, Fraction(1))


@pytest.mark.parametrize("coeffs,count", [((-6, 11, -6), 3), ((6, 11, 6), 0), ((-2, -1, 2), 2)])
def test_cubic_positive_count_examples(coeffs, count):
    got = cubic_positive_count(*map(Fraction, coeffs), "three-real-roots")
    assert got.count == count and got.mode is CubicMode.THREE_REAL


def test_cubic_positive_count_precondition():
    with pytest.raises(PreconditionError):
        cubic_positive_count(Fraction(1), Fraction(2), Fraction(0), CubicMode.ONE_REAL)


nonzero = st.integers(-12, 12).filter(bool)


@settings(max_examples=300, deadline=None)
@given(st.lists(nonzero, min_size=3, max_size=3, unique=True))
def test_cubic_positive_count_three_real(roots):
    c = expand([(r, 1) for r in roots])
    got = cubic_positive_count(c[2], c[1], c[0], "three-real-roots")
    assert got.count == sum(r > 0 for r in roots)


@settings(max_examples=200, deadline=None)
@given(nonzero, st.integers(-6, 6), st.integers(1, 6))
def test_cubic_positive_count_one_real(root, re, im):
    c = expand([(root, 1)], [(-2 * re, re * re + im * im, 1)])
    got = cubic_positive_count(c[2], c[1], c[0], "one-real-root")
    assert got.count == (root > 0)


def test_witness_examples():
    w = witness_roots(QuinticCoeffs(-6, 11, -6, 0, 0), "4b")
    assert w[0].value == 0 and w[0].multiplicity == 2
    assert [x.multiplicity for x in w] == [2, 1, 1, 1]
    w = witness_roots(QuinticCoeffs(-1, 0, 0, 0, 0), "10a")
    assert (w[0].value, w[0].multiplicity) == (0, 4)
    assert (w[1].value, w[1].multiplicity) == (1, 1)
    w = witness_roots(QuinticCoeffs(-5, 10, -10, 5, -1), "12")
    assert [(x.value, x.multiplicity) for x in w] == [(1, 5)]
    with pytest.raises(PreconditionError):
        witness_roots(QuinticCoeffs(-15, 85, -225, 274, -120))


def test_irrational_double_roots():
    c = from_factors([(1, 1)], [(0, -2, 2)])  # (x^2 - 2)^2 (x - 1)
    assert classify_real(c).leaf == "6b"
    w = witness_roots(c)
    assert [x.multiplicity for x in w] == [2, 1, 2]
    assert not w[0].is_exact and w[1].value == 1 and not w[2].is_exact
    assert w[0].value.lo ** 2 > 2 > w[0].value.hi ** 2
    assert w[2].value.lo ** 2 < 2 < w[2].value.hi ** 2


def _check_witness(c, conf):
    f = c.poly
    for w in witness_roots(c, conf):
        if w.is_exact and w.multiplicity > 1:
            lin = Poly([-w.value, 1])
            g = f
            for _ in range(w.multiplicity):
                g, r = divmod(g, lin)
                assert r.is_zero()
            assert g(w.value) != 0


@pytest.mark.parametrize("leaf", LEAF_IDS)
def test_constructions_per_leaf(leaf):
    rng = random.Random(f"classifier-{leaf}")
    for _ in range(8):
        spec = random_spec(leaf, rng)
        c, forced = build_quintic(spec)
        conf = classify_real(c)
        assert conf.leaf == forced.leaf == leaf
        mults = tuple(m for _, m in spec.real_roots) + 2 * tuple(m for *_, m in spec.conjugate_pairs)
        assert classify_complex(c) is CM.from_multiset(mults)
        inv = compute_invariants(c)
        if leaf[0] in "45":
            assert inv.F2 is not None and inv.F2 != 0
        if leaf.startswith("8"):
            assert inv.F6 != 0 and (inv.F6 < 0 or inv.F7 != 0)
        if any(m > 1 for m in LEAVES[leaf][1]):
            _check_witness(c, conf)


def _solve_L3_zero(reals, quads):
    """Make the last quadratic's constant term kill L3 (L3 is affine in it)."""
    *rest, (b, _, m) = quads
    l0 = compute_invariants(from_factors(reals, rest + [(b, 0, m)])).L3
    l1 = compute_invariants(from_factors(reals, rest + [(b, 1, m)])).L3
    return rest + [(b, Fraction(-l0, l1 - l0), m)]


@pytest.mark.parametrize("rm,qm", [((1, 1, 1), (1,)), ((1,), (1, 1)), ((2, 1), (1,)), ((1, 2), (1,)),
                                   ((1,), (2,)), ((3,), (1,))])
def test_special_slice_L3_zero(rm, qm):
    rng = random.Random(f"L3-zero-{rm}-{qm}")
    done = 0
    while done < 6:
        vals = sorted(rng.sample(range(-12, 13), len(rm)))
        reals = [(Fraction(v), m) for v, m in zip(vals, rm)]
        quads = [(Fraction(rng.randint(-9, 9)), 0, m) for m in qm]
        quads = [(b, Fraction(rng.randint(1, 30)), m) for b, _, m in quads[:-1]] + quads[-1:]
        quads = _solve_L3_zero(reals, quads)
        if any(c <= b * b / 4 for b, c, _ in quads):
            continue
        c = from_factors(reals, quads)
        inv = compute_invariants(c)
        assert inv.L3 == 0
        expected = leaf_from_pattern(tuple(rm), tuple(sorted(qm)))
        assert classify_real(c).leaf == expected == independent_classify(c).leaf
        done += 1


def test_leaf9_on_L3_zero():
    c = from_factors([(0, 3)], [(-10, 40, 1)])
    inv = compute_invariants(c)
    assert inv.L3 == 0 and inv.L2 < 0 and inv.D2 == 0
    assert classify_real(c).leaf == "9"
    w = witness_roots(c)
    assert [(x.value, x.multiplicity) for x in w] == [(0, 3)]


@pytest.mark.parametrize("u,v,w,leaf", [
    (-6, 0, Fraction(192, 5), "5a"), (-6, 8, Fraction(-16, 3), "5b"),
    (-3, 3, -1, "11b"), (3, 3, 1, "11a"),
])
def test_special_slice_L2_zero(u, v, w, leaf):
    c = QuinticCoeffs.from_poly(Poly([0, 0, w, v, u, 1]))
    inv = compute_invariants(c)
    assert inv.L2 == 0 and inv.L3 > 0
    assert classify_real(c).leaf == leaf == independent_classify(c).leaf
    _check_witness(c, classify_real(c))


def _fake(c, **changes):
    return dataclasses.replace(compute_invariants(c), **changes)


def test_impossible_states_raise():
    c = QuinticCoeffs(-6, 11, -6, 0, 0)
    F = Fraction
    with pytest.raises(InternalInconsistency):
        classify_real(c, _fake(c, L3=F(-1)))  # four real roots with L3 < 0
    with pytest.raises(InternalInconsistency):
        classify_real(c, _fake(c, F2=F(0)))
    with pytest.raises(InternalInconsistency):
        classify_real(c, _fake(c, L3=F(0), L2=F(1)))  # L3 = 0 forces L2 <= 0
    d = QuinticCoeffs(-15, 85, -225, 274, -120)
    with pytest.raises(InternalInconsistency):
        classify_real(d, _fake(d, L3=F(-1), L2=F(1), L1=F(-1)))  # negative Sturm count
    t = QuinticCoeffs(0, -1, 0, 0, 0)
    with pytest.raises(InternalInconsistency):
        classify_real(t, _fake(t, F6=F(0)))
    q = QuinticCoeffs(-1, 0, 0, 0, 0)
    with pytest.raises(InternalInconsistency):
        classify_real(q, _fake(q, C4=F(0)))
    with pytest.raises(InternalInconsistency):
        classify_real(q, _fake(q, L3=F(-2)))


def test_sturm_count_from_leads():
    assert sturm_count_from_leads((1, 1, 1, 1, 1, 1), (5, 4, 3, 2, 1, 0)) == 5
    assert sturm_count_from_leads((1, 1, 1, 1, 1, -1), (5, 4, 3, 2, 1, 0)) == 3
    assert sturm_count_from_leads((1, 1, -1, 1, -1, 1), (5, 4, 3, 2, 1, 0)) == -3
    rng = random.Random(9)
    for _ in range(200):
        c = QuinticCoeffs(*(rng.randint(-10, 10) for _ in range(5)))
        inv = compute_invariants(c)
        sg = [(x > 0) - (x < 0) for x in (inv.L3, inv.L2, inv.L1, inv.D)]
        if all(sg):
            assert sturm_count_from_leads((1, 1, *sg), (5, 4, 3, 2, 1, 0)) == count_real_roots(c.poly)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(LEAF_IDS), st.integers(0, 10**6), st.integers(2, 7))
def test_scaling_invariance(leaf, seed, lam):
    c, _ = build_quintic(random_spec(leaf, random.Random(seed)))
    scaled = QuinticCoeffs(*(x / lam**k for x, k in zip(c.as_tuple(), range(1, 6))))
    assert classify_real(scaled).leaf == leaf


def test_leaf4_on_F1_boundary():
    # x^2 (x^3 - 4x^2 + 1): F1 vanishes, the closed inequality still gives 4a
    c = QuinticCoeffs(-4, 0, 1, 0, 0)
    inv = compute_invariants(c)
    assert inv.F1 == 0 and inv.F2 > 0 and inv.F3 < 0
    assert classify_real(c).leaf == "4a" == independent_classify(c).leaf
