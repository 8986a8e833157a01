from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from idealization.classify import (
    Verdict,
    ci_fraction_diagnostic,
    ci_verdict_eq1,
    classify,
    cm_verdict,
    gorenstein_verdict,
    hypersurface_verdict,
    regular_verdict,
)
from idealization.errors import TruncationError
from idealization.idealize import idealize
from idealization.models import (
    complete_intersection_ring,
    explicit_module,
    explicit_ring,
    free_module,
    regular_ring,
    residue_field,
)

from conftest import profiles

H, F, I = Verdict.HOLDS, Verdict.FAILS, Verdict.INCONCLUSIVE


def test_regular_verdict_examples():
    R = regular_ring(1, 4)
    v = regular_verdict(idealize(R, residue_field(R), 4))
    assert v.verdict is F and (v.values["edim"], v.values["dim"]) == (2, 1)
    R3 = regular_ring(3, 4)
    v = regular_verdict(idealize(R3, free_module(1, R3, 4), 4))
    assert v.verdict is F and "4 > 3" in v.certificate


@given(profiles(max_degree=8))
@settings(max_examples=60, deadline=None)
def test_regular_verdict_always_fails(p):
    base, m, _, D = p
    v = regular_verdict(idealize(base, m, D))
    assert v.verdict is F and v.values["edim"] > v.values["dim"]


def test_hypersurface_examples():
    for d in range(4):
        R = regular_ring(d, 4)
        assert hypersurface_verdict(idealize(R, free_module(1, R, 4), 4)).verdict is H
    R1 = regular_ring(1, 4)
    assert hypersurface_verdict(idealize(R1, residue_field(R1), 4)).verdict is F
    K = regular_ring(0, 4)
    kk = explicit_module([2, 0, 0, 0, 0], 0, K, name="k+k")
    v = hypersurface_verdict(idealize(K, kk, 4))
    assert v.verdict is F and "beta_0(M) = 2 > 1" in v.certificate


def test_hypersurface_fails_for_nonregular_base():
    C = complete_intersection_ring(3, 2, 4)
    v = hypersurface_verdict(idealize(C, free_module(1, C, 4), 4))
    assert v.verdict is F


def test_eq1_examples():
    for d in range(6):
        # integer-arithmetic oracle: 1 + d + C(d,2) on both sides
        assert 1 + d + comb(d, 2) == comb(d + 1, 2) + (d + 1) - d
        R = regular_ring(d, 4)
        v = ci_verdict_eq1(idealize(R, free_module(1, R, 4), 4))
        assert v.verdict is H and v.values["lhs"] == 1 + d + comb(d, 2)
    R1 = regular_ring(1, 4)
    v = ci_verdict_eq1(idealize(R1, residue_field(R1), 4))
    assert v.verdict is F and (v.values["lhs"], v.values["rhs"]) == (3, 2)


def test_eq1_needs_degree_two():
    R = regular_ring(1, 1)
    with pytest.raises(TruncationError):
        ci_verdict_eq1(idealize(R, residue_field(R), 1))


@pytest.mark.parametrize("e,c", [(2, 1), (3, 2), (4, 4), (5, 0)])
def test_ci_base_with_M_equal_R(e, c):
    base = complete_intersection_ring(e, c, 6)
    ideal = idealize(base, free_module(1, base, 6), 6)
    assert ci_verdict_eq1(ideal).verdict is H


@pytest.mark.parametrize("e,c", [(2, 1), (3, 2), (3, 0)])
def test_ci_base_with_M_not_R(e, c):
    base = complete_intersection_ring(e, c, 6)
    for m in (residue_field(base), free_module(2, base, 6)):
        assert ci_verdict_eq1(idealize(base, m, 6)).verdict is F


def test_fraction_examples():
    for d in range(1, 5):
        R = regular_ring(d, 4)
        rep = ci_fraction_diagnostic(R, free_module(1, R, 4))
        assert rep.fraction == 0 and rep.eq1.verdict is H and rep.discrepancy
    R = regular_ring(2, 4)
    m = explicit_module([2, 1, 0, 0, 0], 0, R)
    rep = ci_fraction_diagnostic(R, m)
    assert rep.numerator == 2 * (1 - 2) + 1 * (1 + 1) == 0
    assert rep.fraction == Fraction(0)
    K = regular_ring(0, 4)
    rep = ci_fraction_diagnostic(K, free_module(1, K, 4))
    assert rep.denominator == 0 and rep.fraction is None and "undefined" in rep.note


def test_gorenstein_and_cm_examples():
    R = explicit_ring(1, 1, 3, [1, 3, 6, 10, 15], name="C")
    w = explicit_module([2, 1, 0, 0, 0], 1, R, canonical=True, name="w")
    assert gorenstein_verdict(idealize(R, w, 4)).verdict is H
    assert gorenstein_verdict(idealize(R, free_module(1, R, 4), 4)).verdict is I
    R1 = regular_ring(1, 4)
    assert cm_verdict(idealize(R1, residue_field(R1), 4)).verdict is F
    assert gorenstein_verdict(idealize(R1, residue_field(R1), 4)).verdict is F
    K = regular_ring(0, 4)
    assert cm_verdict(idealize(K, residue_field(K), 4)).verdict is H
    assert gorenstein_verdict(idealize(R1, free_module(2, R1, 4), 4)).verdict is F


@pytest.mark.parametrize("d", range(0, 9))
def test_regular_base_with_M_equal_R(d):
    R = regular_ring(d, 6)
    ideal = idealize(R, free_module(1, R, 6), 6)
    got = {v.property: v.verdict for v in classify(ideal)}
    assert got == {"regular": F, "hypersurface": H, "complete_intersection": H,
                   "gorenstein": H, "cohen_macaulay": H}
    assert ideal.ring.edim - ideal.ring.depth == 1


@given(profiles(max_degree=8))
@settings(max_examples=60, deadline=None)
def test_verdicts_agree_with_ring_flags(p):
    base, m, _, D = p
    ideal = idealize(base, m, max(D, 2)) if m.degree >= 1 else idealize(base, m, D)
    s = ideal.ring.structure
    # the raw deviation test may contradict forced flags on unrealizable data
    for v in classify(ideal):
        if v.property == "complete_intersection":
            continue
        flag = getattr(s, v.property)
        if v.verdict is H:
            assert flag is True
        elif v.verdict is F:
            assert flag is False
