from math import comb, gcd

import pytest
from hypothesis import given, settings, strategies as st

from poisson_hp0.formulas import (
    PlaneCurveSpec,
    Stratum,
    StratumData,
    StratumPair,
    SymPowerSpec,
    frobenius_top_forms,
    jacobi_part,
    kleinian_series,
    kleinian_strata,
    mainform_series,
    plane_curve_series,
    quotient_series,
    sym_kleinian_series,
    sympower_series,
)
from poisson_hp0.fp import primes_between
from poisson_hp0.presets import ade_preset
from poisson_hp0.series import CycloRational, expand

ADE = ("A1", "A2", "A3", "A4", "A7", "D4", "D5", "D6", "E6", "E7", "E8")


def support(seq):
    return {m: c for m, c in enumerate(seq) if c}


def test_general_surface_formula_examples():
    assert support(mainform_series((2, 3, 3), 6, 5, 23)) == {0: 1, 2: 1, 8: 1, 18: 1, 23: 2}
    assert support(mainform_series((2, 2, 2), 4, 5, 18)) == {0: 1, 8: 1, 18: 3}
    assert support(mainform_series((1, 1, 1), 3, 5, 10)) == {0: 1, 1: 3, 2: 3, 3: 1, 5: 3, 10: 6}
    with pytest.raises(ValueError):
        mainform_series((2, 3, 3), 3, 5, 10)


def test_a1_closed_form():
    # H = 1 + sum (2k-1) t^{2(pk-1)} for x^2 = yz
    p, N = 7, 120
    want = [0] * (N + 1)
    want[0] = 1
    k = 1
    while 2 * (p * k - 1) <= N:
        want[2 * (p * k - 1)] = 2 * k - 1
        k += 1
    assert list(mainform_series((2, 2, 2), 4, p, N)) == want


def test_kleinian_examples():
    assert support(kleinian_series(ade_preset("A2"), 7, 33)) == {0: 1, 2: 1, 12: 1, 26: 1, 33: 2}
    assert support(kleinian_series(ade_preset("A1"), 5, 8)) == {0: 1, 8: 1}
    assert support(kleinian_series(ade_preset("E8"), 31, 59)) == {m: 1 for m in (0, 12, 20, 24, 32, 36, 44, 56)}


def test_kleinian_warns_for_small_p():
    with pytest.warns(UserWarning):
        kleinian_series(ade_preset("A3"), 3, 10)


@pytest.mark.parametrize("label", ADE)
@pytest.mark.parametrize("p", [7, 11, 13, 31, 37])
def test_kleinian_equals_general_formula(label, p):
    pre = ade_preset(label)
    if p <= pre.h:
        pytest.skip("below the Coxeter number")
    assert kleinian_series(pre, p, 200) == mainform_series(pre.weights, pre.d, p, 200)


def test_plane_curve_examples():
    assert plane_curve_series(PlaneCurveSpec(3), 5, 10) == mainform_series((1, 1, 1), 3, 5, 10)
    s = plane_curve_series(PlaneCurveSpec(4), 7, 11)
    jac = expand(CycloRational.from_factors(0, (3, 3, 3), (1, 1, 1)), 0, 11).coefficients
    assert s[8] - jac[8] == 7
    assert all(s[m] == jac[m] for m in range(12) if m != 8)
    assert PlaneCurveSpec(5).chi == -10
    with pytest.raises(ValueError):
        PlaneCurveSpec(2)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_plane_curve_equals_general_formula(d, p):
    if d % p == 0:
        pytest.skip("p divides d")
    assert plane_curve_series(PlaneCurveSpec(d), p, 150) == mainform_series((1, 1, 1), d, p, 150)


@pytest.mark.parametrize(
    "w,d,p", [((2, 3, 3), 6, 7), ((1, 1, 1), 4, 7), ((1, 2, 3), 7, 11), ((3, 4, 5), 17, 19), ((4, 6, 8), 20, 11)]
)
def test_tail_supported_on_residue_class(w, d, p):
    N = 160
    s = mainform_series(w, d, p, N)
    g = gcd(*w)
    delta = (d - sum(w)) // g
    jac = jacobi_part(w, d, N)
    for m in range(N + 1):
        if s[m] != jac[m]:
            assert m % g == 0 and (m // g - delta) % p == 0


@pytest.mark.parametrize("label", ADE)
def test_series_are_nonnegative(label):
    pre = ade_preset(label)
    for p in (primes_between(pre.h, 200)[0], 41):
        assert min(kleinian_series(pre, p, 150)) >= 0
        assert min(sym_kleinian_series(pre, 2, p, 150)) >= 0


def test_quotient_series_examples():
    one = StratumData((Stratum(0, (StratumPair((1,), CycloRational(0, (1,))),)),))
    assert support(quotient_series(one, 7, 20)) == {0: 1}
    plane = StratumData((Stratum(2, (StratumPair((1,), CycloRational(0, (1,), (1, 1))),)),))
    assert quotient_series(plane, 5, 60) == frobenius_top_forms(2, 5, 60)
    for label in ADE:
        pre = ade_preset(label)
        p = 41
        assert quotient_series(kleinian_strata(pre), p, 200) == kleinian_series(pre, p, 200)


def test_stratum_validation():
    with pytest.raises(ValueError):
        StratumPair((1, -1), CycloRational(0, (1,)))
    bad = StratumData((Stratum(0, (StratumPair((1,), CycloRational(0, (1, -2), (1,))),)),))
    with pytest.raises(ValueError):
        bad.check_nonnegative()


def test_sympower_examples():
    assert support(sympower_series(SymPowerSpec(1, 1), 5, 23)) == {8: 1, 13: 2, 18: 3, 23: 4}
    s = sympower_series(SymPowerSpec(2, 1), 7, 40)
    assert all(c == 0 for c in s.coefficients[: 2 * 2 * 6])
    with pytest.raises(ValueError):
        SymPowerSpec(0, 1)


def _sym2(factors: dict[int, int], N: int) -> list[int]:
    """Degree-wise dimension of Sym^2 of a graded space with the given dimensions."""
    out = [0] * (N + 1)
    degs = sorted(factors)
    for i, a in enumerate(degs):
        for b in degs[i:]:
            if a + b > N:
                continue
            if a == b:
                out[a + b] += comb(factors[a] + 1, 2)
            else:
                out[a + b] += factors[a] * factors[b]
    return out


def _sympower2_oracle(d, p, N):
    base = 2 * d * (p - 1)
    P = {base + k * p: comb(2 * d + k - 1, k) for k in range(N // p + 1) if base + k * p <= N}
    out = _sym2(P, N)
    for m, c in P.items():
        out[m] += c
    return out


@pytest.mark.parametrize("d,p", [(1, 5), (1, 7), (2, 5), (3, 3)])
def test_sympower_n2_against_symmetric_square(d, p):
    N = 120
    assert list(sympower_series(SymPowerSpec(d, 2), p, N)) == _sympower2_oracle(d, p, N)


def test_sympower_n2_small_case():
    # the first term is the single j = 1 factor at t^8, not t^16
    s = sympower_series(SymPowerSpec(1, 2), 5, 16)
    assert support(s) == {8: 1, 13: 2, 16: 1}


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.sampled_from([3, 5, 7, 11]))
def test_sympower_n1_is_top_forms(d, p):
    assert sympower_series(SymPowerSpec(d, 1), p, 200) == frobenius_top_forms(2 * d, p, 200)


@pytest.mark.parametrize("label", ADE)
def test_sym_kleinian_n1_is_kleinian(label):
    pre = ade_preset(label)
    for p in (primes_between(pre.h, 200)[0], 37):
        assert sym_kleinian_series(pre, 1, p, 200) == kleinian_series(pre, p, 200)


@pytest.mark.parametrize("label,p", [("A1", 5), ("A2", 11), ("D4", 7), ("E6", 13)])
def test_sym_kleinian_n2_against_symmetric_square(label, p):
    pre = ade_preset(label)
    N = 150
    dk = expand(CycloRational(0, (1,) + (0,) * (pre.h - 1) + (1,), (pre.a, pre.b)), 0, N).coefficients
    tail = {2 * (p - 1) + k * p: dk[k] for k in range(N) if 2 * (p - 1) + k * p <= N and dk[k]}
    j0: dict[int, int] = dict(tail)
    for m in pre.exponents:
        j0[2 * (m - 1)] = j0.get(2 * (m - 1), 0) + 1
    want = _sym2(j0, N)
    for m in pre.exponents:
        if 2 * (m - 1 + pre.h) <= N:
            want[2 * (m - 1 + pre.h)] += 1
    for m, c in tail.items():
        want[m] += c
    got = sym_kleinian_series(pre, 2, p, N)
    assert list(got) == want
    assert got[0] == 1


def test_sym_kleinian_examples():
    assert support(sym_kleinian_series(ade_preset("A1"), 1, 5, 8)) == {0: 1, 8: 1}
    assert sym_kleinian_series(ade_preset("A2"), 2, 11, 10)[0] == 1
