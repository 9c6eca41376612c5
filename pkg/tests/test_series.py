from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import given, settings, strategies as st

from poisson_hp0.series import (
    CycloRational,
    check_bk_identity,
    check_indepp,
    check_u_antisymmetry,
    check_u_coefficient_antisymmetry,
    expand,
    f_series,
    g_function,
    hilbert_A,
    s_coefficients,
    split_parts,
    truncate,
    u_coefficients,
    u_function,
)


def long_division(r: CycloRational, lo: int, hi: int) -> list[int]:
    """Power-series division numerator / prod(1 - z^e) by solving D * q = N term by term."""
    den = [1]
    for e in r.denom_exponents:
        nxt = [0] * (len(den) + e)
        for i, c in enumerate(den):
            nxt[i] += c
            nxt[i + e] -= c
        den = nxt
    n = hi - r.shift
    q = []
    for k in range(n + 1):
        num = r.numerator[k] if k < len(r.numerator) else 0
        acc = num - sum(den[j] * q[k - j] for j in range(1, min(k, len(den) - 1) + 1))
        q.append(Fraction(acc, den[0]))
    out = []
    for deg in range(lo, hi + 1):
        i = deg - r.shift
        out.append(int(q[i]) if 0 <= i < len(q) else 0)
    return out


def test_expand_examples():
    assert expand(CycloRational(0, (1,), (1,)), 0, 3).coefficients == (1, 1, 1, 1)
    r = CycloRational.from_factors(-2, (5,), (1, 1, 1))
    assert expand(r, -2, 2).coefficients == (1, 3, 6, 10, 15)
    assert expand(hilbert_A((2, 3, 3), 6), 0, 8).coefficients == (1, 0, 1, 2, 1, 2, 3, 2, 3)


def test_expand_rejects_empty_window():
    with pytest.raises(ValueError):
        expand(CycloRational(0, (1,)), 3, 2)


rationals = st.builds(
    CycloRational,
    st.integers(-6, 6),
    st.lists(st.integers(-5, 5), min_size=0, max_size=6).map(tuple),
    st.lists(st.integers(1, 5), max_size=4).map(tuple),
)


@settings(max_examples=150, deadline=None)
@given(rationals, st.integers(-8, 4), st.integers(0, 20))
def test_expand_matches_long_division(r, lo, width):
    hi = lo + width
    assert list(expand(r, lo, hi).coefficients) == long_division(r, lo, hi)


@settings(max_examples=100, deadline=None)
@given(rationals, st.integers(1, 15))
def test_split_reassembles(r, depth):
    neg, const, pos = split_parts(r, depth)
    lo = neg.start if len(neg) else 0
    window = expand(r, lo, depth)
    rebuilt = {k: c for k, c in neg.items()}
    rebuilt[0] = const
    rebuilt.update(pos.items())
    assert all(window[k] == rebuilt.get(k, 0) for k in range(lo, depth + 1))
    v = r.valuation()
    if v is not None and v < 0:
        assert neg.start == v
    assert all(k < 0 for k, c in neg.items())


@settings(max_examples=60, deadline=None)
@given(rationals, st.integers(1, 4))
def test_substitute_power(r, k):
    lo = min(0, r.shift * k)
    base = expand(r, lo // k - 1, 10)
    sub = expand(r.substitute_power(k), lo, 10 * k)
    for deg in range(lo, 10 * k + 1):
        want = base.get(deg // k) if deg % k == 0 else 0
        assert sub[deg] == want


def test_split_examples():
    neg, const, _ = split_parts(g_function((2, 3, 3), 6), 5)
    assert len(neg) == 0 and const == 0
    neg, const, _ = split_parts(g_function((1, 1, 1), 5), 5)
    assert neg.support() == {-2: 1, -1: 3} and const == 6
    neg, const, pos = split_parts(CycloRational(0, (1,)), 4)
    assert len(neg) == 0 and const == 1 and not pos.support()


def test_truncate_rejects_poles():
    with pytest.raises(ValueError):
        truncate(g_function((1, 1, 1), 5), 4)


def test_f_series_examples():
    assert f_series((2, 3, 3), 6, 5).coefficients == (0, 1, 0, 1, 2)
    assert f_series((1, 1, 1), 3, 4).coefficients == (3, 6, 9, 12)
    assert f_series((1, 1, 1), 2, 3).coefficients == (1, 3, 5)
    with pytest.raises(ValueError):
        f_series((2, 2, 2), 4, 3)


def test_u_coefficient_examples():
    c = u_coefficients((2, 3, 3), 6, 8)
    assert {k: v for k, v in c.items() if k >= 0 and v} == {0: 1, 3: 2, 6: 2}
    assert not u_coefficients((1, 1, 1), 3, 10).support()
    c = u_coefficients((1, 1, 1), 5, 10)
    assert c[1] == -7 and c[7] == -10
    assert all(c[l] == -(2 * l + 5) for l in range(-2, 3))
    assert all(c[l] == -10 for l in range(3, 11))


def test_s_coefficient_examples():
    assert not s_coefficients((2, 3, 3), 6, 10).support()
    assert s_coefficients((1, 1, 1), 5, 6).coefficients == (3, 1, 0, 0, 0, 0)
    assert not s_coefficients((1, 1, 1), 3, 6).support()


def test_multiplier_identity_examples():
    assert check_indepp((1, 1, 1), 5, 7, 1).holds
    assert check_indepp((2, 3, 3), 6, 5, 1).holds
    assert check_indepp((2, 3, 3), 6, 1, 30).holds
    with pytest.raises(ValueError):
        check_indepp((2, 3, 3), 6, 3, 5)


def test_u_reciprocal_is_the_function_at_inverse():
    # numeric evaluation at a rational point
    u = u_function((1, 1, 1), 5)
    z = Fraction(2, 7)

    def ev(r, x):
        num = sum(c * x**i for i, c in enumerate(r.numerator))
        den = 1
        for e in r.denom_exponents:
            den *= 1 - x**e
        return x**r.shift * num / den

    assert ev(u.reciprocal(), z) == ev(u, 1 / z)
    assert ev(u, z) + ev(u, 1 / z) == 0


@pytest.mark.parametrize(
    "w,d",
    [((2, 3, 3), 6), ((1, 1, 1), 3), ((1, 1, 1), 4), ((1, 1, 1), 5), ((1, 2, 3), 7), ((3, 4, 5), 17), ((2, 5, 5), 10)],
)
def test_identities_hold(w, d):
    assert check_u_antisymmetry(w, d, 60).holds
    for p in (7, 11, 13):
        assert check_bk_identity(w, d, p, 50).holds
    for r in (5, 7, 11, 13):
        if gcd(r, lcm(*w)) == 1:
            assert check_indepp(w, d, r, 50).holds


def test_literal_antisymmetry_reading_fails():
    # the Laurent coefficients at 0 of u(z) alone do not satisfy c_l + c_{-l} = 0
    c = u_coefficients((2, 3, 3), 6, 3)
    assert c[3] + c[-3] == 2
    rep = check_u_coefficient_antisymmetry((2, 3, 3), 6, 60)
    assert not rep.holds and rep.first_failure == 0
    # a + b + c = d makes u vanish identically, the only case where it holds
    assert check_u_coefficient_antisymmetry((1, 1, 1), 3, 60).holds
