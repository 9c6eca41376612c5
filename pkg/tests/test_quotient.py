import pytest
from hypothesis import given, settings, strategies as st

from poisson_hp0.formulas import (
    Stratum,
    StratumData,
    StratumPair,
    SymPowerSpec,
    frobenius_top_forms,
    kleinian_series,
    quotient_series,
    sympower_series,
)
from poisson_hp0.poly import GradedPoly, monomials_of_degree, WeightSystem
from poisson_hp0.presets import ade_preset, type_a
from poisson_hp0.quotient import (
    GroupActionSpec,
    close_group,
    cyclic_sl2,
    group_preset,
    hp0_B_mod_AB,
    hp0_dims_quotient,
    invariant_basis,
    minus_identity,
    quaternion_group,
    reynolds,
    swap_group,
    trivial_group,
    typeA_oracle,
    z3_rational,
)
from poisson_hp0.series import CycloRational
from poisson_hp0.surface import RefusalError, hp0_series


def support(seq):
    return {m: c for m, c in enumerate(seq) if c}


def test_close_group_examples():
    assert len(close_group(minus_identity(), 5)) == 2
    assert len(close_group(cyclic_sl2(3), 7)) == 3
    assert len(close_group(swap_group(), 5)) == 2
    assert len(close_group(quaternion_group(), 13)) == 8
    assert len(close_group(z3_rational(), 5)) == 3


def test_close_group_errors():
    with pytest.raises(ValueError):
        close_group(cyclic_sl2(3), 5)  # no cube root of unity in F_5
    with pytest.raises(RefusalError):
        close_group(z3_rational(), 3)  # p divides |G|
    with pytest.raises(ValueError):
        close_group(cyclic_sl2(7), 29, max_order=5)
    not_symplectic = GroupActionSpec(2, 1, ((((2,), (0,)), ((0,), (1,))),))
    with pytest.raises(ValueError):
        close_group(not_symplectic, 7)
    with pytest.raises(ValueError):
        GroupActionSpec(3, 1, ())


def test_invariant_basis_examples():
    assert invariant_basis(minus_identity(), 5, 3).basis == ()
    assert len(invariant_basis(minus_identity(), 5, 2).basis) == 3
    b3 = invariant_basis(cyclic_sl2(3), 7, 3).basis
    assert {tuple(sorted(f.terms)) for f in b3} == {((3, 0),), ((0, 3),)}
    assert len(invariant_basis(cyclic_sl2(3), 7, 2).basis) == 1


def _orbit_count(n, m):
    # monomials u^a v^b fixed by diag(zeta, zeta^{-1}) of order n: a = b mod n
    return sum(1 for a in range(m + 1) if (a - (m - a)) % n == 0)


@pytest.mark.parametrize("n,p", [(3, 7), (4, 13), (5, 11)])
def test_invariant_counts_type_a(n, p):
    for m in range(0, 25):
        assert len(invariant_basis(cyclic_sl2(n), p, m).basis) == _orbit_count(n, m)


def test_invariant_counts_swap():
    # S_2 permuting two blocks: orbits of monomials on 4 variables
    for m in range(0, 9):
        monos = monomials_of_degree(WeightSystem((1, 1, 1, 1)), m)
        orbits = {min(mo, (mo[2], mo[3], mo[0], mo[1])) for mo in monos}
        assert len(invariant_basis(swap_group(), 5, m).basis) == len(orbits)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["Z2", "Z3rat", "Q8", "S2"]), st.integers(0, 6), st.data())
def test_reynolds_idempotent(label, m, data):
    spec = group_preset(label)
    p = 13
    monos = monomials_of_degree(WeightSystem((1,) * spec.dim), m)
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=len(monos), max_size=len(monos)))
    f = GradedPoly(dict(zip(monos, coeffs)), p, spec.dim)
    r = reynolds(spec, p, f)
    assert reynolds(spec, p, r) == r
    for g in invariant_basis(spec, p, m).basis:
        assert reynolds(spec, p, g) == g


def test_hp0_quotient_examples():
    assert support(hp0_dims_quotient(minus_identity(), 5, 10)) == {0: 1, 8: 1}
    # the constant 1 = {u, v} is a bracket, so nothing survives in degree 0
    assert support(hp0_dims_quotient(trivial_group(), 5, 10)) == {8: 1}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_trivial_group_is_top_forms(p):
    N = 8 * p
    assert hp0_dims_quotient(trivial_group(), p, N) == list(frobenius_top_forms(2, p, N))


@pytest.mark.parametrize("p", [7, 13])
def test_embedding_independence(p):
    N = 4 * p
    base = hp0_dims_quotient(cyclic_sl2(3), p, N)
    assert hp0_dims_quotient(cyclic_sl2(3), p, N, root=4 if p == 7 else 9) == base
    assert hp0_dims_quotient(z3_rational(), p, N) == base


def test_bad_root_rejected():
    with pytest.raises(ValueError):
        hp0_dims_quotient(cyclic_sl2(3), 7, 5, root=3)


@pytest.mark.parametrize("spec,p,N", [(minus_identity(), 5, 18), (z3_rational(), 5, 16), (quaternion_group(), 13, 16), (swap_group(), 5, 12)])
def test_pairs_equal_generators(spec, p, N):
    assert hp0_dims_quotient(spec, p, N, spanning="pairs") == hp0_dims_quotient(spec, p, N)
    assert hp0_B_mod_AB(spec, p, N, spanning="pairs") == hp0_B_mod_AB(spec, p, N)


@pytest.mark.parametrize("label,spec,p", [("A1", minus_identity(), 5), ("A2", z3_rational(), 5), ("A2", cyclic_sl2(3), 7), ("A3", cyclic_sl2(4), 5), ("D4", quaternion_group(), 13)])
def test_matches_surface(label, spec, p):
    pre = ade_preset(label)
    N = 2 * p - 2 + 2 * p * pre.h
    q = hp0_dims_quotient(spec, p, N)
    assert q == hp0_series(pre.surface(), p, N)
    assert q == list(kleinian_series(pre, p, N))


@pytest.mark.parametrize("spec,p,deg0", [(minus_identity(), 5, 1), (z3_rational(), 7, 1), (swap_group(), 5, 0)])
def test_bounds_and_degree_zero(spec, p, deg0):
    dims = hp0_dims_quotient(spec, p, 14)
    for m, h in enumerate(dims):
        assert 0 <= h <= len(invariant_basis(spec, p, m).basis)
    # with a linear invariant pair, {u1 + u2, v1 + v2} = 2 kills the constants
    assert dims[0] == deg0


def test_swap_matches_sympower():
    assert hp0_dims_quotient(swap_group(), 5, 30) == list(sympower_series(SymPowerSpec(1, 2), 5, 30))


def test_B_mod_AB_examples():
    assert hp0_B_mod_AB(trivial_group(), 5, 20) == hp0_dims_quotient(trivial_group(), 5, 20)
    z2 = hp0_B_mod_AB(minus_identity(), 5, 30)
    assert z2[0] == 1
    # strata of C^2/{+-1}: the origin carries B_K/{A_K,B_K} = F in degree 0,
    # the open stratum carries top forms on the Frobenius twist of V
    strata = StratumData(
        (
            Stratum(0, (StratumPair((1,), CycloRational(0, (1,))),)),
            Stratum(2, (StratumPair((1,), CycloRational(0, (1,), (1, 1))),)),
        )
    )
    assert z2 == list(quotient_series(strata, 5, 30))


def test_typeA_oracle_examples():
    assert support(typeA_oracle(3, 7, 33)) == {0: 1, 2: 1, 12: 1, 26: 1, 33: 2}
    assert support(typeA_oracle(2, 5, 8)) == {0: 1, 8: 1}
    assert all(c == 0 for m, c in enumerate(typeA_oracle(4, 7, 80)) if m % 2)
    with pytest.raises(RefusalError):
        typeA_oracle(5, 5, 10)


@pytest.mark.parametrize("n,p", [(2, 3), (2, 7), (3, 5), (4, 7), (5, 11)])
def test_typeA_oracle_matches_quotient(n, p):
    N = 6 * p
    if (p - 1) % n == 0:
        assert typeA_oracle(n, p, N) == hp0_dims_quotient(cyclic_sl2(n), p, N)
    assert typeA_oracle(n, p, N) == hp0_series(type_a(n).surface(), p, N)
