import pytest

from poisson_hp0.poly import WeightSystem
from poisson_hp0.presets import PRESET_LABELS, ade_preset, fermat, surface_preset, type_a, type_d
from poisson_hp0.series import expand, hilbert_A, jacobi_function
from poisson_hp0.surface import (
    RefusalError,
    SurfaceSpec,
    basis_of_degree,
    bracket_in_jacobi,
    hp0_dims,
    hp0_series,
    jacobi_dims,
    posch_allowed,
    posch_exceptions,
)


def support(seq):
    return {m: c for m, c in enumerate(seq) if c}


A1 = type_a(2).surface()
A2 = type_a(3).surface()


def test_spec_validation():
    with pytest.raises(ValueError):
        SurfaceSpec(WeightSystem((2, 3, 3)), (((3, 0, 0), 1), ((0, 1, 0), 1)))
    with pytest.raises(ValueError):
        SurfaceSpec(WeightSystem((1, 1)), (((2, 0), 1),))
    with pytest.raises(ValueError):
        SurfaceSpec(WeightSystem((1, 1, 1)), (((2, 0, 0), 1), ((2, 0, 0), -1)))
    assert A2.d == 6 and A2.delta == -2


def test_certificate_rejects_non_isolated():
    # x^2 y = 0 has a line of singularities
    bad = SurfaceSpec(WeightSystem((1, 1, 1)), (((2, 1, 0), 1),))
    with pytest.raises(ValueError):
        bad.certify()


@pytest.mark.parametrize("label", PRESET_LABELS)
def test_presets_certify(label):
    surface_preset(label).certify()


def test_basis_examples():
    assert len(basis_of_degree(A2, 7, 6)) == 3
    assert basis_of_degree(A2, 7, 0) == [(0, 0, 0)]
    assert basis_of_degree(A2, 7, 1) == []


@pytest.mark.parametrize("label", ["A2", "D4", "E6", "fermat4"])
def test_basis_count_matches_hilbert_series(label):
    spec = surface_preset(label)
    h = expand(hilbert_A(spec.weights, spec.d), 0, 40)
    for order in ("wlex", "wrevlex"):
        assert [len(basis_of_degree(spec, 101, m, order)) for m in range(41)] == list(h.coefficients)


def test_hp0_examples():
    assert support(hp0_series(A1, 5, 10)) == {0: 1, 8: 1}
    assert support(hp0_series(A2, 7, 33)) == {0: 1, 2: 1, 12: 1, 26: 1, 33: 2}


def test_refusals():
    with pytest.raises(RefusalError):
        hp0_dims(A2, 3, 10)
    with pytest.raises(RefusalError):
        hp0_dims(type_a(5).surface(), 5, 10)  # p divides d = 10
    with pytest.raises(RefusalError):
        hp0_dims(ade_preset("E6").surface(), 11, 10)  # p does not exceed the weight 12
    with pytest.raises(RefusalError):
        hp0_dims(fermat(3), 3, 5)


def test_degree_report_invariants():
    for spec, p in ((A2, 7), (type_d(5).surface(), 11), (fermat(4), 7)):
        for r in hp0_dims(spec, p, 40):
            assert 0 <= r.dim_bracket_span <= r.dim_jacobi_ideal <= r.dim_A
            assert r.hp0_dim >= 0
        assert hp0_dims(spec, p, 0)[0].hp0_dim == 1


@pytest.mark.parametrize("spec,p,N", [(A2, 7, 40), (fermat(3), 5, 20), (type_d(4).surface(), 7, 50)])
def test_bracket_inside_jacobi_ideal(spec, p, N):
    assert bracket_in_jacobi(spec, p, N) == []


@pytest.mark.parametrize("spec,p,N", [(A2, 7, 40), (fermat(3), 5, 20), (fermat(4), 7, 25), (ade_preset("E6").surface(), 13, 80)])
def test_order_and_spanning_independence(spec, p, N):
    base = hp0_series(spec, p, N)
    assert hp0_series(spec, p, N, order="wrevlex") == base
    M = min(N, 25 if spec.weights[0] > 1 else 13)
    assert hp0_series(spec, p, M, spanning="pairs") == base[: M + 1]


def test_jacobi_dims_examples():
    assert jacobi_dims(A2, 0, 10) == [1, 0, 1] + [0] * 8
    e8 = ade_preset("E8").surface()
    assert support(jacobi_dims(e8, 0, 70)) == {m: 1 for m in (0, 12, 20, 24, 32, 36, 44, 56)}
    quadric = SurfaceSpec(WeightSystem((1, 1, 1)), (((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)))
    assert jacobi_dims(quadric, 0, 5) == [1, 0, 0, 0, 0, 0]


def test_exceptional_degree_examples():
    assert posch_exceptions(A1, 5, 20) <= {3, 8, 13, 18}
    assert posch_exceptions(A2, 7, 12) <= {5, 12}
    assert posch_allowed(A2, 7, 12) and not posch_allowed(A2, 7, 13) and not posch_allowed(A2, 7, -2)


@pytest.mark.parametrize("label,p", [("A2", 11), ("fermat3", 7), ("fermat4", 11), ("D4", 13), ("E6", 29)])
def test_low_degrees_agree_with_char0_jacobi(label, p):
    # the t^p-supported tail can first appear in degree p + d - a - b - c
    spec = surface_preset(label)
    assert p > 2 * spec.d - sum(spec.weights)
    top = p + spec.delta
    hp0 = hp0_series(spec, p, top - 1)
    jac = expand(jacobi_function(spec.weights, spec.d), 0, top - 1).coefficients
    assert list(hp0) == list(jac)


def test_first_correction_sits_at_p_plus_delta():
    spec = fermat(4)
    hp0 = hp0_series(spec, 11, 12)
    jac = expand(jacobi_function(spec.weights, spec.d), 0, 12).coefficients
    assert hp0[12] - jac[12] == 7


@pytest.mark.parametrize("label,p", [("A2", 11), ("D4", 13), ("E6", 29)])
def test_kleinian_agree_below_2p_minus_2h(label, p):
    spec = surface_preset(label)
    top = 2 * p - 2 * max(spec.weights)
    hp0 = hp0_series(spec, p, top - 1)
    jac = expand(jacobi_function(spec.weights, spec.d), 0, top - 1).coefficients
    assert list(hp0) == list(jac)


def test_preset_table():
    for label in ("A1", "A4", "D4", "D7", "E6", "E7", "E8"):
        pre = ade_preset(label)
        assert pre.h == pre.a + pre.b - 2
        assert pre.surface().d == 2 * pre.h
        assert max(pre.weights) == pre.h
        spec = pre.surface()
        jac = support(jacobi_dims(spec, 0, 3 * spec.d))
        want = {}
        for k in pre.jacobi_degrees:
            want[k] = want.get(k, 0) + 1
        assert jac == want
    assert ade_preset("a_3").label == "A3"
    with pytest.raises(ValueError):
        ade_preset("E9")
    with pytest.raises(ValueError):
        ade_preset("X2")
