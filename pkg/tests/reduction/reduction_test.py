import pytest
import numpy as np
from magspec import closedform
from magspec.reduction import (build_family,
                               minimize_over_momenta,
                               abelian_cover_groundstate,
                               maass_strip_oracle,
                               sol_laplacian_oracle,
                               sol_monopole_reduction,
                               FAMILIES)
from magspec.eigensolve import left_boundary_sensitivity
from magspec.exceptions import UnknownFamily, ScanRangeExhausted


def test_families_build():
    for name in ("torus_landau", "maass", "sphere_bundle_h", "sl2_universal", "nil",
                 "kepler_radial", "sol_monopole", "circle_flux"):
        B = [1.0] if name == "torus_landau" else 1.0
        assert build_family(name, B).name == name
    assert build_family("sol", (1.0, 0.0)).parameter_names == ["xi_x", "xi_y"]
    assert set(FAMILIES) >= {"maass", "nil", "sol"}


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        build_family("lens_space", 1.0)
    with pytest.raises(UnknownFamily):
        build_family("nil", 1.0, which="bogus")
    with pytest.raises(ValueError):
        build_family("sol", 1.0)


def test_nil_universal():
    state = minimize_over_momenta(build_family("nil", 2.0))
    assert state.value == pytest.approx(0.875, abs=1e-8)
    assert state.argmin["xi_z"] == pytest.approx(closedform.nil_universal_argmin(2.0), abs=1e-4)
    assert state.bracket[1] == pytest.approx(0.875)


def test_nil_universal_weak_field():
    # below |B| = 1/2 the infimum is the xi_z -> 0 limit
    state = minimize_over_momenta(build_family("nil", 0.3))
    assert state.value == pytest.approx(0.045)
    assert state.argmin["xi_z"] == pytest.approx(0.0, abs=1e-6)


def test_nil_abelian():
    family = build_family("nil", 6.0, which="abelian")
    state = abelian_cover_groundstate(family)
    assert state.value == pytest.approx(closedform.nil_abelian_lambda0(6.0))
    assert state.argmin == {"xi_z": -1}
    assert state.certificate["tail_bound"] >= state.value


def test_nil_numeric_inner_solver():
    family = build_family("nil", 2.0, inner="numeric")
    assert family.evaluate(xi_z=-0.25) == pytest.approx(
        closedform.nil_member(2.0, -0.25), abs=1e-6)


def test_circle_flux_fold():
    family = build_family("circle_flux", 0.25, n=2)
    state = abelian_cover_groundstate(family, lattice=2)
    assert state.value == pytest.approx(np.pi ** 2 / 8)
    with pytest.raises(ValueError):
        abelian_cover_groundstate(family, lattice=3)
    with pytest.raises(ValueError):
        abelian_cover_groundstate(build_family("nil", 1.0))


def test_torus_landau():
    state = minimize_over_momenta(build_family("torus_landau", [1.0, 2.0]))
    assert state.value == pytest.approx(1.5, abs=1e-5)


def test_maass_member():
    family = build_family("maass", 2.0)
    state = minimize_over_momenta(family)
    assert state.value == pytest.approx(1.0, abs=1e-3)
    with pytest.raises(ValueError):
        family.build(xi_x=0)


def test_kepler_without_tail_bound():
    # GIVEN a nonzero field the angular levels B m are unbounded below
    family = build_family("kepler_radial", 0.5)
    assert family.tail_bound(3) is None
    # THEN no finite enumeration certifies lambda0
    with pytest.raises(ScanRangeExhausted):
        minimize_over_momenta(family)


def test_kepler_tail_bound():
    family = build_family("kepler_radial", 0.0)
    assert family.tail_bound(2) == pytest.approx(-1 / (2 * 3.5 ** 2))
    assert family.lambda0_reference() == -2.0


def test_kepler_levels():
    family = build_family("kepler_radial", 0.0)
    # Friedrichs extension at m = 0, regular ground state at m = 1
    assert family.evaluate(m=0) == pytest.approx(-2.0, abs=1e-2)
    assert family.evaluate(m=1) == pytest.approx(-2 / 9, rel=1e-3)


def test_kepler_boundary_sensitivity():
    family = build_family("kepler_radial", 0.0, spacing=0.01, r_max=30.0)
    # GIVEN the left Dirichlet point moved between h/2 and h
    # THEN only the m = 0 level notices
    assert left_boundary_sensitivity(family.build(m=0), 2.5e-4) > 1e-3
    assert left_boundary_sensitivity(family.build(m=1), 2.5e-4) <= 1e-6


def test_sol_family():
    state = minimize_over_momenta(build_family("sol", (1.0, 0.0)))
    assert state.value == pytest.approx(0.375, abs=5e-3)


def test_sol_monopole_fibre_modes_agree():
    B, nodes = 1.0, (16, 32)
    folded = sol_monopole_reduction(B, 0.7, nodes=nodes).lambda0()
    # GIVEN the mode xi_t = 0.7 on a chart translated by -xi_t / B
    translated = sol_monopole_reduction(B, 0.7, nodes=nodes, fold=False)
    # THEN it matches the folded xi_t = 0 problem
    assert translated.info["x_offset"] == pytest.approx(-0.7)
    assert translated.lambda0() == pytest.approx(folded, rel=1e-8)
    family = build_family("sol_monopole", B, nodes=nodes)
    assert family.evaluate(xi_t=-1.3) == pytest.approx(folded, rel=1e-8)
    assert sol_monopole_reduction(B, -1.3, nodes=nodes, fold=False).lambda0() \
        == pytest.approx(folded, rel=1e-8)


def test_maass_strip_oracle():
    # the c_M = 1/8 constant of the maass family is gated by the 2D strip
    value = maass_strip_oracle(2.0, samples_per_axis=16)
    assert value == pytest.approx(closedform.maass(2.0).lambda0, abs=5e-3)
    assert value == pytest.approx(minimize_over_momenta(build_family("maass", 2.0)).value,
                                  abs=5e-3)


def test_sol_laplacian_oracle():
    value = sol_laplacian_oracle(nodes_z=100)
    # only the constant mode in x, y sees the whole window [-12, 12]
    assert 0.0 < value < 1e-2
    assert value == pytest.approx(0.5 * (np.pi / 24) ** 2, rel=5e-2)
