import pytest
import numpy as np
from magspec import closedform
from magspec.exceptions import InvalidQuantumNumber


def test_convert():
    assert closedform.convert(1.0, "half", "double") == 2.0
    assert closedform.convert(1.0, "double", "half") == 0.5


def test_landau():
    spectrum = closedform.landau([1.0, -2.0])
    assert spectrum.lambda0 == 3.0
    assert spectrum.continuum_threshold is None
    assert spectrum.points(7.0) == [3.0, 5.0, 7.0, 7.0]
    assert spectrum.converted("half").points(3.5) == [1.5, 2.5, 3.5, 3.5]
    assert spectrum.consistency_defect() == 0.0


def test_landau_with_kernel():
    spectrum = closedform.landau([1.0], rank_deficient=True)
    assert spectrum.continuum_threshold == 1.0
    assert spectrum.points() == []
    assert spectrum.contains(4.0)
    assert not spectrum.contains(0.5)
    with pytest.raises(ValueError):
        closedform.landau([0.0])


def test_circle_flux():
    spectrum = closedform.circle_flux(0.25)
    assert spectrum.lambda0 == pytest.approx(np.pi ** 2 / 8)
    assert spectrum.points()[0] == pytest.approx(spectrum.lambda0)
    # flux a and -a are complex conjugate problems
    assert spectrum.flipped().lambda0 == pytest.approx(spectrum.lambda0)
    assert closedform.circle_flux(1.25).lambda0 == pytest.approx(spectrum.lambda0)


def test_maass():
    spectrum = closedform.maass(2.0)
    assert spectrum.points() == [1.0, 2.0]
    assert spectrum.continuum_threshold == 2.125
    assert spectrum.lambda0 == 1.0
    weak = closedform.maass(0.3)
    assert weak.points() == []
    assert weak.lambda0 == pytest.approx(0.17)
    assert closedform.maass(-2.0).points() == [1.0, 2.0]


def test_sphere_bundle_h():
    assert closedform.sphere_bundle_h_lambda0(7 / 8) == pytest.approx(65 / 128)
    # both branches meet at 7/8
    assert closedform.sphere_bundle_h_lambda0(7 / 8 + 1e-9) == pytest.approx(65 / 128, abs=1e-8)
    assert closedform.sphere_bundle_h_lambda0(0.5) == pytest.approx(0.25)
    assert closedform.sphere_bundle_h_threshold(0.5) == pytest.approx(0.25)

    spectrum = closedform.sphere_bundle_h(1.5)
    assert spectrum.lambda0 == pytest.approx(0.625)
    assert spectrum.continuum_threshold == pytest.approx(0.75)
    assert spectrum.consistency_defect() < 1e-12


def test_sphere_bundle_h_consistency():
    for B in np.linspace(0.0, 3.0, 25):
        assert closedform.sphere_bundle_h(B).consistency_defect() < 1e-12


def test_sl2_universal():
    assert closedform.sl2_universal_lambda0(0.0) == pytest.approx(0.125)
    assert closedform.sl2_universal_lambda0(1.0) == pytest.approx(0.375)
    assert closedform.sl2_universal_lambda0(1.0 + 1e-9) == pytest.approx(0.375, abs=1e-8)
    assert closedform.sl2_universal_lambda0(-2.0) == pytest.approx(0.875)


def test_nil_universal():
    assert closedform.nil_universal_lambda0(0.3) == pytest.approx(0.045)
    assert closedform.nil_universal_lambda0(2.0) == pytest.approx(0.875)
    xi = closedform.nil_universal_argmin(2.0)
    assert xi == pytest.approx(-1.5 / (2 * np.pi))
    assert closedform.nil_member(2.0, xi) == pytest.approx(0.875)

    # GIVEN the member curve on a fine grid of momenta
    grid = np.linspace(-1.0, 1.0, 4001)
    members = [closedform.nil_member(2.0, x) for x in grid]
    # THEN nothing goes below the closed-form infimum
    assert min(members) >= 0.875 - 1e-12


def test_nil_abelian():
    assert closedform.nil_abelian_lambda0(0.0) == 0.0
    branches = closedform.nil_abelian_lambda0_branches(6.0, 2)
    assert sorted(branches) == [-2, -1, 0, 1, 2]
    assert branches[0] == pytest.approx(18.0)
    assert closedform.nil_abelian_lambda0(6.0) == pytest.approx(min(branches.values()))
    assert closedform.nil_abelian_lambda0(6.0) < 18.0
    # below pi + 1/2 only the trivial branch is active
    assert closedform.nil_abelian_lambda0(3.0) == pytest.approx(4.5)
    assert closedform.nil(3.0, "abelian").continuum_threshold == pytest.approx(4.5)
    with pytest.raises(ValueError):
        closedform.nil(1.0, which="bogus")


def test_sol_facts():
    assert closedform.sol_facts(1.0, 0.0).lambda0 == pytest.approx(0.375)
    assert closedform.sol_facts(0.0, 1.0).lambda0 == pytest.approx(0.375)
    assert closedform.sol_facts(0.4, 0.3).lambda0 == pytest.approx(0.125)

    facts = closedform.sol_facts(0.6, 0.8)
    assert facts.lambda0 is None
    assert facts.member_point == pytest.approx(0.495)
    assert facts.in_spectrum(0.495, tol=1e-12)
    assert facts.lambda0_lower == pytest.approx(0.375)
    assert facts.lambda0_upper == pytest.approx(0.455)
    assert not facts.in_spectrum(0.3)
    assert facts.to_dict()["B"] == pytest.approx(1.0)


def test_sol_monopole():
    assert closedform.sol_monopole_lower_bound(-3.0) == 1.5


def test_kepler():
    assert closedform.kepler(0.0, 1, 0) == pytest.approx(-2 / 9)
    assert closedform.kepler(0.1, -1, 0) == pytest.approx(-2 / 9 - 0.1)
    assert closedform.bohr(0) == -2.0
    assert closedform.bohr_spectrum().points(-0.1)[:2] == pytest.approx([-2.0, -2 / 9])
    assert closedform.kepler_spectrum(0.0, 2).lambda0 == pytest.approx(-2 / 25)
    assert not closedform.kepler_total_spectrum_is_real_line(0.0)
    assert closedform.kepler_total_spectrum_is_real_line(0.5)


def test_invalid_quantum_numbers():
    with pytest.raises(InvalidQuantumNumber):
        closedform.kepler(0.0, 0, 0)
    with pytest.raises(InvalidQuantumNumber):
        closedform.bohr(-1)
    with pytest.raises(InvalidQuantumNumber):
        closedform.kepler(0.0, 1, 0.5)
