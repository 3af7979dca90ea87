from .base import ClosedFormSpectrum, convert, NORMALIZATIONS
from .flat import landau, circle_flux
from .hyperbolic import (maass,
                         maass_points,
                         maass_threshold,
                         sphere_bundle_h,
                         sphere_bundle_h_lambda0,
                         sphere_bundle_h_threshold,
                         sl2_universal_lambda0,
                         sl2_universal_argmin)
from .nil import (nil,
                  nil_member,
                  nil_universal_lambda0,
                  nil_universal_argmin,
                  nil_abelian_lambda0,
                  nil_abelian_lambda0_branches)
from .sol import SolFacts, sol_facts, sol_monopole_lower_bound, sol_quotient_modes
from .kepler import (kepler,
                     bohr,
                     kepler_spectrum,
                     bohr_spectrum,
                     kepler_total_spectrum_is_real_line)


__all__ = [
    "ClosedFormSpectrum",
    "convert",
    "NORMALIZATIONS",
    "landau",
    "circle_flux",
    "maass",
    "maass_points",
    "maass_threshold",
    "sphere_bundle_h",
    "sphere_bundle_h_lambda0",
    "sphere_bundle_h_threshold",
    "sl2_universal_lambda0",
    "sl2_universal_argmin",
    "nil",
    "nil_member",
    "nil_universal_lambda0",
    "nil_universal_argmin",
    "nil_abelian_lambda0",
    "nil_abelian_lambda0_branches",
    "SolFacts",
    "sol_facts",
    "sol_monopole_lower_bound",
    "sol_quotient_modes",
    "kepler",
    "bohr",
    "kepler_spectrum",
    "bohr_spectrum",
    "kepler_total_spectrum_is_real_line",
]
