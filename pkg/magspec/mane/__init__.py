from .minimax import (MCVResult,
                      critical_value,
                      mane_objective,
                      node_energies,
                      lower_bounds,
                      dual_lower_bound)
from .strict import (StrictMCVResult,
                     strict_critical_value,
                     torus_harmonic_basis,
                     harmonic_projection)
from .reference import mane_reference, CATALOGUE
from .verify import VerificationReport, verify_lambda0_le_c, lambda0_second_derivative


__all__ = [
    "MCVResult",
    "critical_value",
    "mane_objective",
    "node_energies",
    "lower_bounds",
    "dual_lower_bound",
    "StrictMCVResult",
    "strict_critical_value",
    "torus_harmonic_basis",
    "harmonic_projection",
    "mane_reference",
    "CATALOGUE",
    "VerificationReport",
    "verify_lambda0_le_c",
    "lambda0_second_derivative",
]
