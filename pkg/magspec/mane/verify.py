import json
from dataclasses import dataclass, asdict
from magspec.assembly import assemble
from magspec.eigensolve import lowest_eigenvalues
from magspec.exceptions import NotConverged, ViolationFound
from magspec.initializer import get_logger
from magspec.mane.minimax import critical_value


@dataclass
class VerificationReport:
    lambda0: float
    critical_value: float
    lower_bound: float
    gap: float
    solver_residual: float
    tolerance: float
    holds: bool

    def to_dict(self):
        return asdict(self)


def verify_lambda0_le_c(grid, alpha, V=None, tol=1e-6, mcv_tol=1e-3):
    """
    Check lambda0(alpha, V) <= c(alpha, V) on a compact grid.

    lambda0 comes from the assembled operator, c from the minimax. The
    comparison allows tol plus the eigensolver residual; the reported c is
    an upper bound of the discrete critical value, so its gap only enters
    the report.

    Returns:
        VerificationReport

    Raises:
        ViolationFound: when lambda0 exceeds c beyond the tolerance
    """
    spectrum = lowest_eigenvalues(assemble(grid, alpha, V), k=1)
    try:
        mcv = critical_value(grid, alpha, V, tol=mcv_tol)
    except NotConverged as err:
        mcv = err.result
    residual = float(spectrum.residual_norms[0])
    tolerance = tol + residual
    report = VerificationReport(spectrum.lambda0, mcv.value, mcv.lower_bound, mcv.gap,
                                residual, tolerance,
                                spectrum.lambda0 <= mcv.value + tolerance)
    get_logger().info("\nVerificationReport:\n" + json.dumps(report.to_dict(), indent=2))
    if not report.holds:
        raise ViolationFound(report)
    return report


def lambda0_second_derivative(grid, alpha, V=None, h_B=0.05):
    """Centred second difference of B -> lambda0(B alpha, V) at B = 0."""
    def lambda0(B):
        return lowest_eigenvalues(assemble(grid, B * alpha, V), k=1).lambda0

    return (lambda0(h_B) - 2 * lambda0(0.0) + lambda0(-h_B)) / h_B ** 2
