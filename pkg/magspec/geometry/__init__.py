from .geometry import Geometry, Identification, build_geometry, GEOMETRY_KINDS
from .grid import GridDiscretization, make_grid
from .fields import (VectorPotential,
                     ScalarPotential,
                     GaugeFunction,
                     centered_gradient,
                     model_potential_torus,
                     skew_normal_form)
from .hodge import (HodgeSplit,
                    hodge_decompose_torus,
                    coclosed_part,
                    coclosed_energy,
                    l2_inner,
                    l2_norm)


__all__ = [
    "Geometry",
    "Identification",
    "build_geometry",
    "GEOMETRY_KINDS",
    "GridDiscretization",
    "make_grid",
    "VectorPotential",
    "ScalarPotential",
    "GaugeFunction",
    "centered_gradient",
    "model_potential_torus",
    "skew_normal_form",
    "HodgeSplit",
    "hodge_decompose_torus",
    "coclosed_part",
    "coclosed_energy",
    "l2_inner",
    "l2_norm",
]
