from .families import ReducedFamily, Parameter, build_family, FAMILIES
from .members import member_ground_state, maass_member, sol_member
from .minimize import (CoverGroundState,
                       minimize_over_momenta,
                       abelian_cover_groundstate)
from .monopole import AssemblySpec, sol_monopole_reduction
from .oracles import maass_strip_oracle, sol_laplacian_oracle


__all__ = [
    "ReducedFamily",
    "Parameter",
    "build_family",
    "FAMILIES",
    "member_ground_state",
    "maass_member",
    "sol_member",
    "CoverGroundState",
    "minimize_over_momenta",
    "abelian_cover_groundstate",
    "AssemblySpec",
    "sol_monopole_reduction",
    "maass_strip_oracle",
    "sol_laplacian_oracle",
]
