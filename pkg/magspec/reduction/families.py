import numpy as np
from collections import namedtuple
from magspec.exceptions import UnknownFamily
from magspec.eigensolve import Effective1D, solve_effective_1d
from magspec.initializer import is_debug_mode
from magspec import closedform
from magspec.reduction.members import (maass_member,
                                       maass_potential,
                                       sol_member,
                                       sol_potential)

FAMILIES = ("torus_landau", "maass", "sphere_bundle_h", "sl2_universal", "nil",
            "sol", "kepler_radial", "sol_monopole", "circle_flux")
PARAMETER_KINDS = ("integer", "real", "sign", "cyclic")
SIGNS = (-1, 0, 1)


Parameter = namedtuple("Parameter", ["name", "kind", "bounds"])
Parameter.__new__.__defaults__ = (None, )


class ReducedFamily:
    """
    Momentum-parameterized family of reduced operators.

    Args:
        name (str): family name, one of FAMILIES
        fields (dict): the field strengths the family was built with
        parameters (list of Parameter): momentum parameters. "integer"
            ranges over Z, "cyclic" over Z_n (bounds = (0, n)), "sign" over
            {-1, 0, 1} and "real" over R, scanned on bounds.
        member (callable): **params -> ground energy of the member in the
            half convention of the full operator
        builder (callable, optional): **params -> Effective1D (or a list of
            them, or an AssemblySpec) realizing the member
        tail_bound (callable, optional): M -> lower bound of all members
            with some integer parameter |m| > M; None when no bound exists
        normalization (dict): convention tag and the additive ledger
            (energy = scale * (member + offset))
        reference (callable, optional): closed-form ground energy
        floor (float): lower bound of every member potential
    """

    def __init__(self, name, fields, parameters, member, builder=None,
                 tail_bound=None, normalization=None, reference=None,
                 floor=-np.inf):
        if is_debug_mode():
            for parameter in parameters:
                assert parameter.kind in PARAMETER_KINDS, \
                    "unknown parameter kind {}".format(parameter.kind)
        self.name = name
        self.fields = dict(fields)
        self.parameters = list(parameters)
        self._member = member
        self._builder = builder
        self.tail_bound = tail_bound
        self.normalization = dict(normalization or {"convention": "half",
                                                    "scale": 1.0, "offset": 0.0})
        self.reference = reference
        self.floor = floor

    @property
    def parameter_names(self):
        return [p.name for p in self.parameters]

    def parameter(self, name):
        for p in self.parameters:
            if p.name == name:
                return p
        raise KeyError(name)

    def evaluate(self, **params):
        return float(self._member(**params))

    def build(self, **params):
        if self._builder is None:
            raise NotImplementedError("{} has no operator builder".format(self.name))
        return self._builder(**params)

    def enumeration_range(self):
        """Default integer range |m| <= ceil(|B|) + 3."""
        strength = max([abs(v) for v in self.fields.values()
                        if np.isscalar(v)] + [0.0])
        return int(np.ceil(strength)) + 3

    def lambda0_reference(self):
        return None if self.reference is None else float(self.reference())

    def __repr__(self):
        return "ReducedFamily({}, {}, {})".format(
            self.name, self.fields, self.parameter_names)


def _oscillator(strength, offset=0.0, spacing=None):
    """-1/2 u'' + 1/2 strength^2 x^2 + offset on a window of 12 widths."""
    width = 12.0 / np.sqrt(abs(strength))
    spacing = width / 800 if spacing is None else spacing
    return Effective1D((-width, width), spacing,
                       lambda x: 0.5 * strength ** 2 * x ** 2 + offset,
                       left_bc="decay", right_bc="decay", richardson=True,
                       name="oscillator({:.6g})".format(strength))


def _torus_landau(lambda_list):
    lambda_list = tuple(float(lam) for lam in np.atleast_1d(lambda_list))
    if not lambda_list or any(lam == 0.0 for lam in lambda_list):
        raise ValueError("torus_landau needs nonzero field strengths, got {}".format(
            lambda_list))

    def builder():
        return [_oscillator(lam) for lam in lambda_list]

    def member():
        return sum(solve_effective_1d(eff).lambda0 for eff in builder())

    return ReducedFamily(
        "torus_landau", {"lambda_list": lambda_list}, [], member, builder,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.0},
        reference=lambda: closedform.landau(lambda_list).converted("half").lambda0,
        floor=0.0)


def _maass(B, spacing=0.02):
    def builder(xi_x):
        if xi_x == 0:
            raise ValueError("xi_x = 0 is the continuum threshold, there is no operator")
        window = (-40.0, 6.0 + np.log(abs(B) + 2.0))
        return Effective1D(window, spacing, maass_potential(B, int(np.sign(xi_x))),
                           left_bc="decay", right_bc="decay",
                           continuum_threshold=closedform.maass_threshold(B),
                           richardson=True, name="maass")

    return ReducedFamily(
        "maass", {"B": B}, [Parameter("xi_x", "sign")],
        lambda xi_x: maass_member(B, int(np.sign(xi_x)), spacing), builder,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.125},
        reference=lambda: closedform.maass(B).lambda0, floor=0.125)


def _sphere_bundle_h(B, spacing=0.02):
    def member(m, xi_x):
        return maass_member(float(m), int(np.sign(xi_x)), spacing) + 0.5 * (m + B) ** 2

    def tail_bound(M):
        if M + 1 <= abs(B):
            return -np.inf
        return 0.5 * (M + 1 - abs(B)) ** 2

    return ReducedFamily(
        "sphere_bundle_h", {"B": B},
        [Parameter("m", "integer"), Parameter("xi_x", "sign")],
        member, tail_bound=tail_bound,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.125},
        reference=lambda: closedform.sphere_bundle_h_lambda0(B), floor=0.125)


def _sl2_universal(B, spacing=0.02):
    def member(xi_phi, xi_x):
        return maass_member(float(xi_phi), int(np.sign(xi_x)), spacing) \
            + 0.5 * (xi_phi + B) ** 2

    reach = abs(B) + 1.0
    return ReducedFamily(
        "sl2_universal", {"B": B},
        [Parameter("xi_phi", "real", (-reach, reach)), Parameter("xi_x", "sign")],
        member,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.125},
        reference=lambda: closedform.sl2_universal_lambda0(B), floor=0.125)


def _nil(B, which="universal", inner="closed_form"):
    if which not in ("universal", "abelian"):
        raise UnknownFamily("unknown nil cover {!r}".format(which))
    if inner not in ("closed_form", "numeric"):
        raise ValueError("unknown inner solver {!r}".format(inner))

    def builder(xi_z):
        if xi_z == 0:
            raise ValueError("xi_z = 0 is the continuum threshold, there is no operator")
        return _oscillator(2 * np.pi * xi_z, 0.5 * (2 * np.pi * xi_z + B) ** 2)

    def member(xi_z):
        if xi_z == 0 or inner == "closed_form":
            return closedform.nil_member(B, xi_z)
        return solve_effective_1d(builder(xi_z)).lambda0

    if which == "universal":
        reach = (abs(B) + 1.0) / (2 * np.pi)
        parameters = [Parameter("xi_z", "real", (-reach, reach))]
        tail_bound = None
        reference = lambda: closedform.nil_universal_lambda0(B)  # noqa: E731
    else:
        parameters = [Parameter("xi_z", "integer")]

        def tail_bound(M):
            if 2 * np.pi * (M + 1) <= abs(B):
                return -np.inf
            return 0.5 * (2 * np.pi * (M + 1) - abs(B)) ** 2
        reference = lambda: closedform.nil_abelian_lambda0(B)  # noqa: E731

    family = ReducedFamily(
        "nil", {"B": B}, parameters, member, builder, tail_bound=tail_bound,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.0},
        reference=reference, floor=0.0)
    family.which = which
    return family


def _sol(B, spacing=0.02):
    Bx, By = (float(b) for b in B)
    strength2 = Bx ** 2 + By ** 2

    def builder(xi_x, xi_y):
        potential = sol_potential(Bx, By, xi_x, xi_y)
        window = (-12.0 - (60.0 if xi_y == 0 else 0.0), 12.0 + (60.0 if xi_x == 0 else 0.0))
        return Effective1D(window, spacing, potential, left_bc="decay",
                           right_bc="decay", mass_prefactor=1.0,
                           continuum_threshold=0.0 if 0 in (xi_x, xi_y) else None,
                           richardson=True, name="sol")

    def member(xi_x, xi_y):
        # the reduced operator is 2H - B^2
        return 0.5 * (sol_member(Bx, By, int(np.sign(xi_x)), xi_y, spacing) + strength2)

    reach = 2.0 * (np.sqrt(strength2) + 1.0)
    facts = closedform.sol_facts(Bx, By)
    return ReducedFamily(
        "sol", {"Bx": Bx, "By": By},
        [Parameter("xi_x", "sign"), Parameter("xi_y", "real", (-reach, reach))],
        member, builder,
        normalization={"convention": "half", "scale": 0.5, "offset": strength2},
        reference=lambda: facts.lambda0, floor=0.0)


def _kepler_radial(B, spacing=0.01, r_max=60.0):
    def builder(m):
        m = int(m)
        if m == 0:
            return Effective1D((0.0, r_max), spacing, lambda r: -1.0 / (8 * r ** 2) - 1.0 / r,
                               left_bc="friedrichs_kepler", right_bc="decay",
                               continuum_threshold=0.0, richardson=True,
                               name="kepler(m=0)")
        return Effective1D((0.0, r_max), spacing,
                           lambda r: (m ** 2 - 0.25) / (2 * r ** 2) - 1.0 / r + B * m,
                           left_bc="dirichlet", right_bc="decay",
                           continuum_threshold=B * m, richardson=True,
                           name="kepler(m={})".format(m))

    def member(m):
        return solve_effective_1d(builder(m)).lambda0

    def tail_bound(M):
        if B != 0:
            return None
        return -1.0 / (2 * (M + 1.5) ** 2)

    return ReducedFamily(
        "kepler_radial", {"B": B}, [Parameter("m", "integer")], member, builder,
        tail_bound=tail_bound,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.0},
        reference=(lambda: closedform.bohr(0)) if B == 0 else None)


def _sol_monopole(B, **options):
    from magspec.reduction.monopole import sol_monopole_reduction

    def builder(xi_t):
        return sol_monopole_reduction(B, xi_t, **options)

    def member(xi_t):
        return builder(xi_t).lambda0()

    return ReducedFamily(
        "sol_monopole", {"B": B}, [Parameter("xi_t", "real", (-2.0, 2.0))],
        member, builder,
        normalization={"convention": "half", "scale": 1.0, "offset": -0.125},
        reference=None, floor=closedform.sol_monopole_lower_bound(B))


def _circle_flux(a, n=1, length=1.0):
    n = int(n)
    if n < 1:
        raise ValueError("fold count must be >= 1, got {}".format(n))

    def member(j):
        shifted = a + j / n
        return 2 * np.pi ** 2 * (shifted - np.round(shifted)) ** 2 / length ** 2

    return ReducedFamily(
        "circle_flux", {"a": a, "n": n}, [Parameter("j", "cyclic", (0, n))], member,
        normalization={"convention": "half", "scale": 1.0, "offset": 0.0},
        reference=lambda: min(member(j) for j in range(n)), floor=0.0)


_BUILDERS = {
    "torus_landau": _torus_landau,
    "maass": _maass,
    "sphere_bundle_h": _sphere_bundle_h,
    "sl2_universal": _sl2_universal,
    "nil": _nil,
    "sol": _sol,
    "kepler_radial": _kepler_radial,
    "sol_monopole": _sol_monopole,
    "circle_flux": _circle_flux,
}


def build_family(name, B, **options):
    """
    Build a reduced family.

    Args:
        name (str): one of FAMILIES
        B: field strengths, (B_x, B_y) for sol, lambda_list for
            torus_landau, the flux a for circle_flux, a real number otherwise
        **options: family options, e.g. which="abelian" for nil or n for
            circle_flux

    Returns:
        ReducedFamily

    Raises:
        UnknownFamily: when name is not in FAMILIES
    """
    if name not in _BUILDERS:
        raise UnknownFamily("unknown family {!r}, expected one of {}".format(
            name, FAMILIES))
    if name == "sol" and np.ndim(B) != 1:
        raise ValueError("sol takes (B_x, B_y), got {!r}".format(B))
    return _BUILDERS[name](B, **options)
