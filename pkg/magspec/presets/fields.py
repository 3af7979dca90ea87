import numpy as np
from magspec.exceptions import ConfigError
from magspec.geometry import VectorPotential, ScalarPotential, model_potential_torus


def _numbers(text):
    try:
        return [float(x) for x in text.split(",") if x]
    except ValueError:
        raise ConfigError("expected comma separated numbers, got {!r}".format(text))


def parse_alpha(grid, text):
    """
    Vector potential from a short text.

        zero            alpha = 0
        const:c1,c2,..  constant covector
        flux:a          2 pi a / L_1 dx_1
        c+sin           (c + sin 2 pi x_1 / L_1) dx_1
        landau:l1,l2,.. sum_j l_j x_{2j-1} dx_{2j}
    """
    text = str(text).strip()
    d = grid.dimension
    if text in ("zero", "0", ""):
        return VectorPotential.zeros(grid)
    kind, _, rest = text.partition(":")
    if kind == "const":
        vector = np.zeros(d)
        values = _numbers(rest)
        if len(values) > d:
            raise ConfigError("{} components for a {}-dimensional grid".format(len(values), d))
        vector[:len(values)] = values
        return VectorPotential.constant(grid, vector)
    if kind == "flux":
        (a, ) = _numbers(rest)
        vector = np.zeros(d)
        vector[0] = 2 * np.pi * a / grid.period(0)
        return VectorPotential.constant(grid, vector)
    if kind == "landau":
        return model_potential_torus(_numbers(rest), grid)
    if text.endswith("+sin"):
        (c, ) = _numbers(text[:-len("+sin")])
        x = grid.coordinates()[0]
        components = np.zeros((d, ) + grid.shape)
        components[0] = c + np.sin(2 * np.pi * x / grid.period(0))
        return VectorPotential(components)
    raise ConfigError("unknown vector potential text {!r}".format(text))


def parse_potential(grid, text):
    """
    Scalar potential from a short text: zero, const:c, cos
    (cos 2 pi x_1 / L_1) or amp*cos.
    """
    text = str(text).strip()
    if text in ("zero", "0", ""):
        return None
    if text.startswith("const:"):
        (c, ) = _numbers(text[len("const:"):])
        return ScalarPotential(np.full(grid.shape, c))
    if text.endswith("cos"):
        amplitude = text[:-len("cos")].rstrip("*")
        amplitude = 1.0 if not amplitude else _numbers(amplitude)[0]
        x = grid.coordinates()[0]
        return ScalarPotential(amplitude * np.cos(2 * np.pi * x / grid.period(0)))
    raise ConfigError("unknown scalar potential text {!r}".format(text))


def random_smooth_fields(grid, rng, modes=2, amplitude=0.5):
    """
    Random trigonometric alpha and V on a flat torus: a harmonic part plus
    low Fourier modes of the given amplitude.
    """
    x = grid.coordinates()
    d = grid.dimension
    components = np.zeros((d, ) + grid.shape)
    V = np.zeros(grid.shape)
    for axis in range(d):
        components[axis] += rng.uniform(-1.0, 1.0)
    for _ in range(modes):
        k = rng.integers(1, 3, size=d)
        phase = rng.uniform(0, 2 * np.pi)
        wave = np.sin(2 * np.pi * sum(k[j] * x[j] / grid.period(j) for j in range(d)) + phase)
        components += amplitude * rng.uniform(-1.0, 1.0, size=(d, ) + (1, ) * d) * wave
        V += amplitude * rng.uniform(-1.0, 1.0) * wave
    return VectorPotential(components), ScalarPotential(V)
