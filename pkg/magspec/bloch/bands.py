import itertools
import numpy as np
import pandas as pd
from magspec.assembly import assemble, Character
from magspec.eigensolve import lowest_eigenvalues
from magspec.initializer import get_logger
from magspec.samplers import SerialSampler


class CoverSpec:
    """
    Character subset of an abelian cover, one fold count per periodic axis.
    None stands for the full circle of characters (the cover unrolls the
    axis completely), an integer n for the n-th roots of unity.
    """

    def __init__(self, folds):
        self.folds = dict((int(axis), None if n is None else int(n))
                          for axis, n in dict(folds).items())
        for axis, n in self.folds.items():
            if n is not None and n < 1:
                raise ValueError("fold count of axis {} must be >= 1, got {}".format(axis, n))

    @classmethod
    def full(cls, grid):
        return cls({axis: None for axis in grid.periodic_axes})

    @classmethod
    def finite(cls, grid, folds):
        folds = np.atleast_1d(folds)
        axes = grid.periodic_axes
        if len(folds) != len(axes):
            raise ValueError("{} folds for periodic axes {}".format(len(folds), axes))
        return cls(dict(zip(axes, folds)))

    @property
    def axes(self):
        return tuple(sorted(self.folds))

    @property
    def continuous_axes(self):
        return tuple(axis for axis in self.axes if self.folds[axis] is None)

    def check_grid(self, grid):
        if set(self.axes) != set(grid.periodic_axes):
            raise ValueError("cover axes {} do not match the periodic axes {}".format(
                self.axes, grid.periodic_axes))

    def angles(self, axis, samples_per_axis=64):
        n = self.folds[axis]
        count = samples_per_axis if n is None else n
        return 2 * np.pi * np.arange(count) / count

    def characters(self, samples_per_axis=64):
        grids = [self.angles(axis, samples_per_axis) for axis in self.axes]
        return [Character(angles, self.axes) for angles in itertools.product(*grids)]

    def to_dict(self):
        return {str(axis): ("inf" if n is None else n) for axis, n in self.folds.items()}

    def __repr__(self):
        return "CoverSpec({})".format(self.to_dict())


class BandStructure:
    """
    Twisted spectra over a sampled character set and their bands.

    Args:
        character_samples (list of Character): the sampled characters
        eigenvalue_table (np.ndarray): (samples, k) sorted eigenvalues
        bands (list of tuple): disjoint sorted closed intervals
        cover_spec (CoverSpec): the character subset
        samples_per_axis (int, optional): samples of a continuous axis
    """

    def __init__(self, character_samples, eigenvalue_table, bands, cover_spec,
                 samples_per_axis=None):
        self.character_samples = list(character_samples)
        self.eigenvalue_table = np.asarray(eigenvalue_table, dtype=float)
        self.bands = [tuple(band) for band in bands]
        self.cover_spec = cover_spec
        self.samples_per_axis = samples_per_axis

    @property
    def lambda0(self):
        return float(self.eigenvalue_table[:, 0].min())

    @property
    def argmin_character(self):
        return self.character_samples[int(np.argmin(self.eigenvalue_table[:, 0]))]

    def contains(self, value, tol=0.0):
        return any(a - tol <= value <= b + tol for a, b in self.bands)

    def to_frame(self):
        columns = {}
        for i, axis in enumerate(self.cover_spec.axes):
            columns["theta_{}".format(axis)] = [c.angles[i] for c in self.character_samples]
        for j in range(self.eigenvalue_table.shape[1]):
            columns["eig_{}".format(j)] = self.eigenvalue_table[:, j]
        return pd.DataFrame(columns)

    def to_dict(self):
        return {"bands": [[float(a), float(b)] for a, b in self.bands],
                "lambda0": self.lambda0,
                "argmin_character": list(self.argmin_character.angles)}


def merge_bands(table, resolution=0.0):
    """
    Merge the per-index ranges [min_j, max_j] of an eigenvalue table into
    disjoint sorted intervals. Intervals closer than resolution merge.
    """
    table = np.atleast_2d(table)
    intervals = sorted(zip(table.min(axis=0), table.max(axis=0)))
    merged = [list(intervals[0])]
    for a, b in intervals[1:]:
        if a <= merged[-1][1] + resolution:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return [tuple(band) for band in merged]


def sampling_resolution(table, cover_spec, samples_per_axis):
    """
    Largest change of an eigenvalue between neighbouring samples along a
    continuous axis, the error bar of band edges.
    """
    if not cover_spec.continuous_axes:
        return 0.0
    shape = [samples_per_axis if n is None else n
             for n in (cover_spec.folds[axis] for axis in cover_spec.axes)]
    grid = table.reshape(shape + [table.shape[1]])
    jumps = [np.abs(np.diff(grid, axis=cover_spec.axes.index(axis), append=np.take(
        grid, [0], axis=cover_spec.axes.index(axis)))).max()
        for axis in cover_spec.continuous_axes]
    return float(max(jumps))


def twisted_spectrum(task):
    grid, alpha, V, character, k, solver = task
    return np.sort(solver(assemble(grid, alpha, V, character), k=k).eigenvalues)


def band_structure(grid, alpha, V, cover_spec, samples_per_axis=64, k=4, sampler=None,
                   solver=lowest_eigenvalues):
    """
    Band structure of the periodic operator over a character subset.

    Args:
        grid (GridDiscretization): base grid, characters act on its
            periodic axes
        alpha (VectorPotential or None): magnetic potential
        V (ScalarPotential or None): electric potential
        cover_spec (CoverSpec): character subset
        samples_per_axis (int): uniform samples of a continuous axis
        k (int): eigenvalues per character
        sampler (Sampler, optional): parallel map over the characters
        solver (callable): op, k -> SpectrumResult of each twisted operator

    Returns:
        BandStructure
    """
    cover_spec.check_grid(grid)
    sampler = SerialSampler() if sampler is None else sampler
    characters = cover_spec.characters(samples_per_axis)
    k = min(k, grid.size)
    table = np.array(sampler.map(twisted_spectrum,
                                 [(grid, alpha, V, chi, k, solver) for chi in characters]))
    resolution = sampling_resolution(table, cover_spec, samples_per_axis)
    bands = merge_bands(table, resolution)
    structure = BandStructure(characters, table, bands, cover_spec, samples_per_axis)
    get_logger().info("bands of {} over {}: {} bands, lambda0={:.10g}".format(
        grid, cover_spec, len(bands), structure.lambda0))
    return structure


def lowest_band_hessian(structure):
    """
    Centred second differences of theta -> lambda0(theta) at the sampled
    minimizer of a full cover, one row and column per periodic axis.
    Mixed entries use the four diagonal neighbours.
    """
    spec = structure.cover_spec
    if spec.continuous_axes != spec.axes or structure.samples_per_axis is None:
        raise ValueError("the Hessian needs the full circle of characters, got {}".format(spec))
    count = structure.samples_per_axis
    d = len(spec.axes)
    surface = structure.eigenvalue_table[:, 0].reshape((count, ) * d)
    center = np.array(np.unravel_index(int(np.argmin(surface)), surface.shape))
    step = 2 * np.pi / count
    unit = np.eye(d, dtype=int)

    def at(offset):
        return surface[tuple((center + offset) % count)]

    hessian = np.zeros((d, d))
    for j in range(d):
        hessian[j, j] = (at(unit[j]) - 2 * at(0 * unit[j]) + at(-unit[j])) / step ** 2
        for k in range(j + 1, d):
            hessian[j, k] = hessian[k, j] = (
                at(unit[j] + unit[k]) - at(unit[j] - unit[k])
                - at(unit[k] - unit[j]) + at(-unit[j] - unit[k])) / (4 * step ** 2)
    return hessian
