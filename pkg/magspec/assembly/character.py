import numpy as np
from magspec.geometry.fields import VectorPotential


class Character:
    """
    Unitary character of the deck group of a periodic grid.

    The character is given by one angle per periodic axis, the phase picked
    up by a section when it is carried once around that period.

    Args:
        angles (sequence of float): theta_k, one per entry of axes
        axes (sequence of int): the periodic axes the angles refer to
    """

    def __init__(self, angles, axes):
        self.angles = tuple(float(np.mod(theta, 2 * np.pi)) for theta in angles)
        self.axes = tuple(int(axis) for axis in axes)
        if len(self.angles) != len(self.axes):
            raise ValueError("{} angles for {} axes".format(
                len(self.angles), len(self.axes)))

    @classmethod
    def trivial(cls, grid):
        axes = grid.periodic_axes
        return cls((0.0, ) * len(axes), axes)

    @classmethod
    def on_grid(cls, grid, angles):
        """Character with one angle per periodic axis of the grid."""
        return cls(angles, grid.periodic_axes)

    def check_grid(self, grid):
        for axis in self.axes:
            if not grid.is_periodic(axis):
                raise ValueError(
                    "character angle on non-periodic axis {}".format(axis))

    def wrap_phases(self, grid):
        """Phase added on the wrap-around links of every axis, shape (d,)."""
        self.check_grid(grid)
        phases = np.zeros(grid.dimension)
        for axis, theta in zip(self.axes, self.angles):
            phases[axis] = theta
        return phases

    def representative_form(self, grid):
        """The harmonic form omega with components theta_k / L_k."""
        self.check_grid(grid)
        components = np.zeros((grid.dimension, ) + grid.shape)
        link_phases = np.zeros_like(components)
        for axis, theta in zip(self.axes, self.angles):
            components[axis] = theta / grid.period(axis)
            link_phases[axis] = theta / grid.shape[axis]
        return VectorPotential(components, link_phases)

    def is_trivial(self):
        return all(theta == 0.0 for theta in self.angles)

    def to_dict(self):
        return {"axes": list(self.axes), "angles": list(self.angles)}

    def __repr__(self):
        return "Character(angles={}, axes={})".format(self.angles, self.axes)
