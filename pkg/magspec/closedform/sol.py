import numpy as np


class SolFacts:
    """
    Spectral statements for Sol with the left-invariant field
    (B_x, B_y), B = |(B_x, B_y)|, in the half normalization.

    Attributes:
        spectrum_superset_low: [1/2 B^2, inf) lies in the spectrum
        exact_if_B_le_half: the spectrum equals [1/2 B^2, inf)
        lambda0_lower: 1/2(B - 1/4) bounds lambda0 from below for B > 1/2
        lambda0_exact_when_By0: lambda0 = 1/2(|B_x| - 1/4) when B_y = 0
        member_point: 1/2(|B_x| + B_y^2 - 1/4) lies in the spectrum when
            |B_x| > 1/2
    """

    def __init__(self, Bx, By):
        self.Bx = float(Bx)
        self.By = float(By)
        self.B = float(np.hypot(self.Bx, self.By))
        self.spectrum_superset_low = 0.5 * self.B ** 2
        self.exact_if_B_le_half = self.B <= 0.5
        self.lambda0_lower = 0.5 * (self.B - 0.25) if self.B > 0.5 else None
        self.lambda0_exact_when_By0 = 0.5 * (abs(self.Bx) - 0.25) \
            if self.By == 0 and abs(self.Bx) > 0.5 else None
        self.member_point = 0.5 * (abs(self.Bx) + self.By ** 2 - 0.25) \
            if abs(self.Bx) > 0.5 else None

    @property
    def swapped(self):
        """The facts at (B_y, B_x); the spectrum is invariant under the swap."""
        return SolFacts(self.By, self.Bx)

    @property
    def lambda0(self):
        """lambda0 where it is known exactly, otherwise None."""
        if self.exact_if_B_le_half:
            return self.spectrum_superset_low
        if self.lambda0_exact_when_By0 is not None:
            return self.lambda0_exact_when_By0
        return self.swapped.lambda0_exact_when_By0

    @property
    def lambda0_upper(self):
        """Least spectral value the statements provide."""
        candidates = [self.spectrum_superset_low]
        for facts in (self, self.swapped):
            if facts.member_point is not None:
                candidates.append(facts.member_point)
        return min(candidates)

    def in_spectrum(self, value, tol=0.0):
        """Whether a value is certified to lie in the spectrum."""
        if value >= self.spectrum_superset_low - tol:
            return True
        for facts in (self, self.swapped):
            if facts.member_point is not None and abs(value - facts.member_point) <= tol:
                return True
        return False

    def to_dict(self):
        return {"Bx": self.Bx, "By": self.By, "B": self.B,
                "spectrum_superset_low": self.spectrum_superset_low,
                "exact_if_B_le_half": self.exact_if_B_le_half,
                "lambda0_lower": self.lambda0_lower,
                "lambda0_exact_when_By0": self.lambda0_exact_when_By0,
                "member_point": self.member_point,
                "lambda0": self.lambda0}

    def __repr__(self):
        return "SolFacts(Bx={}, By={})".format(self.Bx, self.By)


def sol_facts(Bx, By):
    return SolFacts(Bx, By)


def sol_monopole_lower_bound(B):
    """The monopole operator factors as 2H = A^* A + D_z^2 + B, so H >= |B|/2."""
    return 0.5 * abs(float(B))


def sol_quotient_modes(Bx, By, log_lambda, l_max):
    """
    Modes of the compact quotient constant along the torus fibres,
    1/2(B^2 + 4 pi^2 l^2 / (log lambda)^2) for l = 0..l_max.
    """
    if log_lambda <= 0:
        raise ValueError("log of the hyperbolic eigenvalue must be positive")
    B2 = float(Bx) ** 2 + float(By) ** 2
    return [0.5 * (B2 + 4 * np.pi ** 2 * l ** 2 / log_lambda ** 2)
            for l in range(l_max + 1)]
