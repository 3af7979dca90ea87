from .character import Character
from .operator import AssembledOperator, assemble, gauge_shift, CONVENTIONS
from .translation import MagneticTranslation, apply_magnetic_translation


__all__ = [
    "Character",
    "AssembledOperator",
    "assemble",
    "gauge_shift",
    "CONVENTIONS",
    "MagneticTranslation",
    "apply_magnetic_translation",
]
