from .bands import (CoverSpec,
                    BandStructure,
                    band_structure,
                    lowest_band_hessian,
                    merge_bands,
                    sampling_resolution,
                    twisted_spectrum)
from .cover import cover_groundstate_via_characters, direct_cover_oracle, MAX_FOLD


__all__ = [
    "CoverSpec",
    "BandStructure",
    "band_structure",
    "lowest_band_hessian",
    "merge_bands",
    "sampling_resolution",
    "twisted_spectrum",
    "cover_groundstate_via_characters",
    "direct_cover_oracle",
    "MAX_FOLD",
]
