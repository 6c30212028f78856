"""Deterministic 2D differential-growth system: genotype -> grown form -> image."""

from .genotype import (
    N_PARAMS,
    PARAM_NAMES,
    PARAM_RANGES,
    Genotype,
    GenotypeError,
    genotype_from_u,
    validate_genotype,
)
from .growth import (
    DEFAULT_BUDGET,
    INITIAL_CELLS,
    GrowthResult,
    grow,
    growth_backend,
    growth_from_text,
    growth_to_text,
)
from .rendering import (
    RESOLUTIONS,
    Image,
    classify_empty,
    image_hash,
    read_pgm,
    render,
    write_pgm,
)

__all__ = [
    "N_PARAMS",
    "PARAM_NAMES",
    "PARAM_RANGES",
    "Genotype",
    "GenotypeError",
    "genotype_from_u",
    "validate_genotype",
    "DEFAULT_BUDGET",
    "INITIAL_CELLS",
    "GrowthResult",
    "grow",
    "growth_backend",
    "growth_from_text",
    "growth_to_text",
    "RESOLUTIONS",
    "Image",
    "classify_empty",
    "image_hash",
    "read_pgm",
    "render",
    "write_pgm",
]
