"""12-parameter genotype: normalized coordinates plus mapped physical values.

Normalized parameters u[0..11] live in [0, 1]. Physical values are an affine
map per parameter, except `repulsionRadius`, whose upper bound is four times
the (already mapped) `restLength` so the interaction radius stays tied to the
spring scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PARAM_NAMES = (
    "springStiffness",    # 0: pull toward loop neighbours at rest length
    "restLength",         # 1: spring rest length, world units
    "repulsion",          # 2: short-range push strength
    "repulsionRadius",    # 3: interaction radius, as 0..4 x restLength
    "smoothing",          # 4: pull toward neighbour midpoint
    "normalPush",         # 5: signed push along the outward loop normal
    "foodBaseRate",       # 6: food income per step
    "curvatureFoodBias",  # 7: signed income per radian of turning angle
    "splitThreshold",     # 8: food level that triggers division
    "damping",            # 9: velocity retained per step
    "foodNoise",          # 10: relative noise amplitude on food income
    "stepsFraction",      # 11: simulation length, 100..2000 steps
)

# (lo, hi) per parameter; repulsionRadius hi is a factor of restLength.
PARAM_RANGES = (
    (0.0, 1.0),
    (0.005, 0.02),
    (0.0, 1.0),
    (0.0, 4.0),  # factor, multiplied by physical restLength
    (0.0, 1.0),
    (-1.0, 1.0),
    (0.0, 0.2),
    (-1.0, 1.0),
    (0.5, 5.0),
    (0.5, 1.0),
    (0.0, 1.0),
    (0.0, 1.0),
)

N_PARAMS = 12


class GenotypeError(ValueError):
    """Raised for malformed genotype input."""


@dataclass(frozen=True)
class Genotype:
    """Validated genotype: normalized `u` and mapped `physical` values."""

    u: tuple[float, ...]
    physical: tuple[float, ...]

    def steps(self) -> int:
        """Simulation length: round(100 + 1900 * stepsFraction)."""
        return int(math.floor(100.0 + 1900.0 * self.physical[11] + 0.5))


def _map_physical(u: tuple[float, ...]) -> tuple[float, ...]:
    phys = []
    for i, ui in enumerate(u):
        lo, hi = PARAM_RANGES[i]
        phys.append(lo + ui * (hi - lo))
    phys[3] = phys[3] * phys[1]  # factor 0..4 times restLength
    return tuple(phys)


def validate_genotype(values) -> tuple[Genotype, list[str]]:
    """Clamp 12 raw parameters into [0, 1] and map physical values.

    Returns the genotype and a list of clamping warnings. Non-finite entries
    or wrong arity raise GenotypeError naming the offending index.
    """
    vals = [float(v) for v in values]
    if len(vals) != N_PARAMS:
        raise GenotypeError(f"expected {N_PARAMS} parameters, got {len(vals)}")
    warnings = []
    u = []
    for i, v in enumerate(vals):
        if not math.isfinite(v):
            raise GenotypeError(f"non-finite parameter {i}")
        if v < 0.0:
            warnings.append(f"parameter {i} clamped from {v!r} to 0.0")
            v = 0.0
        elif v > 1.0:
            warnings.append(f"parameter {i} clamped from {v!r} to 1.0")
            v = 1.0
        u.append(v)
    ut = tuple(u)
    return Genotype(u=ut, physical=_map_physical(ut)), warnings


def genotype_from_u(values) -> Genotype:
    """Validate `values`, requiring them to already lie in [0, 1]."""
    g, warnings = validate_genotype(values)
    if warnings:
        raise GenotypeError("; ".join(warnings))
    return g
