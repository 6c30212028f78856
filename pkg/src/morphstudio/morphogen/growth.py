"""Growth entry point: backend selection, result type, text serialization.

`grow` is a pure function of (genotype, seed, budget): identical inputs give
bit-identical results, and the compiled and pure-Python kernels agree bit for
bit (see `_growth_py` for the contract). Failure modes are reported through
the `viable` / `blow_up` flags, never as exceptions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _growth_py
from .genotype import Genotype

try:
    from . import _growth_core as _core
except ImportError:  # compiled kernel not built
    _core = None

INITIAL_CELLS = _growth_py.INITIAL_CELLS
DEFAULT_BUDGET = 4096

_FORMAT_TAG = "morphogen-growth v1"


def growth_backend() -> str:
    """Active kernel: "compiled" unless unavailable or overridden by the
    MORPHSTUDIO_PURE_PYTHON=1 environment variable."""
    if _core is None or os.environ.get("MORPHSTUDIO_PURE_PYTHON") == "1":
        return "python"
    return "compiled"


@dataclass
class GrowthResult:
    positions: np.ndarray  # (cell_count, 2) float64
    food: np.ndarray       # (cell_count,) float64
    steps_run: int
    cell_count: int
    viable: bool
    blow_up: bool
    cell_radius: float     # splat radius for rendering: half the rest length
    count_trace: np.ndarray  # (steps_run,) int32, population after each step


def grow(genotype: Genotype, seed: int, budget: int = DEFAULT_BUDGET,
         backend: str | None = None) -> GrowthResult:
    """Run the differential-growth simulation for `genotype.steps()` steps."""
    if budget < INITIAL_CELLS:
        raise ValueError(f"budget must be at least {INITIAL_CELLS}, got {budget}")
    if backend is None:
        backend = growth_backend()
    steps = genotype.steps()
    phys = genotype.physical

    if backend == "compiled":
        if _core is None:
            raise RuntimeError("compiled growth kernel is not available")
        px = np.empty(budget, dtype=np.float64)
        py = np.empty(budget, dtype=np.float64)
        vx = np.empty(budget, dtype=np.float64)
        vy = np.empty(budget, dtype=np.float64)
        food = np.empty(budget, dtype=np.float64)
        nxt = np.empty(budget, dtype=np.int32)
        prv = np.empty(budget, dtype=np.int32)
        trace = np.zeros(steps, dtype=np.int32)
        fxs = np.empty(budget, dtype=np.float64)
        fys = np.empty(budget, dtype=np.float64)
        use_rep = phys[2] != 0.0 and phys[3] > 0.0
        gsize = _growth_py.NSIDE_MAX ** 2 if use_rep else 1
        head = np.empty(gsize, dtype=np.int32)
        stamp = np.zeros(gsize, dtype=np.int64)
        bnext = np.empty(budget, dtype=np.int32)
        cgx = np.empty(budget, dtype=np.int32)
        cgy = np.empty(budget, dtype=np.int32)
        count, steps_run, blow = _core.grow_kernel(
            phys, seed & ((1 << 64) - 1), budget, steps,
            px, py, vx, vy, food, nxt, prv, trace,
            fxs, fys, head, stamp, bnext, cgx, cgy)
        positions = np.stack([px[:count], py[:count]], axis=1)
        food_out = food[:count].copy()
    elif backend == "python":
        px = [0.0] * budget
        py = [0.0] * budget
        vx = [0.0] * budget
        vy = [0.0] * budget
        food = [0.0] * budget
        nxt = [0] * budget
        prv = [0] * budget
        trace_l = [0] * steps
        count, steps_run, blow = _growth_py.grow_kernel(
            phys, seed & ((1 << 64) - 1), budget, steps,
            px, py, vx, vy, food, nxt, prv, trace_l)
        positions = np.stack(
            [np.asarray(px[:count]), np.asarray(py[:count])], axis=1)
        food_out = np.asarray(food[:count])
        trace = np.asarray(trace_l, dtype=np.int32)
    else:
        raise ValueError(f"unknown backend {backend!r}")

    return GrowthResult(
        positions=positions,
        food=food_out,
        steps_run=steps_run,
        cell_count=count,
        viable=(not blow) and count > INITIAL_CELLS,
        blow_up=bool(blow),
        cell_radius=phys[1] / 2.0,
        count_trace=trace[:steps_run].copy(),
    )


def growth_to_text(result: GrowthResult) -> str:
    """Serialize a growth result to the line-based golden-file format."""
    lines = [
        _FORMAT_TAG,
        f"cells {result.cell_count}",
        f"steps {result.steps_run}",
        f"viable {1 if result.viable else 0}",
        f"blowup {1 if result.blow_up else 0}",
        f"radius {result.cell_radius!r}",
    ]
    for i in range(result.cell_count):
        x, y = result.positions[i]
        lines.append(f"{float(x)!r} {float(y)!r} {float(result.food[i])!r}")
    return "\n".join(lines) + "\n"


def growth_from_text(text: str) -> GrowthResult:
    lines = text.strip("\n").split("\n")
    if not lines or lines[0] != _FORMAT_TAG:
        raise ValueError("not a growth text file")
    header = {}
    for line in lines[1:6]:
        key, value = line.split(" ", 1)
        header[key] = value
    count = int(header["cells"])
    rows = lines[6:6 + count]
    if len(rows) != count:
        raise ValueError(f"expected {count} cell rows, found {len(rows)}")
    positions = np.empty((count, 2), dtype=np.float64)
    food = np.empty(count, dtype=np.float64)
    for i, row in enumerate(rows):
        xs, ys, fs = row.split(" ")
        positions[i, 0] = float(xs)
        positions[i, 1] = float(ys)
        food[i] = float(fs)
    return GrowthResult(
        positions=positions,
        food=food,
        steps_run=int(header["steps"]),
        cell_count=count,
        viable=header["viable"] == "1",
        blow_up=header["blowup"] == "1",
        cell_radius=float(header["radius"]),
        count_trace=np.zeros(0, dtype=np.int32),
    )
