"""splitmix64 pseudo-random stream.

Chosen for the growth simulation because it is trivially portable: the whole
generator is a handful of 64-bit integer operations, so any implementation
(here, and the compiled kernel) produces the same stream bit for bit.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4B5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


class SplitMix64:
    """Deterministic 64-bit stream; `unit()` yields doubles in [0, 1)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def unit(self) -> float:
        """Uniform double in [0, 1), from the top 53 bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def symmetric(self) -> float:
        """Uniform double in [-1, 1)."""
        return 2.0 * self.unit() - 1.0
