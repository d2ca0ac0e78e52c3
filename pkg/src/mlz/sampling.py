"""Deterministic sample-point generation for the verification suites.

A splitmix64 stream gives 64-bit outputs that are identical on every
platform and Python version, so any report carrying its seed can be
reproduced byte for byte.  Sample coordinates are rationals num/den with
num and den drawn uniformly from 1..16.
"""

from __future__ import annotations

from fractions import Fraction

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit splitmix generator (Steele-Lea-Flood constants)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def small(self) -> int:
        """Uniform draw from 1..16 (top four bits of the next output)."""
        return 1 + (self.next64() >> 60)

    def rational(self) -> Fraction:
        num = self.small()
        den = self.small()
        return Fraction(num, den)


def derive(seed: int, *indices: int) -> SplitMix64:
    """Independent child stream for (seed, index...) -- partition-stable."""
    rng = SplitMix64(seed)
    mixed = rng.next64()
    for ix in indices:
        rng.state = (mixed ^ (ix & _MASK64)) & _MASK64
        mixed = rng.next64()
    return SplitMix64(mixed)


def positive_point(rng: SplitMix64, dim: int) -> tuple[Fraction, ...]:
    return tuple(rng.rational() for _ in range(dim))


def boundary_point(rng: SplitMix64, dim: int) -> tuple[Fraction, ...]:
    """First coordinate pinned to 0, the rest strictly positive."""
    return (Fraction(0),) + tuple(rng.rational() for _ in range(dim - 1))
