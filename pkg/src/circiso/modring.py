"""Exact arithmetic over Z_n: gcd, the units group, reflexive reduction, scaling.

Everything here works on plain Python integers and tuples, is pure, and never
overflows (arbitrary precision), so products near n^2 are safe for any n in
scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Smallest modulus in scope; every cycle has length at least 3.
MIN_MODULUS = 3


class DegenerateJumpError(ValueError):
    """A value congruent to 0 mod n would encode a self-loop."""


class NonUnitError(ValueError):
    """Multiplier is not coprime to the modulus."""


def check_modulus(n: int) -> int:
    if n < MIN_MODULUS:
        raise ValueError(f"modulus must be at least {MIN_MODULUS}, got {n}")
    return n


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(a, 0) = a."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


@dataclass(frozen=True)
class UnitsGroup:
    """Multiplicative group of residues coprime to n, sorted ascending."""

    n: int
    elements: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and math.gcd(self.n, a % self.n) == 1

    def inverse(self, a: int) -> int:
        if a not in self:
            raise NonUnitError(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)


def units(n: int) -> UnitsGroup:
    """All residues in [1, n-1] coprime to n."""
    check_modulus(n)
    return UnitsGroup(n, tuple(a for a in range(1, n) if math.gcd(n, a) == 1))


def reflexive_reduce(n: int, values: Iterable[int]) -> tuple[int, ...]:
    """Reflexive modular reduction of a multiset of jump values.

    Each value is reduced mod n; results above n/2 are replaced by their
    mirror n - v; duplicates collapse and the result is sorted ascending,
    so every output lies in [1, n//2].  Values congruent to 0 are rejected:
    they would be self-loops, never a legal jump.
    """
    check_modulus(n)
    out: set[int] = set()
    for v in values:
        v %= n
        if v == 0:
            raise DegenerateJumpError(f"jump congruent to 0 mod {n}")
        out.add(min(v, n - v))
    return tuple(sorted(out))


def expand_symmetric(n: int, jumps: Sequence[int]) -> tuple[int, ...]:
    """Full symmetric form {r, n-r} of a half-form jump set, sorted."""
    out: set[int] = set()
    for r in jumps:
        out.add(r)
        out.add(n - r)
    return tuple(sorted(out))


def scale_set(n: int, a: int, jumps: Sequence[int]) -> tuple[int, ...]:
    """Half-form of a*R: scale the full symmetric form by a unit, then reduce.

    Scaling by 1 is the identity; a non-unit multiplier is rejected because
    the scaled set would collapse.
    """
    if math.gcd(n, a % n) != 1:
        raise NonUnitError(f"multiplier {a} is not coprime to {n}")
    return reflexive_reduce(n, (a * v for v in expand_symmetric(n, jumps)))
