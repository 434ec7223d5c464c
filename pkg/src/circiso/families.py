"""Parametric generators for the type-2 families and their mirror identities.

Two constructions are provided.  The order-n*p^3 family for an odd prime p:
with d_i = (i-1)*x*p*n + x + y*p, member i collects p, the values k*n*p^2
plus/minus d_i, and the mirror of p; replacing the pair {p, n*p^3 - p} by
p-fold multiples of a coprime tuple gives the extended variant.  For p = 2
the same parameters specialize to the order-8n family taken with respect to
jump 2, and the generator dispatches there explicitly instead of pushing
p = 2 through the odd-prime formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .circulant import ConnectionSet


def _is_prime(p: int) -> bool:
    """Deterministic trial division; family primes are tiny."""
    if p < 2:
        return False
    if p > 10_000:
        raise ValueError(f"prime parameter {p} outside supported range (<= 10000)")
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_extras(extras: tuple[int, ...]) -> tuple[int, ...]:
    extras = tuple(int(e) for e in extras)
    if not extras:
        raise ValueError("extras must be nonempty when given")
    if any(e < 1 for e in extras):
        raise ValueError(f"extras must be positive, got {extras}")
    if list(extras) != sorted(set(extras)):
        raise ValueError(f"extras must be strictly increasing, got {extras}")
    if math.gcd(*extras) != 1:
        raise ValueError(f"gcd{extras} = {math.gcd(*extras)}, must be 1")
    return extras


@dataclass(frozen=True)
class PrimeCubeParams:
    """Parameters (p, n, x, y, i, extras) of the order-n*p^3 family.

    Constraints: p prime, 1 <= x <= p-1, 0 <= y <= n*p - 1,
    1 <= x + y*p <= n*p^2 - 1, 1 <= i <= p.  For p = 2 the value x = 1 is
    forced, n >= 2 is required and x + y*p may not be n or 3n (those shifts
    collapse the two family members into one set).
    """

    p: int
    n: int
    x: int
    y: int = 0
    i: int = 1
    extras: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 1 <= self.x <= self.p - 1:
            raise ValueError(f"x must satisfy 1 <= x <= p-1 = {self.p - 1}, got {self.x}")
        if not 0 <= self.y <= self.n * self.p - 1:
            raise ValueError(
                f"y must satisfy 0 <= y <= n*p-1 = {self.n * self.p - 1}, got {self.y}"
            )
        base_shift = self.x + self.y * self.p
        if not 1 <= base_shift <= self.n * self.p**2 - 1:
            raise ValueError(f"x + y*p = {base_shift} outside [1, {self.n * self.p**2 - 1}]")
        if not 1 <= self.i <= self.p:
            raise ValueError(f"i must satisfy 1 <= i <= p = {self.p}, got {self.i}")
        if self.extras is not None:
            object.__setattr__(self, "extras", _check_extras(self.extras))
        if self.p == 2:
            if self.x != 1:
                raise ValueError("p = 2 forces x = 1")
            if self.n < 2:
                raise ValueError("p = 2 needs n >= 2: on order 8 the two family sets coincide")
            if base_shift in (self.n, 3 * self.n):
                raise ValueError(
                    f"p = 2 with x + 2y = {base_shift} is degenerate: both family sets coincide"
                )

    @property
    def modulus(self) -> int:
        return self.n * self.p**3

    def with_index(self, i: int) -> "PrimeCubeParams":
        wrapped = (i - 1) % self.p + 1
        return replace(self, i=wrapped)


@dataclass(frozen=True)
class JumpTwoParams:
    """Parameters of the order-8n family taken with respect to jump 2.

    R carries the odd jumps 2s-1 and 4n-(2s-1), S the odd jumps 2n-(2s-1)
    and 2n+(2s-1); both share the even jumps 2*p_j.  Requires n >= 2,
    1 <= 2s-1 <= 2n-1 and n != 2s-1 (else R = S).
    """

    n: int
    s: int
    evens: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 1 <= 2 * self.s - 1 <= 2 * self.n - 1:
            raise ValueError(
                f"s must satisfy 1 <= 2s-1 <= 2n-1 = {2 * self.n - 1}, got 2s-1 = {2 * self.s - 1}"
            )
        if self.n == 2 * self.s - 1:
            raise ValueError(f"n = 2s-1 = {self.n} is excluded: both sets coincide")
        object.__setattr__(self, "evens", _check_extras(self.evens))

    @property
    def modulus(self) -> int:
        return 8 * self.n


def d_value(params: PrimeCubeParams) -> int:
    """The distinguished jump (i-1)*x*p*n + x + y*p of family member i."""
    return (params.i - 1) * params.x * params.p * params.n + params.x + params.y * params.p


def _build_set(modulus: int, intended: list[int], context: str) -> ConnectionSet:
    """Reduce intended jump values, refusing silent merges.

    Each entry stands for one jump class; two entries landing on the same
    class after reflexive reduction mean the parameters are degenerate, and
    that is reported rather than deduplicated away.
    """
    classes: list[int] = []
    for v in intended:
        v %= modulus
        if v == 0:
            raise ValueError(f"{context}: jump value is a multiple of the order {modulus}")
        classes.append(min(v, modulus - v))
    dupes = {c for c in classes if classes.count(c) > 1}
    if dupes:
        raise ValueError(f"{context}: jump collision on {sorted(dupes)} after reflexive reduction")
    return ConnectionSet(modulus, tuple(sorted(classes)))


def _d_classes(params: PrimeCubeParams) -> list[int]:
    """One representative per jump class derived from d: d itself and k*n*p^2 + d."""
    d = d_value(params)
    np2 = params.n * params.p**2
    return [d] + [k * np2 + d for k in range(1, params.p)]


def base_family_set(params: PrimeCubeParams) -> ConnectionSet:
    """Connection set of family member i with the plain {p, n*p^3 - p} pair."""
    if params.extras is not None:
        raise ValueError("base family set takes no extras; use extended_family_set")
    if params.p == 2:
        return _jump_two_pair(_as_jump_two(params))[params.i - 1]
    label = f"family(p={params.p}, n={params.n}, x={params.x}, y={params.y}, i={params.i})"
    return _build_set(params.modulus, [params.p] + _d_classes(params), label)


def extended_family_set(params: PrimeCubeParams) -> ConnectionSet:
    """Variant with {p, n*p^3 - p} replaced by the p-fold multiples of extras.

    extras = (1,) reproduces the base family set exactly.
    """
    if params.extras is None:
        raise ValueError("extended family set needs extras; use base_family_set without")
    if params.p == 2:
        return _jump_two_pair(_as_jump_two(params))[params.i - 1]
    label = (
        f"family(p={params.p}, n={params.n}, x={params.x}, y={params.y}, "
        f"i={params.i}, extras={params.extras})"
    )
    intended = _d_classes(params) + [params.p * e for e in params.extras]
    result = _build_set(params.modulus, intended, label)
    if params.extras == (1,):
        assert result == base_family_set(replace(params, extras=None))
    return result


def family_set(params: PrimeCubeParams) -> ConnectionSet:
    return base_family_set(params) if params.extras is None else extended_family_set(params)


def family_orbit(params: PrimeCubeParams) -> list[ConnectionSet]:
    """The p member sets starting at index i, wrapping the index mod p.

    Member j of the list equals the circulant shear image of member 0 at
    shift j*n with respect to jump p (checked in the test suite, not here:
    generation stays pure formula evaluation).
    """
    return [family_set(params.with_index(params.i + j)) for j in range(params.p)]


def _as_jump_two(params: PrimeCubeParams) -> JumpTwoParams:
    # x + 2y is the odd jump 2s - 1.  Values above 2n - 1 mirror to
    # 4n - (x + 2y) and produce the identical pair of sets, so the odd jump
    # is canonicalized into the range the jump-two family is stated for.
    evens = params.extras if params.extras is not None else (1,)
    odd = params.x + 2 * params.y
    odd = min(odd, 4 * params.n - odd)
    return JumpTwoParams(n=params.n, s=(odd + 1) // 2, evens=evens)


def _jump_two_pair(params: JumpTwoParams) -> tuple[ConnectionSet, ConnectionSet]:
    n = params.n
    modulus = params.modulus
    odd = 2 * params.s - 1
    evens = [2 * e for e in params.evens]
    r_set = _build_set(modulus, [odd, 4 * n - odd] + evens, f"r2-family R (n={n}, s={params.s})")
    s_set = _build_set(modulus, [2 * n - odd, 2 * n + odd] + evens, f"r2-family S (n={n}, s={params.s})")
    return r_set, s_set


def r2_family(params: JumpTwoParams) -> tuple[ConnectionSet, ConnectionSet]:
    """The (R, S) pair on order 8n related by the shear at shift n w.r.t. jump 2."""
    return _jump_two_pair(params)


def mirror_params(params: PrimeCubeParams) -> PrimeCubeParams:
    """Parameters with x + y*p replaced by n*p^2 - x - y*p.

    Decomposes as x' = p - x, y' = n*p - 1 - y; the generated set is
    identical to the original's for every member index.
    """
    return replace(params, x=params.p - params.x, y=params.n * params.p - 1 - params.y)
