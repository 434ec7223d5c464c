"""Isomorphism classification of circulant graphs.

Two mechanisms are implemented: Adam's (Type-1) isomorphism, an exhaustive
sweep of the units group looking for a multiplier carrying one connection set
onto the other, and Type-2 isomorphism, realized by a shear whose image is
circulant but not Adam's-isomorphic to the source.  Both are decision
procedures, not heuristics: a negative answer means the whole witness space
was exhausted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .circulant import CirculantGraph, ConnectionSet
from .modring import units
from .transform import LabeledGraph, Shear, _edge_image, image_if_circulant

KIND_IDENTICAL = "identical"
KIND_ADAMS = "adams"
KIND_TYPE2 = "type2"
KIND_UNRELATED = "not-related-by-these-methods"

#: Type-2 isomorphism is only defined for connection sets of at least 3 jumps.
MIN_TYPE2_JUMPS = 3


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of classification, with the witness that established it."""

    kind: str
    multiplier: int | None = None  # Adam's witness a with a*R = S
    r: int | None = None  # jump the type-2 shear was taken with respect to
    t: int | None = None  # shear shift witnessing type-2
    details: str | None = None

    def related(self) -> bool:
        return self.kind != KIND_UNRELATED

    def __str__(self) -> str:
        if self.kind == KIND_ADAMS:
            return f"adams a={self.multiplier}"
        if self.kind == KIND_TYPE2:
            return f"type2 r={self.r} t={self.t}"
        return self.kind


@dataclass(frozen=True)
class Type2Orbit:
    """Orbit of pairwise type-2 isomorphic graphs generated by the least shift.

    ``members[j]`` is the circulant image at shift ``shifts[j] = j*t1`` (mod
    n/m); the members form an abelian group under shift addition, with the
    base graph as identity.
    """

    base: CirculantGraph
    r: int
    t1: int
    members: tuple[CirculantGraph, ...]
    shifts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def member_sets(self) -> tuple[ConnectionSet, ...]:
        return tuple(g.connection_set for g in self.members)

    def verify_group_law(self) -> bool:
        """Recompute every pairwise composition and check closure/identity/inverse.

        Composing members j and k means shearing the base by shifts[j] +
        shifts[k]; the orbit is a group iff that lands on member (j + k) mod q.
        """
        period = Shear(self.base.n, self.r, 0).period
        q = self.size
        for j in range(q):
            for k in range(q):
                t = (self.shifts[j] + self.shifts[k]) % period
                image = (
                    self.base
                    if t == 0
                    else image_if_circulant(Shear(self.base.n, self.r, t), self.base)
                )
                if image is None:
                    return False
                if image.connection_set != self.members[(j + k) % q].connection_set:
                    return False
        return True


def gcd_signature_compatible(g1: CirculantGraph, g2: CirculantGraph) -> bool:
    """Necessary condition for isomorphism: equal multisets {gcd(n, r)}."""
    _require_same_order(g1, g2)
    return g1.connection_set.gcd_signature() == g2.connection_set.gcd_signature()


def adams_witness(g1: CirculantGraph, g2: CirculantGraph) -> int | None:
    """Least unit a with a*R1 = R2 under reflexive reduction, or None.

    The sweep over the whole units group is exhaustive by design; None is a
    proof that no multiplier works, not a timeout.
    """
    _require_same_order(g1, g2)
    source = g1.connection_set
    target = g2.connection_set
    if len(source.jumps) != len(target.jumps):
        return None
    for a in units(g1.n):
        if source.scaled(a) == target:
            return a
    return None


def adams_orbit(g: CirculantGraph) -> frozenset[ConnectionSet]:
    """Type-1 orbit {a*R : a a unit mod n} as canonical connection sets."""
    return frozenset(g.connection_set.scaled(a) for a in units(g.n))


def _type2_shear_checks(g: CirculantGraph, r: int) -> int:
    m = math.gcd(g.n, r % g.n)
    if m <= 1:
        raise ValueError(f"gcd({g.n}, {r}) = {m}; type-2 search needs a shared factor > 1")
    if len(g.jumps) < MIN_TYPE2_JUMPS:
        raise ValueError(
            f"type-2 search needs at least {MIN_TYPE2_JUMPS} jumps, got {len(g.jumps)}"
        )
    return m


def search_type2(g: CirculantGraph, r: int) -> list[tuple[int, CirculantGraph]]:
    """All (t, image) with a circulant, distinct, non-Adam's image, t ascending.

    The sweep covers every shift t in [1, n/m - 1].  r itself does not have to
    be a jump of g: sweeping a graph that carries no multiple of m is how
    non-existence scenarios are checked, and such sweeps come back empty.
    """
    m = _type2_shear_checks(g, r)
    hits: list[tuple[int, CirculantGraph]] = []
    for t in range(1, g.n // m):
        image = image_if_circulant(Shear(g.n, r, t), g)
        if image is None or image.connection_set == g.connection_set:
            continue
        if adams_witness(g, image) is None:
            hits.append((t, image))
    return hits


def t2_orbit(g: CirculantGraph, r: int) -> Type2Orbit | None:
    """Orbit generated by the smallest type-2 witness shift, or None.

    Walks the images at shifts t1, 2*t1, ... until the base recurs; the
    distinct members collected on the way form the orbit.  A non-circulant
    image at a multiple of t1 would contradict the group structure and raises.
    """
    hits = search_type2(g, r)
    if not hits:
        return None
    t1 = hits[0][0]
    period = Shear(g.n, r, 0).period
    members = [g]
    shifts = [0]
    for j in range(1, period + 1):
        t = (j * t1) % period
        if t == 0:
            break
        image = image_if_circulant(Shear(g.n, r, t), g)
        if image is None:
            raise RuntimeError(
                f"orbit of {g} w.r.t. r={r}: image at t={t} is not circulant, "
                "the shift multiples do not close into a group"
            )
        if image.connection_set == g.connection_set:
            break
        members.append(image)
        shifts.append(t)
    return Type2Orbit(base=g, r=r, t1=t1, members=tuple(members), shifts=tuple(shifts))


def v_orbit(g: CirculantGraph, r: int) -> list[LabeledGraph]:
    """All n/m shear images of g in shift order, circulant or not."""
    m = math.gcd(g.n, r % g.n)
    if m <= 1:
        raise ValueError(f"gcd({g.n}, {r}) = {m}; the shear needs a shared factor > 1")
    return [_edge_image(Shear(g.n, r, t), g) for t in range(g.n // m)]


def classify(g1: CirculantGraph, g2: CirculantGraph, r: int | None = None) -> IsoVerdict:
    """Dispatch: identical, else Adam's, else type-2, else not related.

    When r is not supplied, every jump shared by both graphs with
    gcd(n, r) > 1 is tried in ascending order; witnesses are always the least
    unit / least shift, so outputs are deterministic.
    """
    _require_same_order(g1, g2)
    if g1.connection_set == g2.connection_set:
        return IsoVerdict(KIND_IDENTICAL, multiplier=1)
    a = adams_witness(g1, g2)
    if a is not None:
        return IsoVerdict(KIND_ADAMS, multiplier=a)
    if len(g1.jumps) < MIN_TYPE2_JUMPS or len(g2.jumps) < MIN_TYPE2_JUMPS:
        return IsoVerdict(
            KIND_UNRELATED,
            details=f"type-2 testing skipped: it needs at least {MIN_TYPE2_JUMPS} jumps on both sides",
        )
    if r is not None:
        candidates: Sequence[int] = (r,)
    else:
        shared = sorted(set(g1.jumps) & set(g2.jumps))
        candidates = tuple(j for j in shared if math.gcd(g1.n, j) > 1)
        if not candidates:
            return IsoVerdict(
                KIND_UNRELATED,
                details="no shared jump with gcd(n, r) > 1 to shear with respect to",
            )
    for rr in candidates:
        m = math.gcd(g1.n, rr % g1.n)
        if m <= 1:
            raise ValueError(f"gcd({g1.n}, {rr}) = 1; cannot shear with respect to {rr}")
        for t in range(1, g1.n // m):
            image = image_if_circulant(Shear(g1.n, rr, t), g1)
            if image is not None and image.connection_set == g2.connection_set:
                return IsoVerdict(KIND_TYPE2, r=rr, t=t)
    return IsoVerdict(KIND_UNRELATED)


def _require_same_order(g1: CirculantGraph, g2: CirculantGraph) -> None:
    if g1.n != g2.n:
        raise ValueError(f"graphs live on different orders: {g1.n} and {g2.n}")
