"""The shear transformation of Z_n and its action on circulant graphs.

For r with m = gcd(n, r) > 1, the map sends x = q*m + j (0 <= j < m) to
x + j*t*m mod n.  In the (q, j) coordinates on Z_{n/m} x Z_m this is the
unimodular shear (q, j) -> (q + t*j, j), hence a bijection for every t.
Residues that are multiples of m (j = 0) are fixed.  Composition adds the
shift parameters t modulo n/m, so the shears with a fixed (n, r) form an
abelian group of order n/m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .circulant import CirculantGraph, ConnectionSet, make_graph
from .modring import check_modulus


class CirculancyCheckError(RuntimeError):
    """The vertex-0 symmetry shortcut and the full edge check disagreed.

    For shear images taken with respect to a jump of the graph the two tests
    are provably equivalent, so a disagreement means a bug, never bad input.
    """


@dataclass(frozen=True)
class Shear:
    """Bijective shear x -> x + (x mod m) * t * m of Z_n, m = gcd(n, r) > 1.

    The shift t is normalized into [0, n/m - 1] at construction; shears with
    the same (n, r) compose by adding shifts mod n/m.
    """

    n: int
    r: int
    t: int

    def __post_init__(self) -> None:
        check_modulus(self.n)
        if not 1 <= self.r < self.n:
            raise ValueError(f"jump r={self.r} outside [1, {self.n - 1}]")
        m = math.gcd(self.n, self.r)
        if m <= 1:
            raise ValueError(f"gcd({self.n}, {self.r}) = {m}; the shear needs a shared factor > 1")
        object.__setattr__(self, "t", self.t % (self.n // m))

    @property
    def m(self) -> int:
        return math.gcd(self.n, self.r)

    @property
    def period(self) -> int:
        """Order of the shear group for this (n, r): the shift modulus n/m."""
        return self.n // self.m

    def apply(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise ValueError(f"residue {x} outside Z_{self.n}")
        m = self.m
        return (x + (x % m) * self.t * m) % self.n

    @cached_property
    def _perm(self) -> np.ndarray:
        x = np.arange(self.n, dtype=np.int64)
        m = self.m
        return (x + (x % m) * (self.t * m)) % self.n

    def permutation(self) -> tuple[int, ...]:
        """Image of 0..n-1 in order; always a permutation of Z_n."""
        return tuple(int(v) for v in self._perm)

    def inverse(self) -> "Shear":
        return Shear(self.n, self.r, -self.t)

    def __str__(self) -> str:
        return f"shear(n={self.n}, r={self.r}, t={self.t})"


def compose(a: Shear, b: Shear) -> Shear:
    """Composition a after b; defined for matching (n, r), shifts add mod n/m."""
    if a.n != b.n or a.r != b.r:
        raise ValueError(
            f"cannot compose shears on (n={a.n}, r={a.r}) and (n={b.n}, r={b.r})"
        )
    return Shear(a.n, a.r, a.t + b.t)


@dataclass(frozen=True)
class LabeledGraph:
    """Plain edge-set graph on Z_n; the shear image before circulancy is known."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) on Z_{self.n}")

    def neighbors(self, v: int) -> frozenset[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return frozenset(out)

    def edge_count(self) -> int:
        return len(self.edges)


def graph_edge_set(g: CirculantGraph) -> frozenset[tuple[int, int]]:
    return frozenset(g.edges())


def as_labeled(g: CirculantGraph) -> LabeledGraph:
    return LabeledGraph(g.n, graph_edge_set(g))


def apply_to_graph(shear: Shear, g: CirculantGraph) -> LabeledGraph:
    """Edge image of the graph under the shear; r must be a jump of g.

    The image has the same edge count as g and the vertex map is bijective;
    whether it is again circulant is a separate question (see
    :func:`circulant_image`).
    """
    _require_jump(shear, g)
    return _edge_image(shear, g)


def _require_jump(shear: Shear, g: CirculantGraph) -> None:
    if shear.n != g.n:
        raise ValueError(f"shear is on Z_{shear.n}, graph on Z_{g.n}")
    if shear.r not in g.expanded_jumps:
        raise ValueError(f"r={shear.r} is not a jump of {g}")


def _edge_image(shear: Shear, g: CirculantGraph) -> LabeledGraph:
    perm = shear._perm
    edges = set()
    for u, v in g.edges():
        a, b = int(perm[u]), int(perm[v])
        edges.add((a, b) if a < b else (b, a))
    return LabeledGraph(g.n, frozenset(edges))


def satisfies_equidistance(h: LabeledGraph) -> bool:
    """Vertex-0 symmetry: 0 adjacent to j iff 0 adjacent to n - j.

    Every circulant graph satisfies this at every vertex; for shear images it
    is exactly the circulancy criterion.
    """
    nbrs = h.neighbors(0)
    return all((h.n - j) % h.n in nbrs for j in nbrs)


def _image_half_jumps(shear: Shear, g: CirculantGraph) -> tuple[int, ...] | None:
    """Half-form connection set of the shear image, or None if not circulant.

    Full-strength test over every edge: count the distinct image edges per
    difference class; the image is circulant iff every nonempty class is
    complete (n edges, or n/2 for the class n/2).  Enumerating (x, r) pairs
    visits each edge once, except for r = n/2 where every edge shows up
    twice, so that jump's tallies are halved.
    """
    n = g.n
    perm = shear._perm
    x = np.arange(n, dtype=np.int64)
    counts = np.zeros(n // 2 + 1, dtype=np.int64)
    for r in g.jumps:
        d = (perm[(x + r) % n] - perm[x]) % n
        np.minimum(d, n - d, out=d)
        tally = np.bincount(d, minlength=n // 2 + 1)
        if 2 * r == n:
            tally //= 2
        counts += tally
    filled = np.flatnonzero(counts)
    expected = np.where(filled * 2 == n, n // 2, n)
    if not np.all(counts[filled] == expected):
        return None
    return tuple(int(v) for v in filled)


def _v0_image_symmetric(shear: Shear, g: CirculantGraph) -> bool:
    image0 = {shear.apply(v) for v in g.connection_set.expanded()}
    return all((g.n - s) % g.n in image0 for s in image0)


def image_if_circulant(shear: Shear, g: CirculantGraph) -> CirculantGraph | None:
    """Circulant form of the shear image, or None.

    Unlike :func:`circulant_image` this does not require r to be a jump of g,
    which is what the non-existence sweeps need (a shear is well defined for
    any r with gcd(n, r) > 1).  The vertex-0 shortcut is compared against the
    full edge check whenever r is a jump; outside that scope the full check
    alone decides.
    """
    if shear.n != g.n:
        raise ValueError(f"shear is on Z_{shear.n}, graph on Z_{g.n}")
    half = _image_half_jumps(shear, g)
    fast = _v0_image_symmetric(shear, g)
    if (half is not None) != fast and shear.r in g.expanded_jumps:
        raise CirculancyCheckError(
            f"{shear} on {g}: vertex-0 symmetry={fast}, full check={half is not None}"
        )
    if half is None:
        return None
    return make_graph(g.n, ConnectionSet(g.n, half))


def circulant_image(shear: Shear, g: CirculantGraph) -> CirculantGraph | None:
    """C_n(S) with the same edge set as the shear image, or None.

    Runs both the all-vertex check and the vertex-0 symmetry shortcut and
    insists they agree; absence of a circulant image is a normal outcome.
    """
    _require_jump(shear, g)
    return image_if_circulant(shear, g)
