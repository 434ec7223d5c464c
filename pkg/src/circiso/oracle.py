"""Verification oracles independent of the classification machinery.

Nothing here trusts the theory modules: edge preservation is checked pair by
pair, isomorphism is decided by backtracking search, and the shift sweep
re-derives circulancy by comparing explicit edge sets.  These are the ground
truths the fast paths are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circulant import CirculantGraph, make_graph
from .modring import reflexive_reduce
from .transform import LabeledGraph, Shear

STATUS_ISOMORPHIC = "isomorphic"
STATUS_NON_ISOMORPHIC = "not-isomorphic"
STATUS_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class VertexBijection:
    """Witness container: position v maps to image[v]."""

    n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(self.n)):
            raise ValueError(f"image is not a permutation of Z_{self.n}")

    def __call__(self, v: int) -> int:
        return self.image[v]

    @classmethod
    def identity(cls, n: int) -> "VertexBijection":
        return cls(n, tuple(range(n)))

    @classmethod
    def from_shear(cls, shear: Shear) -> "VertexBijection":
        return cls(shear.n, shear.permutation())


@dataclass(frozen=True)
class SearchOutcome:
    """Result of the backtracking search; budget exhaustion is first-class.

    ``inconclusive`` is never conflated with a negative answer: only a fully
    exhausted search tree reports non-isomorphism.
    """

    status: str
    witness: VertexBijection | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == STATUS_ISOMORPHIC


def _edge_set(g: CirculantGraph | LabeledGraph) -> frozenset[tuple[int, int]]:
    if isinstance(g, LabeledGraph):
        return g.edges
    return frozenset(g.edges())


def _adjacency(g: CirculantGraph | LabeledGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in _edge_set(g):
        adj[u].add(v)
        adj[v].add(u)
    return adj


def verify_bijection_is_isomorphism(
    f: VertexBijection, g: CirculantGraph, h: CirculantGraph | LabeledGraph
) -> bool:
    """Check a claimed isomorphism edge by edge, no shortcuts."""
    if not (f.n == g.n == h.n):
        return False
    h_edges = _edge_set(h)
    g_edges = _edge_set(g)
    if len(g_edges) != len(h_edges):
        return False
    for u, v in g_edges:
        a, b = f(u), f(v)
        if ((a, b) if a < b else (b, a)) not in h_edges:
            return False
    return True


def isomorphic_bruteforce(
    g: CirculantGraph | LabeledGraph,
    h: CirculantGraph | LabeledGraph,
    budget: int = 2_000_000,
) -> SearchOutcome:
    """Backtracking vertex-assignment search for an isomorphism g -> h.

    Candidate targets are constrained to common neighbors of the images of
    already-mapped neighbors, and the next source vertex is always a
    most-constrained one (max mapped neighbors).  ``budget`` caps the number
    of attempted assignments; exceeding it returns inconclusive.  Intended
    for small orders (n up to roughly 40).
    """
    if g.n != h.n:
        return SearchOutcome(STATUS_NON_ISOMORPHIC)
    n = g.n
    g_adj = _adjacency(g)
    h_adj = _adjacency(h)
    if sorted(len(s) for s in g_adj) != sorted(len(s) for s in h_adj):
        return SearchOutcome(STATUS_NON_ISOMORPHIC)
    if len(_edge_set(g)) != len(_edge_set(h)):
        return SearchOutcome(STATUS_NON_ISOMORPHIC)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def next_vertex() -> int:
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if v in mapping:
                continue
            key = (sum(1 for w in g_adj[v] if w in mapping), len(g_adj[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def candidates(v: int) -> list[int]:
        mapped_nbrs = [mapping[w] for w in g_adj[v] if w in mapping]
        if mapped_nbrs:
            pool = set(h_adj[mapped_nbrs[0]])
            for img in mapped_nbrs[1:]:
                pool &= h_adj[img]
            pool -= used
        else:
            pool = set(range(n)) - used
        out = []
        for c in sorted(pool):
            if len(h_adj[c]) != len(g_adj[v]):
                continue
            ok = True
            for w, img in mapping.items():
                if (w in g_adj[v]) != (img in h_adj[c]):
                    ok = False
                    break
            if ok:
                out.append(c)
        return out

    def extend() -> bool:
        nonlocal nodes
        if len(mapping) == n:
            return True
        v = next_vertex()
        for c in candidates(v):
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            mapping[v] = c
            used.add(c)
            if extend():
                return True
            del mapping[v]
            used.discard(c)
        return False

    try:
        found = extend()
    except _BudgetExceeded:
        return SearchOutcome(STATUS_INCONCLUSIVE, nodes=nodes)
    if not found:
        return SearchOutcome(STATUS_NON_ISOMORPHIC, nodes=nodes)
    witness = VertexBijection(n, tuple(mapping[v] for v in range(n)))
    return SearchOutcome(STATUS_ISOMORPHIC, witness=witness, nodes=nodes)


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SweepRow:
    """One shift of the exhaustive sweep and everything observed about it."""

    t: int
    circulant: bool
    image_jumps: tuple[int, ...] | None
    identical: bool
    adams_multiplier: int | None
    type2: bool


@dataclass(frozen=True)
class SweepReport:
    graph: CirculantGraph
    r: int
    rows: tuple[SweepRow, ...]

    def type2_shifts(self) -> tuple[int, ...]:
        return tuple(row.t for row in self.rows if row.type2)

    def circulant_shifts(self) -> tuple[int, ...]:
        return tuple(row.t for row in self.rows if row.circulant)

    def type2_hits(self) -> list[tuple[int, CirculantGraph]]:
        return [
            (row.t, make_graph(self.graph.n, row.image_jumps))
            for row in self.rows
            if row.type2 and row.image_jumps is not None
        ]


def exhaustive_type2_sweep(g: CirculantGraph, r: int) -> SweepReport:
    """Ground-truth table over every shift t in [0, n/m - 1].

    Each image is materialized as an explicit edge set; circulancy is decided
    by comparing that edge set against the circulant graph built from the
    image neighborhood of vertex 0, and Adam's equivalence by scanning the
    units for a multiplier matching the full symmetric sets.  None of the
    classification fast paths are reused.
    """
    n = g.n
    m = math.gcd(n, r % n)
    if m <= 1:
        raise ValueError(f"gcd({n}, {r}) = {m}; the sweep needs a shared factor > 1")
    base_edges = _edge_set(g)
    expanded = set(g.connection_set.expanded())
    rows = []
    for t in range(n // m):
        perm = [(x + (x % m) * t * m) % n for x in range(n)]
        image_edges = frozenset(
            (a, b) if a < b else (b, a) for a, b in ((perm[u], perm[v]) for u, v in base_edges)
        )
        nbrs0 = {perm[v] for v in expanded}
        circulant = False
        image_jumps: tuple[int, ...] | None = None
        if all((n - s) % n in nbrs0 for s in nbrs0):
            candidate = make_graph(n, reflexive_reduce(n, nbrs0))
            if _edge_set(candidate) == image_edges:
                circulant = True
                image_jumps = candidate.jumps
        identical = circulant and image_edges == base_edges
        adams = None
        if circulant and not identical:
            image_expanded = {v for s in image_jumps for v in (s, n - s)}  # type: ignore[union-attr]
            for a in range(1, n):
                if math.gcd(a, n) != 1:
                    continue
                if {(a * v) % n for v in expanded} == image_expanded:
                    adams = a
                    break
        rows.append(
            SweepRow(
                t=t,
                circulant=circulant,
                image_jumps=image_jumps,
                identical=identical,
                adams_multiplier=adams,
                type2=circulant and not identical and adams is None,
            )
        )
    return SweepReport(graph=g, r=r, rows=tuple(rows))
