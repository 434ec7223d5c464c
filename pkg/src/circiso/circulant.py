"""Circulant graph value types: connection sets, adjacency, periodic cycles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .modring import check_modulus, expand_symmetric, reflexive_reduce, scale_set


@dataclass(frozen=True)
class ConnectionSet:
    """Canonical half-form jump set of a circulant graph.

    Jumps are kept strictly increasing in [1, n//2]; the full symmetric subset
    of Z_n (closed under negation) is an explicit expansion, never implicit.
    Construction is strict: out-of-range values are an error, not reduced.
    Use :meth:`from_values` for reflexive reduction of arbitrary values.
    """

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        object.__setattr__(self, "jumps", tuple(int(r) for r in self.jumps))
        if not self.jumps:
            raise ValueError("connection set needs at least one jump")
        prev = 0
        for r in self.jumps:
            if r <= prev:
                raise ValueError(f"jumps must be strictly increasing, got {self.jumps}")
            if not 1 <= r <= self.n // 2:
                raise ValueError(f"jump {r} outside [1, {self.n // 2}] for n={self.n}")
            prev = r

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> "ConnectionSet":
        """Build a canonical set by reflexive modular reduction of values."""
        return cls(n, reflexive_reduce(n, values))

    def expanded(self) -> tuple[int, ...]:
        """Full symmetric form {r, n-r : r in jumps}, sorted."""
        return expand_symmetric(self.n, self.jumps)

    @cached_property
    def expanded_set(self) -> frozenset[int]:
        return frozenset(self.expanded())

    def scaled(self, a: int) -> "ConnectionSet":
        """Connection set of a*R under reflexive reduction (a must be a unit)."""
        return ConnectionSet(self.n, scale_set(self.n, a, self.jumps))

    def gcd_signature(self) -> tuple[int, ...]:
        """Sorted multiset {gcd(n, r) : r in jumps}; an isomorphism invariant."""
        return tuple(sorted(math.gcd(self.n, r) for r in self.jumps))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.jumps)


@dataclass(frozen=True)
class CirculantGraph:
    """Graph on Z_n with v adjacent to v +/- r for every jump r.

    When n is even and n/2 is a jump, adjacency stores a single edge;
    :meth:`double_edge_count` reports the doubled-cycle counting convention.
    Disconnected graphs are constructible (``is_connected`` flags them).
    """

    n: int
    connection_set: ConnectionSet

    def __post_init__(self) -> None:
        if self.n != self.connection_set.n:
            raise ValueError(
                f"modulus mismatch: graph n={self.n}, connection set n={self.connection_set.n}"
            )

    @property
    def jumps(self) -> tuple[int, ...]:
        return self.connection_set.jumps

    @cached_property
    def expanded_jumps(self) -> frozenset[int]:
        return self.connection_set.expanded_set

    def degree(self) -> int:
        k = 2 * len(self.jumps)
        if self.n % 2 == 0 and self.n // 2 in self.expanded_jumps:
            k -= 1
        return k

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside Z_{self.n}")
        return frozenset((v + d) % self.n for d in self.expanded_jumps)

    def has_edge(self, u: int, v: int) -> bool:
        return (u - v) % self.n in self.expanded_jumps

    def edge_count(self) -> int:
        """Number of simple edges: n*k, less the halved n/2 class when present."""
        total = self.n * len(self.jumps)
        if self.n % 2 == 0 and self.n // 2 in self.expanded_jumps:
            total -= self.n // 2
        return total

    def double_edge_count(self) -> int:
        """Cycle-counting convention: the n/2 jump class counts doubly."""
        return self.n * len(self.jumps)

    def is_connected(self) -> bool:
        """gcd criterion: connected iff gcd(n, r_1, ..., r_k) = 1."""
        g = self.n
        for r in self.jumps:
            g = math.gcd(g, r)
        return g == 1

    def periodic_cycles(self, r: int) -> tuple[int, int]:
        """(length, count) of the disjoint cycles traced by stepping by r.

        length = n / gcd(n, r) and count = gcd(n, r); r must be a jump of the
        graph (either half-form or its mirror n-r).
        """
        if r not in self.expanded_jumps:
            raise ValueError(f"{r} is not a jump of C_{self.n}({self.connection_set})")
        g = math.gcd(self.n, r)
        return self.n // g, g

    def edges(self) -> Iterator[tuple[int, int]]:
        """All simple edges as (u, v) pairs with u < v, deterministic order."""
        seen: set[tuple[int, int]] = set()
        for r in self.jumps:
            for u in range(self.n):
                v = (u + r) % self.n
                e = (u, v) if u < v else (v, u)
                if e not in seen:
                    seen.add(e)
                    yield e

    def to_dot(self, name: str | None = None) -> str:
        """DOT form of the adjacency structure, nodes labelled 0..n-1."""
        graph_name = name or f"circulant_{self.n}"
        lines = [f"graph {graph_name} {{"]
        for v in range(self.n):
            lines.append(f'  "{v}";')
        for u, v in sorted(self.edges()):
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"C_{self.n}({self.connection_set})"


def make_graph(n: int, jumps: Iterable[int] | ConnectionSet) -> CirculantGraph:
    """Validated circulant graph from half-form jumps (strict, no reduction)."""
    if isinstance(jumps, ConnectionSet):
        return CirculantGraph(n, jumps)
    return CirculantGraph(n, ConnectionSet(n, tuple(sorted(set(jumps)))))
