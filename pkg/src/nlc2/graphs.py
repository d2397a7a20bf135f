"""Immutable graph values and the complementation / partition primitives.

A :class:`Graph` stores its adjacency as one bitmask per vertex (see
``_bitset``).  Vertex sets cross this API as bitmask integers; partitions are
tuples of such masks ordered by smallest member, so every downstream
canonical encoding is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from ._bitset import bit, bits_list, iter_bits, lowest_bit, mask_of
from .errors import MalformedInputError, MisuseError

__all__ = [
    "Graph",
    "build",
    "complement",
    "partial_complement",
    "induced",
    "connected_components",
    "co_connected_components",
    "is_module",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v`` as a bitmask.  Values are
    immutable and safe to share.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        """Edge count (half the degree sum)."""
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out: list[tuple[int, int]] = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def validate(self) -> None:
        """Assert structural invariants (symmetry, no self-loops)."""
        if self.n < 0 or len(self.adj) != self.n:
            raise MalformedInputError("adjacency length does not match vertex count")
        full = self.vertex_mask
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise MalformedInputError(f"vertex {v} has out-of-range neighbours")
            if (a >> v) & 1:
                raise MalformedInputError(f"self-loop at vertex {v}")
            for u in iter_bits(a):
                if not (self.adj[u] >> v) & 1:
                    raise MalformedInputError(f"asymmetric edge {v}-{u}")


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse.

    Raises :class:`MalformedInputError` on out-of-range endpoints or
    self-loops.
    """
    if n < 0:
        raise MalformedInputError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise MalformedInputError(f"self-loop at vertex {u}")
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    """Edge present iff absent in ``g``; involutive."""
    full = g.vertex_mask
    return Graph(g.n, tuple((full & ~a & ~bit(v)) for v, a in enumerate(g.adj)))


def partial_complement(g: Graph, w: int) -> Graph:
    """Flip exactly the adjacencies with both endpoints in ``w``."""
    if w & ~g.vertex_mask:
        raise MalformedInputError("w contains out-of-range vertices")
    adj = list(g.adj)
    for v in iter_bits(w):
        adj[v] = (adj[v] & ~w) | (w & ~adj[v] & ~bit(v))
    return Graph(g.n, tuple(adj))


def induced(g: Graph, w: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``w`` plus the old-id -> new-id mapping.

    New identifiers are ``0..|w|-1`` in ascending old-id order.  Empty ``w``
    raises :class:`MalformedInputError`.
    """
    if not w:
        raise MalformedInputError("cannot induce on an empty vertex set")
    if w & ~g.vertex_mask:
        raise MalformedInputError("w contains out-of-range vertices")
    old_ids = bits_list(w)
    mapping = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        rest = g.adj[old] & w
        m = 0
        for u in iter_bits(rest):
            m |= bit(mapping[u])
        adj.append(m)
    return Graph(len(old_ids), tuple(adj)), mapping


def _components_within(adj: tuple[int, ...] | list[int], within: int) -> tuple[int, ...]:
    """Connected components of the subgraph induced by ``within``."""
    comps: list[int] = []
    remaining = within
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= within & ~comp
            if not nxt:
                break
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return tuple(comps)


def connected_components(g: Graph) -> tuple[int, ...]:
    """Components as masks, ordered by smallest member."""
    return _components_within(g.adj, g.vertex_mask)


def co_connected_components(g: Graph) -> tuple[int, ...]:
    """Components of the complement, ordered by smallest member."""
    return _components_within(complement(g).adj, g.vertex_mask)


def is_module(g: Graph, x: int) -> bool:
    """True iff every vertex outside ``x`` sees all of ``x`` or none of it."""
    if not x:
        raise MisuseError("a module must be non-empty")
    if x & ~g.vertex_mask:
        raise MalformedInputError("x contains out-of-range vertices")
    outside = g.vertex_mask & ~x
    for v in iter_bits(outside):
        inter = g.adj[v] & x
        if inter and inter != x:
            return False
    return True


def module_closure(g: Graph, seed: int) -> int:
    """Smallest module of ``g`` containing ``seed``.

    Grows the seed by absorbing every outside vertex that sees part but not
    all of the current set.
    """
    if not seed:
        raise MisuseError("closure of an empty set is undefined")
    x = seed
    changed = True
    while changed:
        changed = False
        outside = g.vertex_mask & ~x
        for v in iter_bits(outside):
            inter = g.adj[v] & x
            if inter and inter != x:
                x |= bit(v)
                changed = True
    return x


def components_within(g: Graph, within: int) -> tuple[int, ...]:
    """Connected components of ``g`` restricted to the mask ``within``."""
    masked = [g.adj[v] & within for v in range(g.n)]
    return _components_within(masked, within)


__all__ += ["module_closure", "components_within", "lowest_bit", "mask_of"]
