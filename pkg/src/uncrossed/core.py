"""Graph and witness data model shared by every solver.

A :class:`WeightedMultigraph` is the universal input object: dense vertex ids
``0..n-1``, dense edge ids ``0..m-1``, positive integer weights, parallel
edges allowed, loops rejected.  Drawings are represented combinatorially:
a :class:`DrawingWitness` lists crossing events (pairs of independent edges)
together with the order in which each edge meets its events, which is enough
to planarize the drawing and check it against a plane graph.
"""

from __future__ import annotations

from dataclasses import dataclass


class UncrossedError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(UncrossedError):
    """An operation was called outside its stated preconditions."""


class WitnessStructureError(UncrossedError):
    """A witness is structurally malformed (bad ids, inconsistent orders)."""


class ResourceExceededError(UncrossedError):
    """An enumeration exceeded its configured cap."""


@dataclass(frozen=True)
class WeightedMultigraph:
    """A loopless multigraph with positive integer edge weights.

    ``edges[i]`` is ``(u, v, weight)`` and ``i`` is the edge id.  Instances
    are immutable and safe to share between concurrent workers.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        edges = tuple((int(u), int(v), int(w)) for u, v, w in self.edges)
        object.__setattr__(self, "edges", edges)
        for eid, (u, v, w) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {eid}: endpoint out of range")
            if u == v:
                raise PreconditionError(f"edge {eid}: loops are not allowed")
            if w < 1:
                raise PreconditionError(f"edge {eid}: weight must be >= 1")

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def weight(self, eid: int) -> int:
        return self.edges[eid][2]

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def independent(self, e: int, f: int) -> bool:
        """True if edges e and f are distinct and share no endpoint."""
        if e == f:
            return False
        u1, v1, _ = self.edges[e]
        u2, v2, _ = self.edges[f]
        return len({u1, v1, u2, v2}) == 4

    def skeleton(self) -> frozenset[tuple[int, int]]:
        """Distinct endpoint pairs, each as ``(min, max)``."""
        return frozenset((u, v) if u < v else (v, u) for u, v, _ in self.edges)

    def incident_edges(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v, _) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return inc

    def spanning_subgraph(self, edge_ids) -> "WeightedMultigraph":
        """Subgraph on all n vertices keeping the given edges, re-numbered.

        Returns the subgraph; the i-th kept edge (in increasing original id)
        gets new id i.
        """
        kept = sorted(edge_ids)
        return WeightedMultigraph(self.n, tuple(self.edges[e] for e in kept))


def graph_from_edges(n: int, pairs, weights=None) -> WeightedMultigraph:
    """Convenience constructor from (u, v) pairs with optional weights."""
    pairs = list(pairs)
    if weights is None:
        weights = [1] * len(pairs)
    return WeightedMultigraph(n, tuple((u, v, w) for (u, v), w in zip(pairs, weights)))


@dataclass(frozen=True)
class CrossingEvent:
    """One crossing between two independent edges; costs the weight product."""

    first: int
    second: int

    def __post_init__(self) -> None:
        if self.first == self.second:
            raise WitnessStructureError("a crossing event needs two distinct edges")

    def pair(self) -> tuple[int, int]:
        e, f = self.first, self.second
        return (e, f) if e < f else (f, e)


@dataclass(frozen=True)
class DrawingWitness:
    """A combinatorial drawing: crossing events plus per-edge event orders.

    ``edge_orders`` holds, for every edge that appears in at least one event,
    the event indices in traversal order starting from the edge's reference
    endpoint (the endpoint with the smaller vertex id).  The witness is valid
    for a graph G exactly when :func:`planarize` of (G, witness) is planar.
    """

    crossings: tuple[CrossingEvent, ...]
    edge_orders: tuple[tuple[int, tuple[int, ...]], ...]

    def orders_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.edge_orders)

    def events_of_edge(self, eid: int) -> list[int]:
        return [i for i, ev in enumerate(self.crossings) if eid in (ev.first, ev.second)]

    def cost(self, g: WeightedMultigraph) -> int:
        return sum(g.weight(ev.first) * g.weight(ev.second) for ev in self.crossings)

    def uncrossed_edges(self, g: WeightedMultigraph) -> frozenset[int]:
        touched = set()
        for ev in self.crossings:
            touched.add(ev.first)
            touched.add(ev.second)
        return frozenset(range(g.m)) - touched


@dataclass(frozen=True)
class CollectionWitness:
    """An ordered list of drawings claimed to form an uncrossed collection."""

    drawings: tuple[DrawingWitness, ...]
    declared_cost: int

    def __post_init__(self) -> None:
        if not self.drawings:
            raise WitnessStructureError("a collection needs at least one drawing")


def empty_drawing() -> DrawingWitness:
    return DrawingWitness(crossings=(), edge_orders=())


def make_drawing(g: WeightedMultigraph, events, orders=None) -> DrawingWitness:
    """Build a drawing witness from edge-id pairs in canonical event order.

    ``events`` is an iterable of (e, f) pairs.  ``orders``, when given, maps
    edge id to the list of its events (as pairs) in traversal order from the
    reference endpoint; edges with a single event never need an entry.
    """
    pairs = sorted({(min(e, f), max(e, f)) for e, f in events})
    index = {p: i for i, p in enumerate(pairs)}
    crossings = tuple(CrossingEvent(e, f) for e, f in pairs)
    per_edge: dict[int, list[int]] = {}
    for i, (e, f) in enumerate(pairs):
        per_edge.setdefault(e, []).append(i)
        per_edge.setdefault(f, []).append(i)
    if orders is not None:
        for eid, seq in orders.items():
            want = [index[(min(e, f), max(e, f))] for e, f in seq]
            if sorted(want) != sorted(per_edge.get(eid, [])):
                raise WitnessStructureError(f"orders for edge {eid} do not match its events")
            per_edge[eid] = want
    edge_orders = tuple((eid, tuple(per_edge[eid])) for eid in sorted(per_edge))
    return DrawingWitness(crossings=crossings, edge_orders=edge_orders)


def subdivide(g: WeightedMultigraph, s: int) -> WeightedMultigraph:
    """Replace every edge by a path with s new internal vertices.

    New edges inherit the original weight.  Original vertex ids are kept;
    the internal vertices of edge e are ``n + e*s .. n + e*s + s - 1``, in
    order from the edge's first stored endpoint.
    """
    if s < 0:
        raise PreconditionError("subdivision count must be nonnegative")
    if s == 0:
        return g
    new_edges: list[tuple[int, int, int]] = []
    for eid, (u, v, w) in enumerate(g.edges):
        inner = [g.n + eid * s + j for j in range(s)]
        chain = [u, *inner, v]
        for a, b in zip(chain, chain[1:]):
            new_edges.append((a, b, w))
    return WeightedMultigraph(g.n + s * g.m, tuple(new_edges))


def expand_weights(g: WeightedMultigraph) -> tuple[WeightedMultigraph, tuple[int, ...]]:
    """Replace every weight-t edge by t parallel weight-1 edges.

    Returns the expanded graph and, for each new edge id, the originating
    edge id.
    """
    new_edges: list[tuple[int, int, int]] = []
    origin: list[int] = []
    for eid, (u, v, w) in enumerate(g.edges):
        for _ in range(w):
            new_edges.append((u, v, 1))
            origin.append(eid)
    return WeightedMultigraph(g.n, tuple(new_edges)), tuple(origin)


def _check_witness_structure(g: WeightedMultigraph, d: DrawingWitness) -> dict[int, list[int]]:
    """Validate a drawing witness against g; returns per-edge event orders."""
    seen_pairs = set()
    for ev in d.crossings:
        if not (0 <= ev.first < g.m and 0 <= ev.second < g.m):
            raise WitnessStructureError("event references an unknown edge id")
        if not g.independent(ev.first, ev.second):
            raise WitnessStructureError(
                f"event ({ev.first}, {ev.second}) is not between independent edges"
            )
        if ev.pair() in seen_pairs:
            raise WitnessStructureError(f"duplicate event for edge pair {ev.pair()}")
        seen_pairs.add(ev.pair())

    per_edge: dict[int, list[int]] = {}
    for i, ev in enumerate(d.crossings):
        per_edge.setdefault(ev.first, []).append(i)
        per_edge.setdefault(ev.second, []).append(i)

    orders = d.orders_map()
    for eid in orders:
        if eid not in per_edge:
            raise WitnessStructureError(f"edge {eid} has an order but no events")
    result: dict[int, list[int]] = {}
    for eid, events in per_edge.items():
        if eid in orders:
            seq = list(orders[eid])
            if sorted(seq) != sorted(events):
                raise WitnessStructureError(
                    f"edge {eid}: order sequence does not list its events exactly once"
                )
        elif len(events) == 1:
            seq = events
        else:
            raise WitnessStructureError(f"edge {eid} has {len(events)} events but no order")
        result[eid] = seq
    return result


def edge_chains(g: WeightedMultigraph, d: DrawingWitness) -> dict[int, list[int]]:
    """Vertex path of every edge through its crossing dummies.

    Event i becomes vertex ``n + i``; the chain runs from the edge's
    reference endpoint (smaller vertex id) through its events in order.
    """
    per_edge = _check_witness_structure(g, d)
    chains: dict[int, list[int]] = {}
    for eid, (u, v, _) in enumerate(g.edges):
        ref, other = (u, v) if (u < v) else (v, u)
        mids = [g.n + i for i in per_edge.get(eid, [])]
        chains[eid] = [ref, *mids, other]
    return chains


def planarize(g: WeightedMultigraph, d: DrawingWitness) -> WeightedMultigraph:
    """Turn every crossing event into a new degree-4 vertex.

    The new vertex for event i is ``n + i``.  Each participating edge is
    split at the positions dictated by its order sequence; the drawing is a
    plane graph exactly when the result is planar.
    """
    chains = edge_chains(g, d)
    t = len(d.crossings)
    new_edges: list[tuple[int, int, int]] = []
    for eid in range(g.m):
        w = g.weight(eid)
        chain = chains[eid]
        for a, b in zip(chain, chain[1:]):
            new_edges.append((a, b, w))
    return WeightedMultigraph(g.n + t, tuple(new_edges))
