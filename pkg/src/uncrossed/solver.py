"""Exact solvers for crossing number, uncrossed collections and verification.

All searches are exhaustive over *normalized* combinatorial drawings: two
edges cross at most once per drawing, never at a shared endpoint, and never
themselves.  Standard redrawing arguments show the optima are unchanged by
normalization; :func:`reference_oracle` re-derives verdicts for tiny
instances without those assumptions and exists to guard them.

Budget exhaustion is a first-class "unknown" outcome carrying the best
proven bounds; it is never reported as a plain no.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .core import (
    CollectionWitness,
    DrawingWitness,
    PreconditionError,
    WeightedMultigraph,
    WitnessStructureError,
    make_drawing,
    planarize,
    subdivide,
)
from .covers import (
    CoverSearch,
    RealizabilityContext,
    UncrossedSetCertificate,
    dense_first_order,
    realizable_uncrossed_set,
)
from .planarity import graph_planar, skeleton_planar

__all__ = [
    "SearchBudget",
    "BudgetExhausted",
    "CrossingNumberResult",
    "Decision",
    "UcrResult",
    "UncResult",
    "VerifyResult",
    "collection_from_certificates",
    "crossing_number",
    "decide_uncrossed_cost",
    "uncrossed_crossing_number",
    "uncrossed_number",
    "realizable_uncrossed_set",
    "reference_oracle",
    "verify_collection",
]


class BudgetExhausted(Exception):
    """Internal signal that a search ran out of its budget."""


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for a solve; ``None`` means unlimited."""

    max_crossings: int | None = None
    max_drawings: int | None = None
    wall_clock_seconds: float | None = None
    max_nodes: int | None = None

    def __post_init__(self) -> None:
        if self.max_crossings is not None and self.max_crossings < 0:
            raise PreconditionError("max_crossings must be >= 0")
        if self.max_drawings is not None and self.max_drawings < 1:
            raise PreconditionError("max_drawings must be >= 1")


NO_BUDGET = SearchBudget()


class _Ticker:
    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None
            if budget.wall_clock_seconds is None
            else time.monotonic() + budget.wall_clock_seconds
        )
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted


@dataclass(frozen=True)
class CrossingNumberResult:
    status: str  # "exact" | "unknown"
    value: int | None
    lower_bound: int
    upper_bound: int | None
    witness: DrawingWitness | None


@dataclass(frozen=True)
class Decision:
    verdict: str  # "yes" | "no" | "unknown"
    witness: CollectionWitness | None = None


@dataclass(frozen=True)
class UcrResult:
    status: str
    ucr: int | None
    ounc: int | None
    lower_bound: int
    upper_bound: int | None
    witness: CollectionWitness | None


@dataclass(frozen=True)
class UncResult:
    status: str
    value: int | None
    lower_bound: int
    upper_bound: int | None
    certificates: tuple[UncrossedSetCertificate, ...] | None
    sets_tested: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    rule: str | None = None  # "structure" | "planarity" | "coverage" | "cost"
    detail: str = ""


def _euler_count_lb(g: WeightedMultigraph) -> int:
    """Minimum crossings of any drawing: skeleton edges beyond 3n-6."""
    if g.n < 3:
        return 0
    return max(0, len(g.skeleton()) - 3 * g.n + 6)


class _DrawingSearch:
    """Shared context: independent pairs, planarizability cache, budget."""

    def __init__(self, g: WeightedMultigraph, ticker: _Ticker):
        self.g = g
        self.ticker = ticker
        self.pairs = [
            (e, f)
            for e in range(g.m)
            for f in range(e + 1, g.m)
            if g.independent(e, f)
        ]
        self.pair_cost = {
            (e, f): g.weight(e) * g.weight(f) for e, f in self.pairs
        }
        self.planarizable_cache: dict[frozenset, dict | None] = {}
        self.drawings_cache: dict[tuple, list] = {}
        self.cover_memo: dict[tuple, tuple | None] = {}

    # -- planarizability -------------------------------------------------

    def planarizable(self, events: frozenset) -> dict | None:
        """Orders making the planarization planar, or None.

        Orders map edge id to the tuple of its events (as pairs) in
        traversal order from the reference endpoint; the first planarizing
        assignment in lexicographic enumeration order is returned.
        """
        hit = self.planarizable_cache.get(events, "miss")
        if hit != "miss":
            return hit
        per_edge: dict[int, list[tuple[int, int]]] = {}
        for e, f in sorted(events):
            per_edge.setdefault(e, []).append((e, f))
            per_edge.setdefault(f, []).append((e, f))
        multi = sorted(eid for eid, evs in per_edge.items() if len(evs) > 1)
        answer = None
        for combo in itertools.product(
            *(itertools.permutations(per_edge[eid]) for eid in multi)
        ):
            orders = dict(per_edge)
            for eid, perm in zip(multi, combo):
                orders[eid] = list(perm)
            if skeleton_planar(self._plan_skeleton(orders)):
                answer = {eid: tuple(seq) for eid, seq in orders.items()}
                break
        self.planarizable_cache[events] = answer
        return answer

    def _plan_skeleton(self, orders: dict) -> frozenset:
        g = self.g
        index: dict[tuple[int, int], int] = {}
        for seq in orders.values():
            for pair in seq:
                if pair not in index:
                    index[pair] = len(index)
        pairs = set()
        for eid, (u, v, _) in enumerate(g.edges):
            if eid not in orders:
                pairs.add((u, v) if u < v else (v, u))
                continue
            ref, other = (u, v) if u < v else (v, u)
            chain = [ref, *(g.n + index[p] for p in orders[eid]), other]
            for a, b in zip(chain, chain[1:]):
                pairs.add((a, b) if a < b else (b, a))
        return frozenset(pairs)

    # -- drawing enumeration ----------------------------------------------

    def drawings_avoiding(self, avoid: frozenset, limit: int) -> list:
        """All planarizable event sets of cost <= limit not touching avoid.

        Each entry is (cost, events frozenset, orders, touched frozenset),
        sorted by (cost, events) for determinism.
        """
        key = (avoid, limit)
        hit = self.drawings_cache.get(key)
        if hit is not None:
            return hit
        allowed = [
            p
            for p in self.pairs
            if p[0] not in avoid and p[1] not in avoid and self.pair_cost[p] <= limit
        ]
        found = []

        def extend(idx: int, chosen: tuple, cost: int):
            self.ticker.tick()
            if chosen:
                events = frozenset(chosen)
                orders = self.planarizable(events)
                if orders is not None:
                    touched = frozenset(e for p in chosen for e in p)
                    found.append((cost, events, orders, touched))
            for j in range(idx, len(allowed)):
                c2 = cost + self.pair_cost[allowed[j]]
                if c2 <= limit:
                    extend(j + 1, chosen + (allowed[j],), c2)

        extend(0, (), 0)
        found.sort(key=lambda t: (t[0], sorted(t[1])))
        self.drawings_cache[key] = found
        return found

    def min_drawing(self, forced: frozenset, limit: int):
        """Cheapest planarizable event set avoiding ``forced`` entirely.

        Returns (cost, events, orders) with the lexicographically least
        event list among ties, or None if nothing fits the limit.
        """
        base_lb = _euler_count_lb(self.g)
        if limit < base_lb:
            return None
        allowed = [
            p
            for p in self.pairs
            if p[0] not in forced and p[1] not in forced and self.pair_cost[p] <= limit
        ]
        best: list = [None]

        def extend(idx: int, chosen: tuple, cost: int):
            self.ticker.tick()
            orders = self.planarizable(frozenset(chosen))
            if orders is not None:
                cand = (cost, tuple(sorted(chosen)), frozenset(chosen), orders)
                if best[0] is None or cand[:2] < best[0][:2]:
                    best[0] = cand
                return
            for j in range(idx, len(allowed)):
                c2 = cost + self.pair_cost[allowed[j]]
                if c2 > limit:
                    continue
                if best[0] is not None and c2 > best[0][0]:
                    continue
                extend(j + 1, chosen + (allowed[j],), c2)

        extend(0, (), 0)
        if best[0] is None:
            return None
        cost, _, events, orders = best[0]
        return cost, events, orders

    # -- covering recursion ----------------------------------------------

    def cover(self, uncovered: frozenset, c_left: int, k_left: int):
        """Min-cost plan covering ``uncovered`` with <= c_left drawings.

        Returns (cost, plans) with plans a tuple of (events, orders), or
        None when impossible within k_left.
        """
        if not uncovered:
            return 0, ()
        if c_left <= 0:
            return None
        key = (uncovered, c_left, k_left)
        if key in self.cover_memo:
            return self.cover_memo[key]
        g = self.g
        cap = max(1, 3 * g.n - 6)
        skel_uncovered = {
            tuple(sorted(g.endpoints(e))) for e in uncovered
        }
        need = -(-len(skel_uncovered) // cap)
        if need > c_left:
            self.cover_memo[key] = None
            return None
        if c_left == 1:
            got = self.min_drawing(uncovered, k_left)
            result = None if got is None else (got[0], ((got[1], got[2]),))
            self.cover_memo[key] = result
            return result
        e_star = min(uncovered)
        best = None
        for cost_d, events, orders, touched in self.drawings_avoiding(
            frozenset({e_star}), k_left
        ):
            if best is not None and cost_d > best[0]:
                break  # sorted by cost: nothing cheaper is left
            rest = uncovered & touched
            sub = self.cover(rest, c_left - 1, k_left - cost_d)
            if sub is None:
                continue
            total = cost_d + sub[0]
            plans = ((events, orders), *sub[1])
            cand = (total, _plans_key(plans), plans)
            if best is None or cand[:2] < best[:2]:
                best = cand
        result = None if best is None else (best[0], best[2])
        self.cover_memo[key] = result
        return result


def _plans_key(plans) -> tuple:
    return tuple(sorted(tuple(sorted(events)) for events, _ in plans))


def _witness_from_plans(g: WeightedMultigraph, plans) -> CollectionWitness:
    drawings = sorted(
        (make_drawing(g, events, orders) for events, orders in plans),
        key=lambda d: tuple(ev.pair() for ev in d.crossings),
    )
    total = sum(d.cost(g) for d in drawings)
    return CollectionWitness(drawings=tuple(drawings), declared_cost=total)


def _trivial_planar_witness(g: WeightedMultigraph) -> CollectionWitness:
    return CollectionWitness(drawings=(make_drawing(g, []),), declared_cost=0)


def crossing_number(
    g: WeightedMultigraph, budget: SearchBudget = NO_BUDGET
) -> CrossingNumberResult:
    """Exact weighted crossing number with a drawing witness.

    Iterative deepening on the cost limit; every level below the answer is
    exhausted, so a budget interruption still yields a proven lower bound.
    """
    if graph_planar(g):
        return CrossingNumberResult("exact", 0, 0, 0, make_drawing(g, []))
    ticker = _Ticker(budget)
    search = _DrawingSearch(g, ticker)
    k = max(1, _euler_count_lb(g))
    while True:
        if budget.max_crossings is not None and k > budget.max_crossings:
            return CrossingNumberResult("unknown", None, k, None, None)
        try:
            got = search.min_drawing(frozenset(), k)
        except BudgetExhausted:
            return CrossingNumberResult("unknown", None, k, None, None)
        if got is not None:
            cost, events, orders = got
            return CrossingNumberResult(
                "exact", cost, cost, cost, make_drawing(g, events, orders)
            )
        k += 1


def decide_uncrossed_cost(
    g: WeightedMultigraph,
    max_drawings: int,
    max_cost: int,
    budget: SearchBudget = NO_BUDGET,
    _ticker: _Ticker | None = None,
) -> Decision:
    """Is there an uncrossed collection of <= max_drawings drawings with
    total weighted cost <= max_cost?

    Yes-answers carry a verified witness, canonical across runs: the
    lexicographically least event structure among all optimal collections.
    """
    if max_drawings < 1 or max_cost < 0:
        raise PreconditionError("need max_drawings >= 1 and max_cost >= 0")
    if graph_planar(g):
        return Decision("yes", _trivial_planar_witness(g))
    if max_drawings == 1:
        return Decision("no")  # one drawing of a nonplanar graph always crosses
    ticker = _ticker if _ticker is not None else _Ticker(budget)
    search = _DrawingSearch(g, ticker)
    try:
        got = search.cover(frozenset(range(g.m)), max_drawings, max_cost)
    except BudgetExhausted:
        return Decision("unknown")
    if got is None:
        return Decision("no")
    witness = _witness_from_plans(g, got[1])
    check = verify_collection(g, witness)
    if not check.accepted:
        raise AssertionError(f"solver produced an invalid witness: {check.rule}")
    return Decision("yes", witness)


def uncrossed_crossing_number(
    g: WeightedMultigraph, budget: SearchBudget = NO_BUDGET
) -> UcrResult:
    """Minimum total cost of an uncrossed collection, and the least number
    of drawings attaining it.

    Uses the equivalence "cost k achievable iff achievable with <= k
    drawings" for the outer iterative deepening, then shrinks the number of
    drawings at fixed optimal cost.
    """
    if graph_planar(g):
        return UcrResult("exact", 0, 1, 0, 0, _trivial_planar_witness(g))
    ticker = _Ticker(budget)  # one budget for the whole deepening
    lb = max(1, 2 * _euler_count_lb(g))  # two drawings minimum, each crossing
    k = lb
    while True:
        if budget.max_crossings is not None and k > budget.max_crossings:
            return UcrResult("unknown", None, None, k, None, None)
        c_level = k if budget.max_drawings is None else min(k, budget.max_drawings)
        c_level = max(1, c_level)
        dec = decide_uncrossed_cost(g, c_level, k, budget, _ticker=ticker)
        if dec.verdict == "unknown":
            return UcrResult("unknown", None, None, k, None, None)
        if dec.verdict == "yes":
            if c_level < k:
                # drawing cap may have hidden a cheaper collection
                return UcrResult("unknown", None, None, lb, k, dec.witness)
            ucr = k
            witness = dec.witness
            c_try = len(witness.drawings)
            while c_try > 1:
                lower = decide_uncrossed_cost(g, c_try - 1, ucr, budget, _ticker=ticker)
                if lower.verdict == "unknown":
                    # optimal cost is proven but not the least drawing count
                    return UcrResult("unknown", ucr, None, ucr, ucr, witness)
                if lower.verdict == "no":
                    break
                witness = lower.witness
                c_try -= 1
            return UcrResult("exact", ucr, c_try, ucr, ucr, witness)
        k += 1


def uncrossed_number(
    g: WeightedMultigraph,
    budget: SearchBudget = NO_BUDGET,
    deep_sizes=None,
    rotation_cap: int | None = 5_000_000,
) -> UncResult:
    """Least number of drawings in an uncrossed collection, by exact set
    covering with realizable uncrossed sets.

    ``deep_sizes`` optionally lists partial-part sizes at which the full
    realizability test runs during the search (cheap necessary conditions
    always run); complete parts are always fully tested.
    """
    ticker = _Ticker(budget)
    ctx = RealizabilityContext(g, rotation_cap=rotation_cap)

    def feasible(part: frozenset[int]):
        res = ctx.realizable(part)
        return {"yes": True, "no": False, "unknown": None}[res.status]

    necessary = ctx.pairs_insertable if deep_sizes is not None else None
    cover = CoverSearch(
        g, feasible, necessary=necessary, deep_sizes=deep_sizes,
        ticker=ticker, edge_order=dense_first_order(g),
    )
    try:
        out = cover.minimum(budget.max_drawings)
    except BudgetExhausted:
        return UncResult(
            "unknown", None, 1, None, None, len(cover.cache), cover.nodes
        )
    certificates = None
    if out.parts is not None:
        certs = []
        for part in out.parts:
            res = ctx.realizable(part, want_certificate=True)
            if res.status != "yes":
                raise AssertionError("cover part lost realizability on recheck")
            certs.append(res.certificate)
        certificates = tuple(certs)
    return UncResult(
        out.status,
        out.value,
        out.lower_bound,
        out.upper_bound,
        certificates,
        len(cover.cache),
        cover.nodes,
    )


def collection_from_certificates(
    g: WeightedMultigraph, certificates
) -> CollectionWitness:
    """Turn uncrossed-set certificates covering E(G) into explicit drawings.

    Each certificate's embedding is drawn as-is; every hosted edge becomes a
    chord of its hosting face, with the face boundary laid out in convex
    position (on a rational parabola), so chords cross exactly when their
    endpoints interleave and the planarization is planar by construction.
    The result is not cost-optimal, only a valid uncrossed collection.
    """
    from fractions import Fraction

    from .planarity import dart_vertex

    if not certificates:  # edgeless graph: one crossing-free drawing
        return _trivial_planar_witness(g)
    drawings = []
    for cert in certificates:
        part = set(cert.edge_subset)
        sub_ids = sorted(part)
        emb = cert.embedding
        sub = emb.graph
        # boundary sequence per face: walk vertices then floating vertices
        face_seq: dict[int, list[int]] = {}
        for f in emb.faces:
            seq: list[int] = []
            for walk in f.walks:
                seq.extend(dart_vertex(sub, d) for d in walk)
            for v in sorted(f.vertices):
                if v not in seq:
                    seq.append(v)
            face_seq[f.id] = seq
        hosted = dict(cert.hosting)
        chords: dict[int, list[tuple[int, Fraction, Fraction]]] = {}
        for eid, fid in hosted.items():
            seq = face_seq[fid]
            u, v, _ = g.edges[eid]
            pu, pv = seq.index(u), seq.index(v)
            chords.setdefault(fid, []).append((eid, Fraction(pu), Fraction(pv)))
        events = []
        along: dict[int, list[tuple[Fraction, int, int]]] = {}
        for fid, lst in chords.items():
            for i in range(len(lst)):
                e1, a1, b1 = lst[i]
                lo1, hi1 = min(a1, b1), max(a1, b1)
                for j in range(i + 1, len(lst)):
                    e2, a2, b2 = lst[j]
                    lo2, hi2 = min(a2, b2), max(a2, b2)
                    if lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1:
                        events.append((e1, e2))
                        t1 = _parabola_parameter(a1, b1, a2, b2)
                        t2 = _parabola_parameter(a2, b2, a1, b1)
                        along.setdefault(e1, []).append((t1, e1, e2))
                        along.setdefault(e2, []).append((t2, e1, e2))
        orders = {}
        for eid, hits in along.items():
            if len(hits) < 2:
                continue
            hits.sort(key=lambda h: h[0])
            u, v, _ = g.edges[eid]
            # the parameter runs from u's position; traversal order starts
            # at the reference endpoint (the smaller vertex id)
            if min(u, v) == v:
                hits = hits[::-1]
            orders[eid] = [(a, b) for _, a, b in hits]
        drawings.append(make_drawing(g, events, orders))
    drawings.sort(key=lambda d: tuple(ev.pair() for ev in d.crossings))
    total = sum(d.cost(g) for d in drawings)
    witness = CollectionWitness(drawings=tuple(drawings), declared_cost=total)
    check = verify_collection(g, witness)
    if not check.accepted:
        raise AssertionError(f"cover collection failed verification: {check.rule}")
    return witness


def _parabola_parameter(a1, b1, a2, b2):
    """Parameter along segment 1 of its crossing with segment 2, with both
    segments chording the convex curve x -> (x, x^2)."""
    ax, ay = a1, a1 * a1
    bx, by = b1, b1 * b1
    cx, cy = a2, a2 * a2
    dx, dy = b2, b2 * b2
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    denom = rx * sy - ry * sx
    return ((cx - ax) * sy - (cy - ay) * sx) / denom


# ---------------------------------------------------------------------------
# reference oracle


#: refuse instances larger than this: (vertices, edges, cost limit)
ORACLE_CAPS = (8, 12, 4)


def reference_oracle(
    g: WeightedMultigraph,
    max_drawings: int,
    max_cost: int,
    budget: SearchBudget = NO_BUDGET,
) -> bool:
    """Exhaustive re-derivation of :func:`decide_uncrossed_cost` verdicts.

    Works on the graph with every edge subdivided ``max_cost`` times and
    enumerates crossing spots as pairs of subdivision vertices, identifying
    each chosen pair and testing planarity per drawing.  No normalization
    is assumed: self-crossings, adjacent-edge crossings and repeated
    crossings of one pair are all in the search space.  Tiny instances only.
    """
    n_cap, m_cap, k_cap = ORACLE_CAPS
    if g.n > n_cap or g.m > m_cap or max_cost > k_cap:
        raise PreconditionError(
            f"reference oracle refuses instances beyond {ORACLE_CAPS}"
        )
    if max_drawings < 1 or max_cost < 0:
        raise PreconditionError("need max_drawings >= 1 and max_cost >= 0")
    if graph_planar(g):
        return True
    if max_drawings == 1 or max_cost == 0:
        return False

    k = max_cost
    h = subdivide(g, k)
    ticker = _Ticker(budget)

    def edge_of(vid: int) -> int:
        return (vid - g.n) // k

    svs = range(g.n, h.n)
    spots = []
    for a in svs:
        for b in svs:
            if a < b:
                cost = g.weight(edge_of(a)) * g.weight(edge_of(b))
                if cost <= k:
                    spots.append((a, b, cost))
    base_skel = [(u, v) for u, v, _ in h.edges]
    ident_cache: dict[frozenset, bool] = {}

    def identified_planar(group: frozenset) -> bool:
        hit = ident_cache.get(group)
        if hit is not None:
            return hit
        parent: dict[int, int] = {}

        def find(x):
            r = x
            while parent.get(r, r) != r:
                r = parent[r]
            while parent.get(x, x) != x:
                parent[x], x = r, parent[x]
            return r

        for a, b in group:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        pairs = set()
        for u, v in base_skel:
            ru, rv = find(u), find(v)
            if ru != rv:
                pairs.add((ru, rv) if ru < rv else (rv, ru))
        ans = skeleton_planar(frozenset(pairs))
        ident_cache[group] = ans
        return ans

    group_lb = max(1, _euler_count_lb(g))
    use_count: dict[int, int] = {}

    def spots_free(a: int, b: int) -> bool:
        # a subdivision vertex may serve as a crossing end at most twice
        if use_count.get(a, 0) >= 2 or use_count.get(b, 0) >= 2:
            return False
        return True

    def search(uncovered: frozenset, drawings_used: int, cost_left: int) -> bool:
        if not uncovered:
            return True
        if drawings_used == max_drawings:
            return False
        e_star = min(uncovered)
        banned = set(range(g.n + e_star * k, g.n + (e_star + 1) * k))
        allowed = [
            (a, b, c) for a, b, c in spots if a not in banned and b not in banned
        ]

        def build(idx: int, chosen: tuple, cost: int, touches: bool) -> bool:
            ticker.tick()
            if len(chosen) >= group_lb:
                group = frozenset((a, b) for a, b, _ in chosen)
                if identified_planar(group):
                    touched_edges = frozenset(
                        edge_of(x) for a, b, _ in chosen for x in (a, b)
                    )
                    rest = uncovered & touched_edges
                    if search(rest, drawings_used + 1, cost_left - cost):
                        return True
            for j in range(idx, len(allowed)):
                a, b, c = allowed[j]
                t2 = touches or edge_of(a) in uncovered or edge_of(b) in uncovered
                # once an uncovered edge is crossed here, a further drawing
                # must cover it, costing at least group_lb
                reserve = group_lb if t2 else 0
                if cost + c + reserve > cost_left:
                    continue
                if not spots_free(a, b):
                    continue
                use_count[a] = use_count.get(a, 0) + 1
                use_count[b] = use_count.get(b, 0) + 1
                if build(j + 1, chosen + ((a, b, c),), cost + c, t2):
                    return True
                use_count[a] -= 1
                use_count[b] -= 1
            return False

        return build(0, (), 0, False)

    return search(frozenset(range(g.m)), 0, k)


# ---------------------------------------------------------------------------
# witness verification


def verify_collection(g: WeightedMultigraph, w: CollectionWitness) -> VerifyResult:
    """Accept iff every drawing planarizes to a plane graph, every edge is
    uncrossed somewhere, and the declared cost matches.

    Rejections name the first violated rule: structure, planarity,
    coverage, or cost.
    """
    planarizations = []
    for i, d in enumerate(w.drawings):
        try:
            planarizations.append(planarize(g, d))
        except WitnessStructureError as exc:
            return VerifyResult(False, "structure", f"drawing {i}: {exc}")
    for i, p in enumerate(planarizations):
        if not graph_planar(p):
            return VerifyResult(False, "planarity", f"drawing {i} does not planarize")
    covered: set[int] = set()
    for d in w.drawings:
        covered |= d.uncrossed_edges(g)
    missing = sorted(set(range(g.m)) - covered)
    if missing:
        return VerifyResult(False, "coverage", f"edges never uncrossed: {missing}")
    actual = sum(d.cost(g) for d in w.drawings)
    if actual != w.declared_cost:
        return VerifyResult(
            False, "cost", f"declared {w.declared_cost}, actual {actual}"
        )
    return VerifyResult(True)
