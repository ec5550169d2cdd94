"""Realizable uncrossed sets and the exact edge-cover engine.

An edge set S is a *realizable uncrossed set* of G when some drawing of G
leaves every edge of S crossing-free.  Combinatorially: some plane embedding
of the spanning subgraph (V, S) must host, for every edge outside S, a face
whose boundary contains both of its endpoints (the edge can then be drawn
inside that face, crossing only other non-S edges).

The cover engine answers "can E(G) be covered by c feasible sets" for a
pluggable feasibility predicate; with predicate = realizable it computes the
uncrossed number, with planarity / outerplanarity it computes thickness and
outerthickness.  Every predicate used here is closed under taking subsets,
so searching partitions of E(G) is enough, and a part that fails a necessary
condition can be abandoned immediately.

:class:`RealizabilityContext` carries per-graph caches: face profiles are
memoized per connected component (in original edge ids), which is what makes
the exhaustive covering searches affordable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .core import WeightedMultigraph
from .planarity import (
    Embedding,
    build_embedding,
    component_faces,
    planar_rotations_of_component,
    skeleton_planar,
)


def _three_connected(g: WeightedMultigraph, vertices, edges) -> bool:
    """No separator of size <= 2; brute force over vertex pairs."""
    if len(vertices) < 4:
        return False
    adj = {v: [] for v in vertices}
    for e in edges:
        u, v, _ = g.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    vs = list(vertices)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            a, b = vs[i], vs[j]
            start = next(v for v in vs if v != a and v != b)
            seen = {a, b, start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(vs):
                return False
    return True


def _single_lr_rotation(g: WeightedMultigraph, vertices, edges) -> list[int]:
    """The unique (up to reflection) embedding of a 3-connected component."""
    eid_of = {}
    h = nx.Graph()
    h.add_nodes_from(vertices)
    for e in edges:
        u, v, _ = g.edges[e]
        h.add_edge(u, v)
        eid_of[(u, v)] = e
        eid_of[(v, u)] = e
    ok, cert = nx.check_planarity(h, counterexample=False)
    if not ok:
        raise AssertionError("profiles() called on a nonplanar component")
    order = cert.get_data()
    succ = [0] * (2 * g.m)
    for v in vertices:
        darts = []
        for w in order.get(v, []):
            e = eid_of[(v, w)]
            darts.append(2 * e + (0 if g.edges[e][0] == v else 1))
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]
    return succ


@dataclass(frozen=True)
class UncrossedSetCertificate:
    """Witness that S can be left entirely uncrossed in one drawing.

    ``embedding`` is a plane embedding of the spanning subgraph (V, S) with
    S renumbered in increasing original-id order; ``hosting`` assigns to
    every edge outside S a face id whose boundary contains both endpoints.
    """

    edge_subset: tuple[int, ...]
    embedding: Embedding
    hosting: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RealizabilityResult:
    status: str  # "yes" | "no" | "unknown"
    certificate: UncrossedSetCertificate | None = None


def certificate_is_valid(g: WeightedMultigraph, cert: UncrossedSetCertificate) -> bool:
    """Independent check of an uncrossed-set certificate."""
    s = set(cert.edge_subset)
    hosted = dict(cert.hosting)
    face_verts = {f.id: f.vertices for f in cert.embedding.faces}
    for eid in range(g.m):
        if eid in s:
            continue
        u, v, _ = g.edges[eid]
        if eid not in hosted or not {u, v} <= face_verts[hosted[eid]]:
            return False
    return True


class RealizabilityContext:
    """Per-graph state for realizability queries.

    Face profiles (the surviving rotation systems of one component and
    their face vertex sets) are cached by the component's edge set, so
    covering searches that revisit the same component pay for its rotation
    enumeration once.
    """

    def __init__(self, g: WeightedMultigraph, rotation_cap: int | None = 5_000_000):
        self.g = g
        self.rotation_cap = rotation_cap
        self.rotations_spent = 0
        self.profile_cache: dict[frozenset[int], list | None] = {}
        self.g_pairs = {
            (u, v) if u < v else (v, u) for u, v, _ in g.edges
        }

    # -- cheap necessary conditions ------------------------------------

    def part_skeleton(self, part) -> frozenset[tuple[int, int]]:
        g = self.g
        skel = set()
        for e in part:
            u, v, _ = g.edges[e]
            skel.add((u, v) if u < v else (v, u))
        return frozenset(skel)

    def pairs_insertable(self, part: frozenset[int]) -> bool:
        """Planarity plus: every required pair embeds planarly on its own.

        Sound for pruning partial parts: if any superset of ``part`` is
        realizable, each pair here is either inside the superset (still
        planar) or hosted on a face, hence addable; both imply planarity.
        Pairs joining different components are always addable (draw the
        components side by side with the endpoints outward), so only pairs
        inside one component are tested.
        """
        skel = self.part_skeleton(part)
        if not skeleton_planar(skel):
            return False
        if len(skel) + 1 <= 8:
            return True  # any single addition stays too small to matter
        comps, _ = self.subset_components(part)
        comp_of = {}
        for ci, (vs, _) in enumerate(comps):
            for v in vs:
                comp_of[v] = ci
        for u, v in self.g_pairs:
            p = (u, v)
            if p in skel:
                continue
            if comp_of.get(u) is None or comp_of.get(u) != comp_of.get(v):
                continue
            if not skeleton_planar(skel | {p}):
                return False
        return True

    def required_pairs(self, skel) -> list[tuple[int, int]]:
        return sorted(self.g_pairs - skel)

    # -- components and face profiles ----------------------------------

    def subset_components(self, part):
        """Connected components of (V, part) in original edge ids.

        Nontrivial components come as (vertex tuple, edge tuple); isolated
        vertices are reported separately.
        """
        g = self.g
        parent: dict[int, int] = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != x:
                parent[x], x = root, parent[x]
            return root

        for e in part:
            u, v, _ = g.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        touched = set()
        for e in part:
            u, v, _ = g.edges[e]
            touched.add(u)
            touched.add(v)
        for v in sorted(touched):
            groups.setdefault(find(v), []).append(v)
        comps = sorted(groups.values(), key=min)
        root_of = {min(vs): i for i, vs in enumerate(comps)}
        edge_lists: list[list[int]] = [[] for _ in comps]
        for e in sorted(part):
            u, _, _ = g.edges[e]
            edge_lists[root_of[min(groups[find(u)])]].append(e)
        isolated = [v for v in range(g.n) if v not in touched]
        return (
            [(tuple(vs), tuple(es)) for vs, es in zip(comps, edge_lists)],
            isolated,
        )

    def profiles(self, vertices, edges, within):
        """Rotations of one component hosting all its required pairs.

        Entries are (succ copy, faces); rotations repeating an earlier face
        vertex-set family are dropped.  Returns None when the rotation cap
        is exhausted.  ``within`` must equal the required pairs inside this
        component, which only depend on the edge set, so results are cached
        by the edge set.  Simple 3-connected components have one embedding
        up to reflection and skip the enumeration.
        """
        key = frozenset(edges)
        if key in self.profile_cache:
            return self.profile_cache[key]
        g = self.g
        candidates = None
        if len(edges) == len({(min(g.endpoints(e)), max(g.endpoints(e))) for e in edges}):
            if _three_connected(g, vertices, edges):
                succ = _single_lr_rotation(g, vertices, edges)
                candidates = [succ]
        out = []
        seen_families = set()
        count = 0
        exceeded = False
        if candidates is None:
            budget = None
            if self.rotation_cap is not None:
                budget = self.rotation_cap - self.rotations_spent
            candidates = planar_rotations_of_component(g, vertices, edges, half=True)
        else:
            budget = None
        for succ in candidates:
            count += 1
            if budget is not None and count > budget:
                exceeded = True
                break
            faces = component_faces(g, vertices, edges, succ)
            ok = True
            for u, v in within:
                if not any(u in verts and v in verts for _, verts in faces):
                    ok = False
                    break
            if not ok:
                continue
            family = tuple(sorted(tuple(sorted(verts)) for _, verts in faces))
            if family in seen_families:
                continue
            seen_families.add(family)
            out.append((list(succ), faces))
        self.rotations_spent += count
        result = None if exceeded else out
        self.profile_cache[key] = result
        return result

    # -- the decision ----------------------------------------------------

    def realizable(self, edge_ids, want_certificate: bool = False) -> RealizabilityResult:
        g = self.g
        s = frozenset(edge_ids)
        skel = self.part_skeleton(s)
        if not skeleton_planar(skel):
            return RealizabilityResult("no")
        if not want_certificate and _outerplanar_skeleton(skel, g.n):
            return RealizabilityResult("yes")
        if not self.pairs_insertable(s):
            return RealizabilityResult("no")

        pairs = self.required_pairs(skel)
        comps, isolated = self.subset_components(s)
        comp_of = {}
        for ci, (vs, _) in enumerate(comps):
            for v in vs:
                comp_of[v] = ci

        within: dict[int, list[tuple[int, int]]] = {ci: [] for ci in range(len(comps))}
        cross: list[tuple[int, int]] = []
        for u, v in pairs:
            cu, cv = comp_of.get(u), comp_of.get(v)
            if cu is not None and cu == cv:
                within[cu].append((u, v))
            else:
                cross.append((u, v))
        groups, group_req, hard_cross = _iso_groups(cross, comp_of, isolated)

        if not comps:
            # no edges at all: one unbounded region holds everything
            if not want_certificate:
                return RealizabilityResult("yes")
            return RealizabilityResult(
                "yes", _build_certificate(self, s, [], {}, {}, {}, {})
            )

        if len(comps) == 1:
            # every face of the single component borders its own region,
            # so within-pairs and isolated groups check against faces
            found = self.profiles(comps[0][0], comps[0][1], within[0])
            if found is None:
                return RealizabilityResult("unknown")
            reqs = list(group_req.values())
            for succ, faces in found:
                if not all(
                    any(req <= verts for _, verts in faces) for req in reqs
                ):
                    continue
                if not want_certificate:
                    return RealizabilityResult("yes")
                iso_placement = {}
                for root, members in groups.items():
                    fi = next(
                        i
                        for i, (_, verts) in enumerate(faces)
                        if group_req[root] <= verts
                    )
                    home = None if fi == 0 else (0, fi)
                    for w in members:
                        iso_placement[w] = home
                cert = _build_certificate(
                    self, s, comps, {0: (succ, faces)}, {0: 0}, {0: None},
                    iso_placement,
                )
                return RealizabilityResult("yes", cert)
            return RealizabilityResult("no")

        profiles: dict[int, list] = {}
        for ci, (vs, es) in enumerate(comps):
            found = self.profiles(vs, es, within[ci])
            if found is None:
                return RealizabilityResult("unknown")
            if not found:
                return RealizabilityResult("no")
            profiles[ci] = found

        solution = _arrange_components(
            list(range(len(comps))), profiles, hard_cross, groups, group_req
        )
        if solution is None:
            return RealizabilityResult("no")
        if not want_certificate:
            return RealizabilityResult("yes")
        chosen, shown, parents, iso_placement = solution
        cert = _build_certificate(self, s, comps, chosen, shown, parents, iso_placement)
        return RealizabilityResult("yes", cert)


def realizable_uncrossed_set(
    g: WeightedMultigraph,
    edge_ids,
    want_certificate: bool = True,
    rotation_cap: int | None = 5_000_000,
) -> RealizabilityResult:
    """Decide whether some drawing of G leaves every edge of S uncrossed.

    Enumerates plane embeddings of (V, S) component by component: a pair of
    vertices inside one component must share one of its faces, and pairs
    across components constrain the outer-face choices and the nesting.
    An outerplanar (V, S) is realizable outright: draw it with every vertex
    on the outer face and route all other edges out there.
    """
    ctx = RealizabilityContext(g, rotation_cap=rotation_cap)
    return ctx.realizable(edge_ids, want_certificate=want_certificate)


def pairs_insertable(g: WeightedMultigraph, part: frozenset[int]) -> bool:
    return RealizabilityContext(g).pairs_insertable(frozenset(part))


def required_pairs(g: WeightedMultigraph, s: frozenset[int]) -> set[tuple[int, int]]:
    ctx = RealizabilityContext(g)
    return set(ctx.required_pairs(ctx.part_skeleton(frozenset(s))))


def _outerplanar_skeleton(skel: frozenset[tuple[int, int]], n: int) -> bool:
    touched = {v for p in skel for v in p}
    apex = n
    return skeleton_planar(skel | frozenset((v, apex) for v in touched))


def _iso_groups(cross, comp_of, isolated):
    """Group isolated vertices forced into one region, with their needs.

    Returns (groups: root vertex -> member vertices, group_req: root -> set
    of component vertices one region boundary must contain, remaining cross
    pairs between nontrivial components).
    """
    iso_set = set(isolated)
    iso_partner: dict[int, set[int]] = {v: set() for v in isolated}
    same_region: list[tuple[int, int]] = []
    hard_cross: list[tuple[int, int]] = []
    for u, v in cross:
        u_iso, v_iso = u in iso_set, v in iso_set
        if u_iso and v_iso:
            same_region.append((u, v))
        elif u_iso:
            iso_partner[u].add(v)
        elif v_iso:
            iso_partner[v].add(u)
        else:
            hard_cross.append((u, v))

    group_of = {v: v for v in isolated}

    def find(x):
        while group_of[x] != x:
            group_of[x] = group_of[group_of[x]]
            x = group_of[x]
        return x

    for a, b in same_region:
        ra, rb = find(a), find(b)
        if ra != rb:
            group_of[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in isolated:
        groups.setdefault(find(v), []).append(v)
    group_req = {
        root: set().union(*(iso_partner[v] for v in members))
        for root, members in groups.items()
    }
    return groups, group_req, hard_cross


def _arrange_components(nontrivial, profiles, hard_cross, groups, group_req):
    """Search shown faces and nestings hosting every cross-component pair.

    Returns (profile per comp, shown face index per comp, parent per comp,
    isolated-vertex placements) or None.  A parent of None is the unbounded
    region; ``(comp, face)`` is an inner face of that component.
    """
    for combo in itertools.product(*(range(len(profiles[ci])) for ci in nontrivial)):
        chosen = {ci: profiles[ci][idx] for ci, idx in zip(nontrivial, combo)}
        faces_of = {ci: chosen[ci][1] for ci in nontrivial}
        for shown_combo in itertools.product(
            *(range(len(faces_of[ci])) for ci in nontrivial)
        ):
            shown = dict(zip(nontrivial, shown_combo))
            slot_lists = []
            for ci in nontrivial:
                slots: list = [None]
                for cj in nontrivial:
                    if cj == ci:
                        continue
                    slots.extend(
                        (cj, fi)
                        for fi in range(len(faces_of[cj]))
                        if fi != shown[cj]
                    )
                slot_lists.append(slots)
            for parent_combo in itertools.product(*slot_lists):
                parents = dict(zip(nontrivial, parent_combo))
                if not _parents_acyclic(parents):
                    continue
                regions = _regions(nontrivial, faces_of, shown, parents)
                if not all(
                    any(u in verts and v in verts for _, verts in regions)
                    for u, v in hard_cross
                ):
                    continue
                iso_placement = {}
                ok = True
                for root, members in groups.items():
                    home = next(
                        (key for key, verts in regions if group_req[root] <= verts),
                        "none",
                    )
                    if home == "none":
                        ok = False
                        break
                    for w in members:
                        iso_placement[w] = home
                if ok:
                    return chosen, shown, parents, iso_placement
    return None


def _parents_acyclic(parents: dict) -> bool:
    for start in parents:
        cur = parents[start]
        steps = 0
        while cur is not None:
            steps += 1
            if steps > len(parents):
                return False
            cur = parents[cur[0]]
    return True


def _regions(nontrivial, faces_of, shown, parents):
    """(key, vertexset) per region; key None is the unbounded region."""
    out = []
    root_verts = set()
    for ci in nontrivial:
        if parents[ci] is None:
            root_verts |= faces_of[ci][shown[ci]][1]
    out.append((None, root_verts))
    for cj in nontrivial:
        for fi in range(len(faces_of[cj])):
            if fi == shown[cj]:
                continue
            verts = set(faces_of[cj][fi][1])
            for ci in nontrivial:
                if parents[ci] == (cj, fi):
                    verts |= faces_of[ci][shown[ci]][1]
            out.append(((cj, fi), verts))
    return out


def _build_certificate(ctx, s, comps, chosen, shown, parents, iso_placement):
    """Assemble the (V, S) Embedding and per-edge hosting faces.

    ``chosen`` carries rotations in original dart ids; the certificate's
    embedding lives on the renumbered spanning subgraph, so darts are
    translated on the way.
    """
    g = ctx.g
    kept = sorted(s)
    sub = g.spanning_subgraph(kept)
    new_id = {orig: i for i, orig in enumerate(kept)}

    def tr(d: int) -> int:
        return 2 * new_id[d >> 1] + (d & 1)

    rotation: list[tuple[int, ...]] = [() for _ in range(sub.n)]
    for ci, (succ, _) in chosen.items():
        vs, es = comps[ci]
        at_vertex: dict[int, list[int]] = {v: [] for v in vs}
        for eid in es:
            u, v, _ = g.edges[eid]
            at_vertex[u].append(2 * eid)
            at_vertex[v].append(2 * eid + 1)
        for v in vs:
            ds = sorted(at_vertex[v])
            if not ds:
                continue
            cycle = [ds[0]]
            while len(cycle) < len(ds):
                cycle.append(succ[cycle[-1]])
            rotation[v] = tuple(tr(d) for d in cycle)

    # component order in the sub graph: by smallest vertex, isolated included
    entries = [(min(vs), ("comp", ci)) for ci, (vs, _) in enumerate(comps)]
    covered = {v for vs, _ in comps for v in vs}
    entries += [(v, ("iso", v)) for v in range(g.n) if v not in covered]
    entries.sort()
    comp_slot = {tag: slot for slot, (_, tag) in enumerate(entries)}

    outer_choice = []
    parent_list = []

    def resolve_parent(p):
        if p is None:
            return None
        ci, fi = p
        return (comp_slot[("comp", ci)], fi)

    for _, tag in entries:
        kind, idx = tag
        if kind == "comp":
            outer_choice.append(shown.get(idx, 0))
            parent_list.append(resolve_parent(parents.get(idx)))
        else:
            outer_choice.append(0)
            parent_list.append(resolve_parent(iso_placement.get(idx)))
    emb = build_embedding(sub, tuple(rotation), tuple(outer_choice), tuple(parent_list))

    hosting = []
    for eid in sorted(set(range(g.m)) - s):
        u, v, _ = g.edges[eid]
        fid = next((f.id for f in emb.faces if u in f.vertices and v in f.vertices), None)
        if fid is None:
            raise AssertionError("certificate construction lost a hosted pair")
        hosting.append((eid, fid))
    return UncrossedSetCertificate(
        edge_subset=tuple(kept), embedding=emb, hosting=tuple(hosting)
    )


# ---------------------------------------------------------------------------
# exact cover engine


def dense_first_order(g: WeightedMultigraph) -> list[int]:
    """Edges among low vertices first, so constraints bite early in covers."""
    return sorted(range(g.m), key=lambda e: (max(g.endpoints(e)), min(g.endpoints(e))))


@dataclass(frozen=True)
class CoverOutcome:
    status: str  # "exact" | "unknown"
    value: int | None
    lower_bound: int
    upper_bound: int | None
    parts: tuple[frozenset[int], ...] | None


class CoverSearch:
    """Minimum number of feasible edge sets covering all of E(G).

    ``feasible(part)`` must be exact (True / False / None for unknown) and
    closed under subsets.  ``necessary(part)`` is an optional cheap filter
    implied by feasibility of any superset; ``deep_sizes`` lists part sizes
    at which the exact predicate also runs during the search (it always runs
    on complete parts).
    """

    def __init__(
        self,
        g: WeightedMultigraph,
        feasible,
        necessary=None,
        deep_sizes=None,
        ticker=None,
        edge_order=None,
    ):
        self.g = g
        self.feasible = feasible
        self.necessary = necessary
        self.deep_sizes = deep_sizes
        self.ticker = ticker
        self.edge_order = list(edge_order) if edge_order is not None else list(range(g.m))
        self.cache: dict[frozenset[int], bool | None] = {}
        self.necessary_cache: dict[frozenset[int], bool] = {}
        self.saw_unknown = False
        self.nodes = 0

    def feasible_cached(self, part: frozenset[int]):
        if part in self.cache:
            ans = self.cache[part]
        else:
            ans = self.feasible(part)
            self.cache[part] = ans
        if ans is None:
            self.saw_unknown = True
        return ans

    def _may_extend(self, part: frozenset[int]) -> bool:
        """False only when no superset of part can be feasible."""
        if self.necessary is not None:
            hit = self.necessary_cache.get(part)
            if hit is None:
                hit = self.necessary(part)
                self.necessary_cache[part] = hit
            if not hit:
                return False
            if self.deep_sizes is not None and len(part) not in self.deep_sizes:
                return True
        return self.feasible_cached(part) is not False

    def cover_with(self, c: int) -> tuple[frozenset[int], ...] | None:
        """First partition of E into at most c feasible parts, else None."""
        m = self.g.m
        order = self.edge_order
        parts: list[set[int]] = []

        def place(depth: int):
            self.nodes += 1
            if self.ticker is not None:
                self.ticker.tick()
            if depth == m:
                final = [frozenset(p) for p in parts]
                if all(self.feasible_cached(p) is True for p in final):
                    return tuple(final)
                return None
            eid = order[depth]
            limit = min(len(parts) + 1, c)
            for i in range(limit):
                opened = i == len(parts)
                if opened:
                    parts.append(set())
                parts[i].add(eid)
                if self._may_extend(frozenset(parts[i])):
                    got = place(depth + 1)
                    if got is not None:
                        return got
                parts[i].discard(eid)
                if opened:
                    parts.pop()
            return None

        return place(0)

    def minimum(self, max_parts: int | None = None) -> CoverOutcome:
        lower = 1
        c = 1
        while True:
            if (max_parts is not None and c > max_parts) or c > max(1, self.g.m):
                return CoverOutcome("unknown", None, lower, None, None)
            got = self.cover_with(c)
            if got is not None:
                if lower == c:
                    return CoverOutcome("exact", c, c, c, got)
                return CoverOutcome("unknown", None, lower, c, got)
            if not self.saw_unknown:
                lower = c + 1
            c += 1
