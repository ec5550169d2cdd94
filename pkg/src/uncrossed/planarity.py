"""Planarity and outerplanarity decision, embeddings and face enumeration.

The planarity verdict is delegated to networkx's left-right test (linear
time, emits a certificate either way); everything combinatorial on top of it
(rotation systems, face walks, nesting of components, exhaustive embedding
enumeration) lives here.

Darts: edge e contributes darts ``2e`` (incident at ``endpoints(e)[0]``) and
``2e+1`` (at ``endpoints(e)[1]``); ``d ^ 1`` is the opposite dart.  A face
walk is recorded as the cyclic sequence of outgoing darts along its boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from ._lrtest import lr_planar
from .core import (
    PreconditionError,
    ResourceExceededError,
    WeightedMultigraph,
)

#: Enumeration refuses subgraphs with more edges than this unless overridden.
DEFAULT_EDGE_CAP = 16

_skeleton_cache: dict[frozenset[tuple[int, int]], bool] = {}


def skeleton_planar(skeleton: frozenset[tuple[int, int]]) -> bool:
    """Planarity of a simple graph given as a set of endpoint pairs."""
    hit = _skeleton_cache.get(skeleton)
    if hit is not None:
        return hit
    if len(skeleton) <= 8:
        ans = True  # fewer than 9 edges can hold no Kuratowski subdivision
    else:
        verts = sorted({v for p in skeleton for v in p})
        if len(verts) <= 900:
            index = {v: i for i, v in enumerate(verts)}
            ans = lr_planar(len(verts), [(index[u], index[v]) for u, v in skeleton])
        else:
            ans, _ = nx.check_planarity(nx.Graph(list(skeleton)), counterexample=False)
    _skeleton_cache[skeleton] = ans
    return ans


def graph_planar(g: WeightedMultigraph) -> bool:
    """Fast planarity verdict (parallel edges cannot change it)."""
    return skeleton_planar(g.skeleton())


@dataclass(frozen=True)
class Face:
    """A face of a plane embedding.

    ``walks`` holds one boundary walk per component touching the face (a
    merged face of a disconnected embedding has several); each walk is a
    cyclic tuple of outgoing darts.  ``vertices`` includes the vertices of
    every boundary walk plus isolated vertices placed inside the face.
    """

    id: int
    walks: tuple[tuple[int, ...], ...]
    vertices: frozenset[int]


@dataclass(frozen=True)
class Embedding:
    """Rotation system plus outer-face and component-nesting choices.

    ``rotation[v]`` is the cyclic order of darts incident at v.  ``nesting``
    maps each connected component (by index into ``components``) to the id
    of the face of the remainder that directly contains it; root components
    map to the outer face.
    """

    graph: WeightedMultigraph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]
    outer_face: int
    components: tuple[tuple[int, ...], ...]
    nesting: tuple[int, ...]

    def face_of_dart(self) -> dict[int, int]:
        lookup: dict[int, int] = {}
        for face in self.faces:
            for walk in face.walks:
                for d in walk:
                    lookup[d] = face.id
        return lookup


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Embedding | None
    kuratowski: frozenset[int] | None


def dart_vertex(g: WeightedMultigraph, d: int) -> int:
    return g.endpoints(d >> 1)[d & 1]


def components_of(g: WeightedMultigraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (vertices, edges), isolated vertices included.

    Components are sorted by smallest vertex id.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    comps = sorted(groups.values(), key=min)
    vertex_comp = {}
    for i, vs in enumerate(comps):
        for v in vs:
            vertex_comp[v] = i
    edge_lists: list[list[int]] = [[] for _ in comps]
    for eid, (u, _, _) in enumerate(g.edges):
        edge_lists[vertex_comp[u]].append(eid)
    return [(tuple(vs), tuple(es)) for vs, es in zip(comps, edge_lists)]


def _vertex_darts(g: WeightedMultigraph) -> dict[int, list[int]]:
    darts: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for eid, (u, v, _) in enumerate(g.edges):
        darts[u].append(2 * eid)
        darts[v].append(2 * eid + 1)
    return darts


def _orbit_walks(darts: list[int], succ: dict[int, int]) -> list[tuple[int, ...]]:
    """Orbits of d -> succ[d ^ 1], i.e. the face walks of a rotation."""
    seen: set[int] = set()
    walks = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = succ[d ^ 1]
        walks.append(_canonical_walk(walk))
    return walks


def _canonical_walk(walk: list[int]) -> tuple[int, ...]:
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


def planar_rotations_of_component(
    g: WeightedMultigraph,
    vertices: tuple[int, ...],
    edges: tuple[int, ...],
    rotation_cap: int | None = None,
    half: bool = False,
):
    """Yield every genus-zero rotation system of one connected component.

    A rotation system is presented as an array mapping dart -> next dart at
    the same vertex; the yielded array is reused in place, so callers must
    copy it if they keep it past the next step.  With ``half`` the systems
    come up to reflection (the cyclic order at one anchor vertex is fixed
    in one direction), which is enough whenever only face vertex sets
    matter.  ``rotation_cap`` bounds the candidates tried.
    """
    at_vertex: dict[int, list[int]] = {v: [] for v in vertices}
    for eid in edges:
        u, v, _ = g.edges[eid]
        at_vertex[u].append(2 * eid)
        at_vertex[v].append(2 * eid + 1)
    n_c, m_c = len(vertices), len(edges)
    if m_c == 0:
        yield {}
        return

    anchor = next((v for v in vertices if len(at_vertex[v]) >= 3), None)
    per_vertex: list[list[tuple[int, ...]]] = []
    total = 1
    for v in vertices:
        ds = sorted(at_vertex[v])
        cycles = [(ds[0], *rest) for rest in itertools.permutations(ds[1:])]
        if half and v == anchor and len(ds) >= 3:
            cycles = [c for c in cycles if c[1] < c[-1]]
        per_vertex.append(cycles)
        total *= len(cycles)
        if rotation_cap is not None and total > rotation_cap:
            raise ResourceExceededError(
                f"rotation enumeration would try {total} systems (cap {rotation_cap})"
            )

    all_darts = sorted(d for v in vertices for d in at_vertex[v])
    size = 2 * g.m
    succ: list[int] = [0] * size
    stamp = [0] * size
    tick = 0
    target = 2 - n_c + m_c  # faces required by Euler's formula
    nv = len(vertices)

    def assign(i: int):
        nonlocal tick
        if i == nv:
            tick += 1
            t = tick
            f = 0
            for start in all_darts:
                if stamp[start] == t:
                    continue
                f += 1
                d = start
                while stamp[d] != t:
                    stamp[d] = t
                    d = succ[d ^ 1]
            if f == target:
                yield succ
            return
        for cycle in per_vertex[i]:
            k = len(cycle)
            for j in range(k - 1):
                succ[cycle[j]] = cycle[j + 1]
            succ[cycle[k - 1]] = cycle[0]
            yield from assign(i + 1)

    yield from assign(0)


def component_faces(
    g: WeightedMultigraph,
    vertices: tuple[int, ...],
    edges: tuple[int, ...],
    succ: dict[int, int],
) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    """Face walks of one component's rotation, with their vertex sets."""
    if not edges:
        return [((), frozenset(vertices))]
    all_darts = []
    for eid in edges:
        all_darts.append(2 * eid)
        all_darts.append(2 * eid + 1)
    walks = _orbit_walks(sorted(all_darts), succ)
    out = []
    for walk in sorted(walks):
        out.append((walk, frozenset(dart_vertex(g, d) for d in walk)))
    return out


def _nx_incidence_graph(g: WeightedMultigraph) -> nx.Graph:
    """Simple graph with every edge subdivided once (handles multi-edges)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for eid, (u, v, _) in enumerate(g.edges):
        mid = ("e", eid)
        h.add_edge(u, mid)
        h.add_edge(mid, v)
    return h


def is_planar(g: WeightedMultigraph) -> PlanarityResult:
    """Planarity verdict with an embedding or a Kuratowski witness.

    The witness is a set of edge ids of g whose union forms a subdivision of
    K5 or K33 and is minimal: removing any one edge makes it planar.
    """
    h = _nx_incidence_graph(g)
    planar, cert = nx.check_planarity(h, counterexample=False)
    if not planar:
        bad = nx.algorithms.planarity.get_counterexample(h)
        witness = set()
        for a, b in bad.edges():
            mid = a if isinstance(a, tuple) else b
            witness.add(mid[1])
        return PlanarityResult(False, None, frozenset(witness))

    rotation: list[tuple[int, ...]] = []
    order = cert.get_data()
    for v in range(g.n):
        darts = []
        for mid in order.get(v, []):
            eid = mid[1]
            u0, _, _ = g.edges[eid]
            darts.append(2 * eid + (0 if u0 == v else 1))
        rotation.append(tuple(darts))
    embedding = build_embedding(g, tuple(rotation))
    return PlanarityResult(True, embedding, None)


def is_outerplanar(g: WeightedMultigraph) -> bool:
    """True iff some planar embedding has every vertex on one face.

    Decided as planarity of the graph plus an apex joined to all vertices.
    """
    apex = g.n
    pairs = set(g.skeleton())
    pairs.update((v, apex) for v in range(g.n))
    return skeleton_planar(frozenset(pairs))


def faces(embedding: Embedding) -> tuple[Face, ...]:
    return embedding.faces


def _rotation_to_succ(rotation: tuple[tuple[int, ...], ...]) -> dict[int, int]:
    succ: dict[int, int] = {}
    for cycle in rotation:
        k = len(cycle)
        for i, d in enumerate(cycle):
            succ[d] = cycle[(i + 1) % k]
    return succ


def build_embedding(
    g: WeightedMultigraph,
    rotation: tuple[tuple[int, ...], ...],
    outer_choice: tuple[int, ...] | None = None,
    parents: tuple[tuple[int, int] | None, ...] | None = None,
) -> Embedding:
    """Assemble an Embedding from a planar rotation system.

    ``outer_choice[i]`` picks which local face of component i faces its
    surroundings; ``parents[i]`` is None for components drawn in the shared
    unbounded region, or ``(j, f)`` to draw component i inside local face f
    of component j (f must not be j's outer choice).  Defaults put every
    component side by side with its first face outward.
    """
    comps = components_of(g)
    succ = _rotation_to_succ(rotation)
    local: list[list[tuple[tuple[int, ...], frozenset[int]]]] = []
    for vs, es in comps:
        faces_c = component_faces(g, vs, es, succ)
        if es and len(vs) - len(es) + len(faces_c) != 2:
            raise PreconditionError("rotation system is not a plane embedding")
        local.append(faces_c)
    if outer_choice is None:
        outer_choice = tuple(0 for _ in comps)
    if parents is None:
        parents = tuple(None for _ in comps)
    for i, p in enumerate(parents):
        if p is not None and p[1] == outer_choice[p[0]]:
            raise PreconditionError("cannot nest a component in an outer face")

    # region per (component, non-outer local face) plus one root region
    children: dict[tuple[int, int] | None, list[int]] = {None: []}
    for i in range(len(comps)):
        children.setdefault(parents[i], []).append(i)

    raw_faces: list[tuple[tuple[tuple[int, ...], ...], frozenset[int], bool, list]] = []
    region_index: dict[tuple[int, int] | None, int] = {}

    def region_content(key):
        walks: list[tuple[int, ...]] = []
        verts: set[int] = set()
        constituents = []
        if key is not None:
            ci, fi = key
            w, vset = local[ci][fi]
            if w:
                walks.append(w)
            verts |= vset
            constituents.append((ci, fi))
        for child in children.get(key, []):
            w, vset = local[child][outer_choice[child]]
            if w:
                walks.append(w)
            verts |= vset
            constituents.append((child, outer_choice[child]))
        return tuple(sorted(walks)), frozenset(verts), constituents

    keys: list[tuple[int, int] | None] = [None]
    for i in range(len(comps)):
        for fi in range(len(local[i])):
            if fi != outer_choice[i]:
                keys.append((i, fi))
    for key in keys:
        region_index[key] = len(raw_faces)
        walks, verts, constituents = region_content(key)
        raw_faces.append((walks, verts, key is None, constituents))

    # canonical face ids: sort by walk structure, vertices as tiebreak
    order = sorted(range(len(raw_faces)), key=lambda i: (raw_faces[i][0], sorted(raw_faces[i][1])))
    new_id = {old: new for new, old in enumerate(order)}
    face_objs = tuple(
        Face(id=new_id[i], walks=raw_faces[i][0], vertices=raw_faces[i][1])
        for i in sorted(range(len(raw_faces)), key=lambda i: new_id[i])
    )
    outer_id = new_id[region_index[None]]
    nesting = []
    for i in range(len(comps)):
        nesting.append(new_id[region_index[parents[i]]])
    return Embedding(
        graph=g,
        rotation=tuple(rotation),
        faces=face_objs,
        outer_face=outer_id,
        components=tuple(vs for vs, _ in comps),
        nesting=tuple(nesting),
    )


def _embedding_key(e: Embedding):
    face_shape = tuple((f.walks, tuple(sorted(f.vertices))) for f in e.faces)
    return (e.rotation, face_shape, e.outer_face, e.nesting)


def _reflect_rotation(rotation: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    out = []
    for cycle in rotation:
        if len(cycle) <= 1:
            out.append(cycle)
        else:
            out.append((cycle[0], *reversed(cycle[1:])))
    return tuple(out)


def reflect_embedding(e: Embedding) -> Embedding:
    """The mirror image: all rotations reversed, faces mapped across."""
    rot_r = _reflect_rotation(e.rotation)
    succ_r = _rotation_to_succ(rot_r)
    comps = components_of(e.graph)

    # map each original local face to its mirror (containing the reversed darts)
    def local_face_lookup(vs, es):
        lst = component_faces(e.graph, vs, es, succ_r)
        where = {}
        for idx, (walk, _) in enumerate(lst):
            for d in walk:
                where[d] = idx
        return lst, where

    succ_o = _rotation_to_succ(e.rotation)
    outer_choice_r = []
    image_of: list[dict[int, int]] = []
    originals: list[list[tuple[tuple[int, ...], frozenset[int]]]] = []
    for ci, (vs, es) in enumerate(comps):
        orig = component_faces(e.graph, vs, es, succ_o)
        originals.append(orig)
        lst_r, where = local_face_lookup(vs, es)
        mapping = {}
        for fi, (walk, _) in enumerate(orig):
            if walk:
                mapping[fi] = where[walk[0] ^ 1]
            else:
                mapping[fi] = 0
        image_of.append(mapping)

    # recover this embedding's outer/nesting choices in local-face terms
    outer_choice, parents = _decompose_embedding(e, comps, originals)
    outer_r = tuple(image_of[ci][outer_choice[ci]] for ci in range(len(comps)))
    parents_r = tuple(
        None if p is None else (p[0], image_of[p[0]][p[1]]) for p in parents
    )
    return build_embedding(e.graph, rot_r, outer_r, parents_r)


def _decompose_embedding(e, comps, originals):
    """Recover (outer_choice, parents) from an Embedding's face/nesting data."""
    face_constituents: dict[int, list[tuple[int, int]]] = {f.id: [] for f in e.faces}
    walk_home = {}
    for ci, faces_list in enumerate(originals):
        for fi, (walk, _) in enumerate(faces_list):
            walk_home[walk] = (ci, fi)
    for f in e.faces:
        for walk in f.walks:
            face_constituents[f.id].append(walk_home[walk])

    outer_choice = [0] * len(comps)
    parents: list[tuple[int, int] | None] = [None] * len(comps)
    comp_of_vertex = {}
    for ci, (vs, _) in enumerate(comps):
        for v in vs:
            comp_of_vertex[v] = ci
    for ci in range(len(comps)):
        host_face = e.nesting[ci]
        cands = [fi for cj, fi in face_constituents[host_face] if cj == ci]
        if not cands:  # isolated vertex: its only face is "outer"
            outer_choice[ci] = 0
        else:
            outer_choice[ci] = cands[0]
        if host_face == e.outer_face:
            parents[ci] = None
        else:
            owners = [
                (cj, fi)
                for cj, fi in face_constituents[host_face]
                if cj != ci and e.nesting[cj] != host_face
            ]
            parents[ci] = owners[0]
    return tuple(outer_choice), tuple(parents)


def enumerate_embeddings(
    g: WeightedMultigraph,
    max_edges: int = DEFAULT_EDGE_CAP,
    rotation_cap: int | None = 2_000_000,
):
    """Yield every combinatorial embedding of planar g, up to reflection.

    Covers all rotation systems, all outer-face choices and all nestings of
    components and isolated vertices, in a deterministic order.  Raises
    PreconditionError on nonplanar input and ResourceExceededError beyond
    the configured caps.
    """
    if g.m > max_edges:
        raise ResourceExceededError(f"embedding enumeration capped at {max_edges} edges")
    if not graph_planar(g):
        raise PreconditionError("embedding enumeration needs a planar graph")
    comps = components_of(g)
    per_comp_rotations = []
    for vs, es in comps:
        snapshots = []
        for succ in planar_rotations_of_component(
            g, vs, es, rotation_cap=rotation_cap, half=True
        ):
            snapshots.append(list(succ) if es else {})
        per_comp_rotations.append(snapshots)

    seen: set = set()
    for rots in itertools.product(*per_comp_rotations):
        rotation: list[tuple[int, ...]] = [() for _ in range(g.n)]
        for succ_c, (vs, es) in zip(rots, comps):
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
                    cycle.append(succ_c[cycle[-1]])
                rotation[v] = tuple(cycle)
        rotation_t = tuple(rotation)
        succ = _rotation_to_succ(rotation_t)
        local = [component_faces(g, vs, es, succ) for vs, es in comps]

        inner_slots: list[list[tuple[int, int]]] = []
        for outers in itertools.product(*(range(len(lf)) for lf in local)):
            slot_lists = []
            for ci in range(len(comps)):
                slots: list[tuple[int, int] | None] = [None]
                for cj in range(len(comps)):
                    if cj == ci:
                        continue
                    for fi in range(len(local[cj])):
                        if fi != outers[cj]:
                            slots.append((cj, fi))
                slot_lists.append(slots)
            for parents in itertools.product(*slot_lists):
                if not _acyclic(parents):
                    continue
                emb = build_embedding(g, rotation_t, tuple(outers), parents)
                key = _embedding_key(emb)
                if key in seen:
                    continue
                mirror_key = _embedding_key(reflect_embedding(emb))
                seen.add(key)
                seen.add(mirror_key)
                yield emb


def _acyclic(parents) -> bool:
    for start in range(len(parents)):
        slow = start
        steps = 0
        cur = parents[start]
        while cur is not None:
            cur_i = cur[0]
            steps += 1
            if steps > len(parents):
                return False
            cur = parents[cur_i]
    return True


def kuratowski_is_valid(g: WeightedMultigraph, witness: frozenset[int]) -> bool:
    """Check a Kuratowski witness: nonplanar, minimal under edge deletion."""
    sub = g.spanning_subgraph(witness)
    if graph_planar(sub):
        return False
    ids = sorted(witness)
    for drop in range(len(ids)):
        rest = g.spanning_subgraph(ids[:drop] + ids[drop + 1 :])
        if not graph_planar(rest):
            return False
    return True
