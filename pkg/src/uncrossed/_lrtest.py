"""Array-based left-right planarity test for small simple graphs.

Boolean verdict only, tuned for the solver's hot loops: plain ints, no graph
objects.  The structure follows Brandes' formulation of the left-right
criterion (DFS orientation with lowpoints and nesting order, then the
conflict-pair test).  Callers handle multigraphs by deduplicating parallel
edges and reject loops beforehand.
"""

from __future__ import annotations

import sys


def lr_planar(n: int, pairs) -> bool:
    """Planarity of the simple graph on vertices 0..n-1 with the given edges."""
    m = len(pairs)
    if m <= 8:
        return True
    if n > 2 and m > 3 * n - 6:
        return False
    if n > 900:  # recursion depth guard; callers this large go elsewhere
        raise ValueError("lr_planar is limited to small graphs")

    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)

    NONE = -1
    key = n  # directed edge (v, w) encoded as v * key + w
    height = [NONE] * n
    parent_edge = [NONE] * n
    lowpt: dict[int, int] = {}
    lowpt2: dict[int, int] = {}
    nesting: dict[int, int] = {}
    dg = [[] for _ in range(n)]  # DFS-oriented out-neighbors
    oriented: set[int] = set()

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def dfs1(v: int) -> None:
        e = parent_edge[v]
        hv = height[v]
        for w in adj[v]:
            und = v * key + w if v < w else w * key + v
            if und in oriented:
                continue
            oriented.add(und)
            vw = v * key + w
            dg[v].append(w)
            lowpt[vw] = hv
            lowpt2[vw] = hv
            if height[w] == NONE:  # tree edge
                parent_edge[w] = vw
                height[w] = hv + 1
                dfs1(w)
            else:  # back edge
                lowpt[vw] = height[w]
            nesting[vw] = 2 * lowpt[vw]
            if lowpt2[vw] < hv:  # chordal
                nesting[vw] += 1
            if e != NONE:
                if lowpt[vw] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[vw])
                    lowpt[e] = lowpt[vw]
                elif lowpt[vw] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[vw])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[vw])

    roots = []
    for v in range(n):
        if height[v] == NONE:
            height[v] = 0
            roots.append(v)
            dfs1(v)

    ordered = [sorted(dg[v], key=lambda w: nesting[v * key + w]) for v in range(n)]

    # conflict-pair machinery; an interval is [low, high], a pair [L, R]
    S: list[list[list[int | None]]] = []
    stack_bottom: dict[int, int] = {}
    lowpt_edge: dict[int, int] = {}
    ref: dict[int, int | None] = {}

    def conflicting(interval, b: int) -> bool:
        return interval[1] is not None and lowpt[interval[1]] > lowpt[b]

    def lowest(pair) -> int:
        if pair[0][0] is None:
            return lowpt[pair[1][0]]
        if pair[1][0] is None:
            return lowpt[pair[0][0]]
        return min(lowpt[pair[0][0]], lowpt[pair[1][0]])

    def add_constraints(ei: int, e: int) -> bool:
        P: list[list[int | None]] = [[None, None], [None, None]]
        # merge return edges of ei into P's right side
        while True:
            Q = S.pop()
            if Q[0][0] is not None or Q[0][1] is not None:
                Q.reverse()
            if Q[0][0] is not None or Q[0][1] is not None:
                return False
            if lowpt[Q[1][0]] > lowpt[e]:
                if P[1][0] is None and P[1][1] is None:
                    P[1][1] = Q[1][1]
                else:
                    ref[P[1][0]] = Q[1][1]
                P[1][0] = Q[1][0]
            else:  # align
                ref[Q[1][0]] = lowpt_edge[e]
            if len(S) == stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P's left
        while conflicting(S[-1][0], ei) or conflicting(S[-1][1], ei):
            Q = S.pop()
            if conflicting(Q[1], ei):
                Q.reverse()
            if conflicting(Q[1], ei):
                return False
            ref[P[1][0]] = Q[1][1]
            if Q[1][0] is not None:
                P[1][0] = Q[1][0]
            if P[0][0] is None and P[0][1] is None:
                P[0][1] = Q[0][1]
            else:
                ref[P[0][0]] = Q[0][1]
            P[0][0] = Q[0][0]
        if P != [[None, None], [None, None]]:
            S.append(P)
        return True

    def remove_back_edges(e: int) -> None:
        u = e // key
        hu = height[u]
        while S and lowest(S[-1]) == hu:  # drop entire conflict pairs
            P = S.pop()
        if S:
            P = S.pop()
            while P[0][1] is not None and P[0][1] % key == u:
                P[0][1] = ref.get(P[0][1])
            if P[0][1] is None and P[0][0] is not None:
                ref[P[0][0]] = P[1][0]
                P[0][0] = None
            while P[1][1] is not None and P[1][1] % key == u:
                P[1][1] = ref.get(P[1][1])
            if P[1][1] is None and P[1][0] is not None:
                ref[P[1][0]] = P[0][0]
                P[1][0] = None
            S.append(P)
        if lowpt[e] < hu:  # e has a return edge
            hl = S[-1][0][1]
            hr = S[-1][1][1]
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    def dfs2(v: int) -> bool:
        e = parent_edge[v]
        ordv = ordered[v]
        for w in ordv:
            ei = v * key + w
            stack_bottom[ei] = len(S)
            if ei == parent_edge[w]:  # tree edge
                if not dfs2(w):
                    return False
            else:  # back edge
                lowpt_edge[ei] = ei
                S.append([[None, None], [ei, ei]])
            if lowpt[ei] < height[v]:  # ei has a return edge
                if w == ordv[0]:
                    lowpt_edge[e] = lowpt_edge[ei]
                else:
                    if not add_constraints(ei, e):
                        return False
        if e != NONE:
            remove_back_edges(e)
        return True

    return all(dfs2(r) for r in roots)
