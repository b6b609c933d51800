"""Exact graph invariants with self-verified certificates.

Everything here is exact: clique, independence and chromatic numbers come from
branch-and-bound searches, planarity verdicts carry either a rotation system
that passes an Euler face count or a Kuratowski subdivision witness that is
re-validated by degree profile and path contraction before being returned.
Inputs are small (a few dozen vertices), so clarity wins over asymptotics.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

INFINITE = math.inf

DEFAULT_EXACT_CAP = 64
ISO_CAP = 16

FORBIDDEN_PATTERNS = ("K12", "K13", "K14", "K22", "K23", "K33", "K5")


class ExactCapExceeded(RuntimeError):
    """The graph is larger than the configured exact-solver cap."""


def adjacency_sets(g) -> list[set[int]]:
    """Normalize a graph-like object to a list of neighbor sets.

    Accepts anything with ``n_vertices`` and ``neighbors(v)`` (CoprimeGraph,
    SimpleGraph) or a raw list of neighbor collections.
    """
    if isinstance(g, list):
        return [set(s) for s in g]
    return [set(g.neighbors(v)) for v in range(g.n_vertices)]


def edge_list(adj: list[set[int]]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(adj)) for v in sorted(adj[u]) if u < v]


def connected_components(adj: list[set[int]]) -> list[list[int]]:
    n = len(adj)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _bfs_dist(adj: list[set[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_diameter(adj: list[set[int]], comp: list[int]) -> int:
    best = 0
    for v in comp:
        dist = _bfs_dist(adj, v)
        best = max(best, max(dist[u] for u in comp))
    return best


def girth(g) -> float:
    """Length of the shortest cycle, or INFINITE for forests.

    BFS from every root; a non-tree edge (u, w) seen from root s bounds the
    shortest cycle through s by dist(u) + dist(w) + 1, and scanning all roots
    makes the minimum exact.
    """
    adj = adjacency_sets(g)
    n = len(adj)
    best = INFINITE
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g) -> bool:
    adj = adjacency_sets(g)
    color = [-1] * len(adj)
    for s in range(len(adj)):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# Exact solvers on bitmask adjacency.


def _bitmasks(adj: list[set[int]]) -> list[int]:
    return [sum(1 << w for w in s) for s in adj]


def _greedy_color_order(masks: list[int], candidates: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; per-vertex color indices are the
    clique-size upper bounds used by the Tomita-style search below."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    remaining = candidates
    while remaining:
        color += 1
        avail = remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            avail &= ~masks[v]
            remaining &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_masks(masks: list[int], n: int) -> int:
    if n == 0:
        return 0
    best_mask = 0
    best = 0

    def expand(size: int, current: int, candidates: int) -> None:
        nonlocal best, best_mask
        order, bounds = _greedy_color_order(masks, candidates)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            new_candidates = candidates & masks[v]
            if new_candidates:
                expand(size + 1, current | bit, new_candidates)
            elif size + 1 > best:
                best = size + 1
                best_mask = current | bit
            candidates &= ~bit
        return

    expand(0, 0, (1 << n) - 1)
    return best_mask


def maximum_clique(g, cap: int = DEFAULT_EXACT_CAP) -> list[int]:
    """An exact maximum clique, as a sorted vertex list."""
    adj = adjacency_sets(g)
    n = len(adj)
    if n > cap:
        raise ExactCapExceeded(f"{n} vertices exceed the exact-solver cap {cap}")
    mask = _max_clique_masks(_bitmasks(adj), n)
    return [v for v in range(n) if mask >> v & 1]


def clique_number(g, cap: int = DEFAULT_EXACT_CAP) -> int:
    return len(maximum_clique(g, cap))


def independence_number(g, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact independence number via maximum clique on the complement."""
    adj = adjacency_sets(g)
    n = len(adj)
    if n > cap:
        raise ExactCapExceeded(f"{n} vertices exceed the exact-solver cap {cap}")
    full = (1 << n) - 1
    comp = [full & ~(1 << v) & ~sum(1 << w for w in adj[v]) for v in range(n)]
    return bin(_max_clique_masks(comp, n)).count("1")


def _dsatur_upper_bound(adj: list[set[int]]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    colors = [-1] * n
    for _ in range(n):
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] >= 0})
            key = (sat, len(adj[v]))
            if key > best_key:
                best_key, best_v = key, v
        used = {colors[u] for u in adj[best_v] if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[best_v] = c
    return max(colors) + 1


def _k_colorable(adj: list[set[int]], k: int) -> bool:
    n = len(adj)
    colors = [-1] * n

    def pick() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] >= 0})
            key = (sat, len(adj[v]))
            if key > best_key:
                best_key, best_v = key, v
        return best_v

    def rec(assigned: int, max_used: int) -> bool:
        if assigned == n:
            return True
        v = pick()
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        # allowing at most one fresh color breaks color-permutation symmetry
        for c in range(min(max_used + 1, k - 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            if rec(assigned + 1, max(max_used, c)):
                return True
            colors[v] = -1
        return False

    return rec(0, -1)


def chromatic_number(g, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    k-colorability search on the gap."""
    adj = adjacency_sets(g)
    n = len(adj)
    if n > cap:
        raise ExactCapExceeded(f"{n} vertices exceed the exact-solver cap {cap}")
    if n == 0:
        return 0
    lower = len(maximum_clique(adj, cap))
    upper = _dsatur_upper_bound(adj)
    for k in range(lower, upper):
        if _k_colorable(adj, k):
            return k
    return upper


# Planarity with verified certificates.


@dataclass(frozen=True)
class PlanarityCertificate:
    """Either a rotation system passing the Euler face check, or a verified
    subdivision of K5 or K33."""

    planar: bool
    rotation: tuple[tuple[int, ...], ...] | None = None
    witness_kind: str | None = None
    witness_edges: tuple[tuple[int, int], ...] | None = None
    witness_branch_vertices: tuple[int, ...] | None = None


def _count_faces(rotation: dict[int, list[int]], comp: list[int]) -> int:
    darts = {(u, v) for u in comp for v in rotation[u]}
    faces = 0
    seen: set[tuple[int, int]] = set()
    succ = {u: {v: rotation[u][(i + 1) % len(rotation[u])] for i, v in enumerate(rotation[u])}
            for u in comp}
    for dart in darts:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            u, v = cur
            cur = (v, succ[v][u])
    return faces


def verify_rotation_system(g, rotation: dict[int, list[int]]) -> bool:
    """Euler check V - E + F = 2 on every component of the rotation system.

    Components without edges count a single face.  Equivalently the whole
    graph satisfies V - E + F' = 1 + C once the shared outer face is counted
    only once.
    """
    adj = adjacency_sets(g)
    n = len(adj)
    if set(rotation) != set(range(n)):
        return False
    for v in range(n):
        if sorted(rotation[v]) != sorted(adj[v]):
            return False
    for comp in connected_components(adj):
        edges = sum(len(adj[v]) for v in comp) // 2
        faces = 1 if edges == 0 else _count_faces(rotation, comp)
        if len(comp) - edges + faces != 2:
            return False
    return True


def verify_kuratowski_witness(
    g, witness_edges: list[tuple[int, int]]
) -> tuple[str, tuple[int, ...]] | None:
    """Validate an edge set as a K5 or K33 subdivision inside the host graph.

    Checks: every witness edge exists in the host; branch vertices have degree
    4 (K5) or 3 (K33) in the witness with every other vertex of degree 2; the
    degree-2 chains contract to exactly the simple edge set of K5, or to a
    complete bipartite 3+3 graph.  Returns (kind, branch vertices) or None.
    """
    host = adjacency_sets(g)
    wadj: dict[int, set[int]] = {}
    for u, v in witness_edges:
        if u == v or v not in host[u]:
            return None
        wadj.setdefault(u, set()).add(v)
        wadj.setdefault(v, set()).add(u)
    if not wadj:
        return None
    degs = {v: len(s) for v, s in wadj.items()}
    branch = sorted(v for v, d in degs.items() if d >= 3)
    if any(d not in (2, 3, 4) for d in degs.values()):
        return None
    if len(branch) == 5 and all(degs[v] == 4 for v in branch):
        kind, want_paths = "K5", 10
    elif len(branch) == 6 and all(degs[v] == 3 for v in branch):
        kind, want_paths = "K33", 9
    else:
        return None

    # contract the degree-2 chains into branch-to-branch connections
    pairs = []
    used_darts = set()
    for b in branch:
        for first in sorted(wadj[b]):
            if (b, first) in used_darts:
                continue
            prev, cur = b, first
            used_darts.add((b, first))
            while cur not in branch:
                nxts = [w for w in wadj[cur] if w != prev]
                if len(nxts) != 1:
                    return None
                prev, cur = cur, nxts[0]
            used_darts.add((cur, prev))
            if cur == b:
                return None
            pairs.append((min(b, cur), max(b, cur)))
    if len(pairs) != want_paths:
        return None
    distinct = set(pairs)
    if len(distinct) != want_paths:
        return None

    if kind == "K5":
        if distinct != {(a, b) for a, b in combinations(branch, 2)}:
            return None
    else:
        cadj = {b: {v for u, v in distinct if u == b} | {u for u, v in distinct if v == b}
                for b in branch}
        side = {branch[0]}
        other = cadj[branch[0]]
        if len(other) != 3:
            return None
        side = set(branch) - other
        if len(side) != 3:
            return None
        for u in side:
            if cadj[u] != other:
                return None
        for u in other:
            if cadj[u] != side:
                return None
    return kind, tuple(branch)


def is_planar(g) -> PlanarityCertificate:
    """Planarity with a self-verified certificate either way."""
    adj = adjacency_sets(g)
    n = len(adj)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edge_list(adj))
    ok, embedding = nx.check_planarity(graph, counterexample=False)
    if ok:
        data = embedding.get_data()
        rotation = {v: list(data.get(v, [])) for v in range(n)}
        if not verify_rotation_system(adj, rotation):
            raise AssertionError("planar embedding failed the Euler face check")
        return PlanarityCertificate(
            planar=True,
            rotation=tuple(tuple(rotation[v]) for v in range(n)),
        )
    counter = nx.algorithms.planarity.get_counterexample(graph)
    witness = sorted((min(u, v), max(u, v)) for u, v in counter.edges())
    verdict = verify_kuratowski_witness(adj, witness)
    if verdict is None:
        raise AssertionError("nonplanarity witness failed subdivision validation")
    kind, branch = verdict
    return PlanarityCertificate(
        planar=False,
        witness_kind=kind,
        witness_edges=tuple(witness),
        witness_branch_vertices=branch,
    )


# Forbidden subgraphs and shapes.


def contains_complete_bipartite(g, a: int, b: int) -> bool:
    """Subgraph (not induced) K_{a,b} containment for a in {1, 2, 3}.

    K_{1,b} needs a vertex of degree >= b; K_{2,b} a vertex pair with >= b
    common neighbors; K_{3,b} a vertex triple with >= b common neighbors.
    """
    if a not in (1, 2, 3):
        raise ValueError(f"left part size must be 1, 2 or 3, got {a}")
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    adj = adjacency_sets(g)
    n = len(adj)
    if a == 1:
        return any(len(adj[v]) >= b for v in range(n))
    masks = _bitmasks(adj)
    if a == 2:
        return any(
            bin(masks[u] & masks[v]).count("1") >= b
            for u, v in combinations(range(n), 2)
        )
    return any(
        bin(masks[u] & masks[v] & masks[w]).count("1") >= b
        for u, v, w in combinations(range(n), 3)
    )


def contains_clique(g, k: int) -> bool:
    adj = adjacency_sets(g)
    if len(adj) < k:
        return False
    return len(maximum_clique(adj, cap=max(DEFAULT_EXACT_CAP, len(adj)))) >= k


def cyclomatic_number(g) -> int:
    adj = adjacency_sets(g)
    edges = sum(len(s) for s in adj) // 2
    return edges - len(adj) + len(connected_components(adj))


def is_unicyclic(g) -> bool:
    """Exactly one cycle overall: E - V + C = 1.  Connectivity not required."""
    return cyclomatic_number(g) == 1


@dataclass(frozen=True)
class ShapeDescriptor:
    """Most specific named pattern of the non-isolated core, plus the count of
    isolated vertices reported separately."""

    kind: str
    args: tuple[int, ...]
    isolated: int


def _induced(adj: list[set[int]], keep: list[int]) -> list[set[int]]:
    pos = {v: i for i, v in enumerate(keep)}
    return [{pos[w] for w in adj[v] if w in pos} for v in keep]


def _is_complete(adj: list[set[int]]) -> bool:
    n = len(adj)
    return n >= 2 and all(len(adj[v]) == n - 1 for v in range(n))


def _is_star(adj: list[set[int]]) -> tuple[bool, int]:
    n = len(adj)
    if n < 2:
        return False, 0
    degs = sorted(len(s) for s in adj)
    if degs[-1] == n - 1 and degs[:-1] == [1] * (n - 1):
        return True, n - 1
    return False, 0


def _is_path(adj: list[set[int]]) -> tuple[bool, int]:
    n = len(adj)
    if n < 2 or len(connected_components(adj)) != 1:
        return False, 0
    degs = sorted(len(s) for s in adj)
    if n == 2:
        return degs == [1, 1], 1
    if degs[:2] == [1, 1] and degs[2:] == [2] * (n - 2):
        return True, n - 1
    return False, 0


def _is_cycle(adj: list[set[int]]) -> tuple[bool, int]:
    n = len(adj)
    ok = n >= 3 and len(connected_components(adj)) == 1 and all(len(s) == 2 for s in adj)
    return ok, n


def _complete_bipartite_parts(adj: list[set[int]]) -> tuple[int, int] | None:
    n = len(adj)
    if n < 2 or len(connected_components(adj)) != 1 or not is_bipartite(adj):
        return None
    color = [-1] * n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
    left = [v for v in range(n) if color[v] == 0]
    right = [v for v in range(n) if color[v] == 1]
    if all(len(adj[v]) == len(right) for v in left) and all(
        len(adj[v]) == len(left) for v in right
    ):
        m, k = sorted((len(left), len(right)))
        return m, k
    return None


def classify_shape(g) -> ShapeDescriptor:
    """Classify the non-isolated core by the fixed precedence
    Null > Complete > Star > Path > CompleteBipartite > Cycle > Tree >
    Unicyclic > Other.

    CompleteBipartite is tested before Cycle so that a four-cycle core reads
    as K_{2,2}; it is the only graph matching both patterns.
    """
    adj = adjacency_sets(g)
    isolated = sum(1 for s in adj if not s)
    core_vertices = [v for v in range(len(adj)) if adj[v]]
    core = _induced(adj, core_vertices)
    n = len(core)
    if n == 0:
        return ShapeDescriptor("Null", (), isolated)
    if _is_complete(core):
        return ShapeDescriptor("Complete", (n,), isolated)
    ok, leaves = _is_star(core)
    if ok:
        return ShapeDescriptor("Star", (leaves,), isolated)
    ok, length = _is_path(core)
    if ok:
        return ShapeDescriptor("Path", (length,), isolated)
    parts = _complete_bipartite_parts(core)
    if parts is not None:
        return ShapeDescriptor("CompleteBipartite", parts, isolated)
    ok, length = _is_cycle(core)
    if ok:
        return ShapeDescriptor("Cycle", (length,), isolated)
    comps = connected_components(core)
    edges = sum(len(s) for s in core) // 2
    if len(comps) == 1 and edges == n - 1:
        return ShapeDescriptor("Tree", (), isolated)
    if len(comps) == 1 and edges == n:
        return ShapeDescriptor("Unicyclic", (), isolated)
    return ShapeDescriptor("Other", (), isolated)


def shape_predicates(g) -> dict[str, bool]:
    """Whole-graph named-shape booleans, independent of the core precedence.

    A graph with vertices but no edges is the null graph and counts as
    disconnected, so the single-vertex graph is neither complete nor a tree.
    """
    adj = adjacency_sets(g)
    n = len(adj)
    edges = sum(len(s) for s in adj) // 2
    comps = connected_components(adj)
    connected = len(comps) == 1 and edges >= 1
    acyclic = edges - n + len(comps) == 0
    parts = _complete_bipartite_parts(adj) if connected else None
    return {
        "null": edges == 0,
        "complete": _is_complete(adj),
        "star": _is_star(adj)[0],
        "path": _is_path(adj)[0],
        "cycle": _is_cycle(adj)[0],
        "complete_bipartite": parts is not None,
        "tree": connected and acyclic,
        "forest": acyclic,
        "unicyclic": edges - n + len(comps) == 1,
        "connected": connected,
    }


def small_graph_isomorphic(g1, g2, cap: int = ISO_CAP) -> bool:
    """Exact isomorphism test by backtracking with degree pruning."""
    a1 = adjacency_sets(g1)
    a2 = adjacency_sets(g2)
    n = len(a1)
    if n != len(a2):
        return False
    if n > cap:
        raise ExactCapExceeded(f"{n} vertices exceed the isomorphism cap {cap}")
    if sorted(len(s) for s in a1) != sorted(len(s) for s in a2):
        return False

    def signature(adj, v):
        return (len(adj[v]), tuple(sorted(len(adj[w]) for w in adj[v])))

    sig1 = {v: signature(a1, v) for v in range(n)}
    sig2 = {v: signature(a2, v) for v in range(n)}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    order = sorted(range(n), key=lambda v: (-len(a1[v]), v))
    mapping = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig1[v] != sig2[w]:
                continue
            ok = True
            for u in a1[v]:
                mu = mapping[u]
                if mu >= 0 and mu not in a2[w]:
                    ok = False
                    break
            if ok:
                for u in range(n):
                    mu = mapping[u]
                    if mu >= 0 and u not in a1[v] and mu in a2[w]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return rec(0)


@dataclass
class AnalysisReport:
    """All exact invariants of one graph, JSON-serializable."""

    source: str
    n_vertices: int
    n_edges: int
    vertex_orders: list[int] | None
    components: list[list[int]]
    is_connected: bool
    diameter: float
    component_diameters: list[int]
    girth: float
    alpha: int
    omega: int
    chi: int
    is_bipartite: bool
    planarity: PlanarityCertificate
    forbidden: dict[str, bool]
    shape: ShapeDescriptor
    predicates: dict[str, bool]

    def to_json_dict(self) -> dict:
        def enc(x):
            return "inf" if x == INFINITE else x

        planar = {"planar": self.planarity.planar}
        if self.planarity.planar:
            planar["rotation"] = {
                str(v): list(nbrs) for v, nbrs in enumerate(self.planarity.rotation)
            }
        else:
            planar["witness"] = {
                "kind": self.planarity.witness_kind,
                "branch_vertices": list(self.planarity.witness_branch_vertices),
                "edges": [list(e) for e in self.planarity.witness_edges],
            }
        return {
            "source": self.source,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "vertex_orders": self.vertex_orders,
            "components": self.components,
            "connected": self.is_connected,
            "diameter": enc(self.diameter),
            "component_diameters": self.component_diameters,
            "girth": enc(self.girth),
            "alpha": self.alpha,
            "omega": self.omega,
            "chi": self.chi,
            "bipartite": self.is_bipartite,
            "planarity": planar,
            "forbidden": dict(self.forbidden),
            "shape": {
                "core": self.shape.kind,
                "args": list(self.shape.args),
                "isolated": self.shape.isolated,
            },
            "predicates": dict(self.predicates),
        }


def analyze(g, exact_cap: int = DEFAULT_EXACT_CAP) -> AnalysisReport:
    """Compute every invariant exactly; no heuristics, caps raise instead."""
    adj = adjacency_sets(g)
    n = len(adj)
    edges = sum(len(s) for s in adj) // 2
    comps = connected_components(adj)
    comp_diams = [component_diameter(adj, c) for c in comps]
    preds = shape_predicates(adj)
    connected = preds["connected"]
    diam = comp_diams[0] if connected else INFINITE
    gb = girth(adj)
    alpha = independence_number(adj, exact_cap)
    omega = clique_number(adj, exact_cap)
    chi = chromatic_number(adj, exact_cap)
    forbidden = {}
    for pattern in FORBIDDEN_PATTERNS:
        if pattern == "K5":
            forbidden[pattern] = omega >= 5
        else:
            forbidden[pattern] = contains_complete_bipartite(
                adj, int(pattern[1]), int(pattern[2:])
            )
    orders = None
    if hasattr(g, "orders"):
        orders = g.orders()
    return AnalysisReport(
        source=getattr(g, "source", "graph"),
        n_vertices=n,
        n_edges=edges,
        vertex_orders=orders,
        components=comps,
        is_connected=connected,
        diameter=diam,
        component_diameters=comp_diams,
        girth=gb,
        alpha=alpha,
        omega=omega,
        chi=chi,
        is_bipartite=is_bipartite(adj),
        planarity=is_planar(adj),
        forbidden=forbidden,
        shape=classify_shape(adj),
        predicates=preds,
    )
