"""Edge-labelled directed multigraphs, strong connectivity and trail decompositions.

Vertices are hashable, orderable ids (ints in practice).  Edges carry a unique
integer id, a tail, a head and a positive letter index as label.  Loops and
parallel edges are allowed.  A trail is a tuple of edge ids.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import NotStronglyConnected
from .words import Alphabet

Vertex = Hashable


@dataclass(frozen=True, order=True)
class Edge:
    id: int
    tail: Vertex
    head: Vertex
    label: int

    def is_loop(self) -> bool:
        return self.tail == self.head


class LabeledDigraph:
    """Immutable edge-labelled directed multigraph."""

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Edge]):
        self.vertices: tuple = tuple(sorted(set(vertices)))
        edges = tuple(sorted(edges, key=lambda e: e.id))
        ids = [e.id for e in edges]
        if len(set(ids)) != len(ids):
            raise ValueError("edge ids must be unique")
        vset = set(self.vertices)
        for e in edges:
            if e.tail not in vset or e.head not in vset:
                raise ValueError(f"edge {e.id} has an endpoint outside the vertex set")
        self.edges: tuple[Edge, ...] = edges
        self._by_id = {e.id: e for e in edges}
        self._out: dict = {v: [] for v in self.vertices}
        self._in: dict = {v: [] for v in self.vertices}
        for e in edges:
            self._out[e.tail].append(e)
            self._in[e.head].append(e)

    @classmethod
    def from_triples(cls, triples: Iterable[tuple], vertices: Iterable[Vertex] = ()) -> "LabeledDigraph":
        """Build from ``(tail, head, label)`` triples; edge ids follow input order."""
        edges = [Edge(i, t, h, x) for i, (t, h, x) in enumerate(triples)]
        vs = set(vertices)
        for e in edges:
            vs.update((e.tail, e.head))
        return cls(vs, edges)

    def edge(self, eid: int) -> Edge:
        return self._by_id[eid]

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def out_edges(self, v: Vertex) -> list[Edge]:
        return self._out[v]

    def in_edges(self, v: Vertex) -> list[Edge]:
        return self._in[v]

    def degree(self, v: Vertex) -> int:
        """Undirected degree; a loop contributes 2."""
        return len(self._out[v]) + len(self._in[v])

    def successors(self, v: Vertex) -> list[Vertex]:
        return [e.head for e in self._out[v]]

    def subgraph(self, edge_ids: Iterable[int], vertices: Iterable[Vertex] = ()) -> "LabeledDigraph":
        """Subgraph on the given edges plus their endpoints (and extra vertices)."""
        es = [self._by_id[i] for i in edge_ids]
        vs = set(vertices)
        for e in es:
            vs.update((e.tail, e.head))
        return LabeledDigraph(vs, es)

    def induced(self, vertices: Iterable[Vertex]) -> "LabeledDigraph":
        vs = set(vertices)
        return LabeledDigraph(vs, [e for e in self.edges if e.tail in vs and e.head in vs])

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, LabeledDigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"LabeledDigraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


# -- trails ------------------------------------------------------------------

Trail = tuple  # tuple of edge ids


def trail_start(g: LabeledDigraph, trail: Sequence[int]) -> Vertex:
    return g.edge(trail[0]).tail


def trail_end(g: LabeledDigraph, trail: Sequence[int]) -> Vertex:
    return g.edge(trail[-1]).head


def trail_vertices(g: LabeledDigraph, trail: Sequence[int]) -> set:
    vs = set()
    for eid in trail:
        e = g.edge(eid)
        vs.update((e.tail, e.head))
    return vs


def is_walk(g: LabeledDigraph, trail: Sequence[int]) -> bool:
    if not trail or not all(g.has_edge(i) for i in trail):
        return False
    return all(g.edge(a).head == g.edge(b).tail for a, b in zip(trail, trail[1:]))


def is_trail(g: LabeledDigraph, trail: Sequence[int]) -> bool:
    """Non-empty chained sequence of distinct edges."""
    return is_walk(g, trail) and len(set(trail)) == len(trail)


def is_self_avoiding(g: LabeledDigraph, trail: Sequence[int]) -> bool:
    """Trail whose edges have pairwise distinct tails and pairwise distinct heads."""
    if not is_trail(g, trail):
        return False
    tails = [g.edge(i).tail for i in trail]
    heads = [g.edge(i).head for i in trail]
    return len(set(tails)) == len(tails) and len(set(heads)) == len(heads)


def make_self_avoiding(g: LabeledDigraph, trail: Sequence[int]) -> Trail:
    """Excise closed sub-walks so no vertex is left twice or entered twice.

    Accepts any walk (repeated edges included).  Start and end are kept, and
    a walk that returns to its start stays closed.
    """
    if not is_walk(g, trail):
        raise ValueError("not a walk in the graph")
    start = trail_start(g, trail)
    end = trail_end(g, trail)
    kept: list[int] = []
    position = {start: 0}  # vertex -> len(kept) when we were last there
    for k, eid in enumerate(trail):
        head = g.edge(eid).head
        kept.append(eid)
        if k == len(trail) - 1 and head == start:
            break
        if head in position:
            cut = position[head]
            for dropped in kept[cut:]:
                position.pop(g.edge(dropped).head, None)
            del kept[cut:]
            position[head] = cut
        else:
            position[head] = len(kept)
    if not kept:
        # only possible when the whole walk was a closed walk erased to nothing,
        # which the final-step guard above rules out
        raise AssertionError("loop erasure emptied a walk")
    assert trail_start(g, kept) == start and trail_end(g, kept) == end
    return tuple(kept)


# -- strong connectivity -----------------------------------------------------


@dataclass(frozen=True)
class SccPartition:
    graph: LabeledDigraph
    components: tuple  # tuple of frozensets, ordered by smallest member
    index: dict = field(compare=False, repr=False)

    def component_of(self, v: Vertex) -> frozenset:
        return self.components[self.index[v]]

    def same(self, u: Vertex, v: Vertex) -> bool:
        return self.index[u] == self.index[v]

    def subgraph(self, i: int) -> LabeledDigraph:
        return self.graph.induced(self.components[i])

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def scc(g: LabeledDigraph) -> SccPartition:
    """Strongly connected components (iterative Tarjan)."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps: list[frozenset] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.successors(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))

    comps.sort(key=min)
    where = {v: i for i, c in enumerate(comps) for v in c}
    return SccPartition(g, tuple(comps), where)


def is_strongly_connected(g: LabeledDigraph) -> bool:
    return len(scc(g)) <= 1


def shortest_trail(g: LabeledDigraph, source: Vertex, target: Vertex) -> Trail | None:
    """Breadth-first shortest directed path, lowest edge ids preferred.

    Returns ``()`` when ``source == target`` and ``None`` when unreachable.
    """
    if source == target:
        return ()
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for e in g.out_edges(v):
            if e.head in parent:
                continue
            parent[e.head] = e
            if e.head == target:
                path = []
                x = target
                while parent[x] is not None:
                    path.append(parent[x].id)
                    x = parent[x].tail
                return tuple(reversed(path))
            queue.append(e.head)
    return None


# -- trail decompositions ----------------------------------------------------


@dataclass(frozen=True)
class TrailDecomposition:
    """Ordered trails ``(P_0, ..., P_n)`` with the base vertex of ``P_0``."""

    trails: tuple
    base: Vertex

    def __len__(self):
        return len(self.trails)

    def __iter__(self):
        return iter(self.trails)

    def __getitem__(self, i):
        return self.trails[i]

    def to_json(self) -> str:
        return json.dumps({"base": self.base, "trails": [list(t) for t in self.trails]})

    @classmethod
    def from_json(cls, text: str) -> "TrailDecomposition":
        data = json.loads(text)
        return cls(tuple(tuple(t) for t in data["trails"]), data["base"])


def strong_trail_decomposition(g: LabeledDigraph, base: Vertex) -> TrailDecomposition:
    """Strong decomposition into self-avoiding trails, grown from ``base``.

    Phase one attaches, for the lowest uncovered vertex ``v``, the stretch of a
    base-to-``v``-to-base round trip that runs outside the covered part; the
    stretch is loop-erased so it stays self-avoiding with the same endpoints.
    Phase two adds each remaining edge as a one-edge trail.  Every prefix of
    the result is itself strongly connected.
    """
    if base not in g.vertices:
        raise ValueError(f"base {base!r} is not a vertex")
    if not is_strongly_connected(g):
        raise NotStronglyConnected("graph is not strongly connected")

    covered_v = {base}
    covered_e: set[int] = set()
    trails: list[Trail] = []

    while len(covered_v) < len(g.vertices):
        v = min(x for x in g.vertices if x not in covered_v)
        s = shortest_trail(g, base, v)
        t = shortest_trail(g, v, base)
        # last edge of s leaving the covered part, first edge of t re-entering it
        j = max(k for k, eid in enumerate(s) if g.edge(eid).tail in covered_v)
        k = min(k for k, eid in enumerate(t) if g.edge(eid).head in covered_v)
        walk = s[j:] + t[: k + 1]
        p = make_self_avoiding(g, walk)
        assert not covered_e.intersection(p)
        trails.append(p)
        covered_e.update(p)
        covered_v |= trail_vertices(g, p)

    for e in g.edges:
        if e.id not in covered_e:
            trails.append((e.id,))
            covered_e.add(e.id)

    return TrailDecomposition(tuple(trails), base)


def verify_decomposition(g: LabeledDigraph, d: TrailDecomposition, strong: bool = False) -> bool:
    """Check the trail decomposition conditions literally.

    1. the trails partition the edge set;
    2. ``P_0`` is closed, at ``d.base``;
    3. each later trail either meets its predecessors exactly in its two
       endpoints, or is disjoint from them and closed.
    With ``strong=True`` the disjoint case is forbidden.  Isolated vertices
    are not covered by any trail, so graphs having them are rejected.

    The edgeless single-vertex graph is decomposed by the empty sequence.
    """
    trails = list(d.trails)
    if not trails:
        return not g.edges and len(g.vertices) <= 1 and (d.base in g.vertices or not g.vertices)
    if not all(is_trail(g, p) for p in trails):
        return False
    used = [eid for p in trails for eid in p]
    if len(used) != len(set(used)) or set(used) != {e.id for e in g.edges}:
        return False
    if trail_start(g, trails[0]) != trail_end(g, trails[0]):
        return False
    if trail_start(g, trails[0]) != d.base:
        return False
    seen = trail_vertices(g, trails[0])
    for p in trails[1:]:
        vp = trail_vertices(g, p)
        meet = vp & seen
        ends = {trail_start(g, p), trail_end(g, p)}
        if meet:
            if meet != ends:
                return False
        else:
            if strong or len(ends) != 1:
                return False
        seen |= vp
    # every vertex must lie on some trail
    return seen == set(g.vertices)


def prefix_union(g: LabeledDigraph, d: TrailDecomposition, i: int) -> LabeledDigraph:
    """Subgraph formed by the edges of ``P_0 .. P_i``."""
    if not 0 <= i < len(d.trails):
        raise IndexError(f"trail index {i} out of range for {len(d.trails)} trails")
    return g.subgraph(eid for p in d.trails[: i + 1] for eid in p)


def trail_word_letters(g: LabeledDigraph, trail: Sequence[int]) -> list[int]:
    return [g.edge(eid).label for eid in trail]


# -- export ------------------------------------------------------------------


def to_dot(g: LabeledDigraph, base: Vertex | None = None, alphabet: Alphabet | None = None,
           name: str = "G") -> str:
    """Graphviz source; vertices and edges in id order so output diffs cleanly."""
    alphabet = alphabet or Alphabet(max([e.label for e in g.edges], default=1))
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        shape = "doublecircle" if v == base else "circle"
        lines.append(f'  "{v}" [shape={shape}];')
    for e in g.edges:
        lines.append(f'  "{e.tail}" -> "{e.head}" [label="{alphabet.name(e.label)}", id="e{e.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
