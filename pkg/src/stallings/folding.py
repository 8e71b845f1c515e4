"""Stallings foldings of finitely generated subgroups of free groups."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import ClassCountUnavailable, EmptyPresentation, ParseError
from .graph import Edge, LabeledDigraph, to_dot
from .words import Alphabet, Word, concat, invert


@dataclass(frozen=True)
class SubgroupPresentation:
    alphabet: Alphabet
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for w in gens:
            if not isinstance(w, Word) or w.alphabet != self.alphabet:
                raise ValueError(f"generator {w!r} is not a word over rank {self.alphabet.rank}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_strings(cls, words: Iterable[str], rank: int = 2) -> "SubgroupPresentation":
        alphabet = Alphabet(rank)
        return cls(alphabet, tuple(Word.parse(w, alphabet) for w in words))

    @property
    def rank(self) -> int:
        return self.alphabet.rank

    def nonempty_generators(self) -> tuple:
        return tuple(w for w in self.generators if w)

    def to_text(self) -> str:
        lines = [f"alphabet {self.alphabet.rank}"]
        lines.extend(str(w) for w in self.generators)
        return "\n".join(lines) + "\n"

    def __str__(self):
        return "<" + ", ".join(str(w) for w in self.generators) + ">"


def parse_subgroup_file(text: str) -> SubgroupPresentation:
    """Parse the line format: ``alphabet <rank>`` then one word per line.

    ``#`` starts a comment; blank lines are skipped; ``1`` is the empty word.
    """
    alphabet = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        if alphabet is None:
            parts = stripped.split()
            if len(parts) != 2 or parts[0] != "alphabet":
                raise ParseError("expected 'alphabet <rank>'", lineno, col0)
            try:
                alphabet = Alphabet(int(parts[1]))
            except ValueError as exc:
                raise ParseError(f"bad alphabet rank {parts[1]!r}: {exc}", lineno,
                                 col0 + line.strip().index(parts[1])) from None
            continue
        try:
            words.append(Word.parse(stripped, alphabet))
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[-1], lineno, col0 + (exc.column or 1) - 1) from None
    if alphabet is None:
        raise ParseError("missing 'alphabet <rank>' header", 1, 1)
    return SubgroupPresentation(alphabet, tuple(words))


@dataclass(frozen=True, eq=False)
class Folding:
    """A core, deterministic and co-deterministic labelled graph with a base.

    Foldings built by :func:`fold` are numbered canonically: vertices ``1..V``
    in breadth-first order from the base (base is ``1``), edges ``1..E``
    sorted by ``(tail, label)``.
    """

    graph: LabeledDigraph
    base: int
    alphabet: Alphabet

    def __post_init__(self):
        # adjacency tables: (vertex, label) -> (edge, neighbour)
        out, inc = {}, {}
        for e in self.graph.edges:
            if (e.tail, e.label) in out or (e.head, e.label) in inc:
                raise ValueError("graph is not deterministic/co-deterministic")
            out[(e.tail, e.label)] = e
            inc[(e.head, e.label)] = e
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def edges(self):
        return self.graph.edges

    def step(self, v: int, letter: int):
        """Vertex reached from ``v`` reading ``letter``, or ``None``."""
        if letter > 0:
            e = self._out.get((v, letter))
            return None if e is None else e.head
        e = self._in.get((v, -letter))
        return None if e is None else e.tail

    def is_trivial(self) -> bool:
        return not self.graph.edges

    def to_text(self) -> str:
        return canonical_text(self)

    def to_dot(self) -> str:
        return to_dot(self.graph, self.base, self.alphabet, name="folding")

    def __eq__(self, other):
        if not isinstance(other, Folding):
            return NotImplemented
        return canonical_text(self) == canonical_text(other)

    def __hash__(self):
        return hash(canonical_text(self))

    def __repr__(self):
        return f"Folding(|V|={len(self.vertices)}, |E|={len(self.edges)}, rank={rank(self)})"


# -- construction ------------------------------------------------------------


def build_rose(p: SubgroupPresentation) -> tuple[LabeledDigraph, int]:
    """One labelled cycle per non-empty generator, all through the base ``0``."""
    gens = p.nonempty_generators()
    if not gens:
        raise EmptyPresentation("presentation has no non-trivial generators")
    base = 0
    triples = []
    next_vertex = 1
    for w in gens:
        path = [base]
        for _ in range(len(w) - 1):
            path.append(next_vertex)
            next_vertex += 1
        path.append(base)
        for x, u, v in zip(w, path, path[1:]):
            triples.append((u, v, x) if x > 0 else (v, u, -x))
    return LabeledDigraph.from_triples(triples, [base]), base


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        root = x
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while x != root:
            nxt = self.parent.get(x, x)
            self.parent[x] = root
            x = nxt
        return root

    def union(self, a, b, keep=None):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb == keep:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def fold(g: LabeledDigraph, base, rank: int | Alphabet | None = None,
         rng: random.Random | None = None) -> Folding:
    """Fold ``g`` at ``base``, trim to the core and number canonically.

    Two edges are identified when they carry the same label and share a tail
    or a head.  ``rng`` shuffles the order in which candidate pairs are
    scanned; the result does not depend on it.
    """
    if base not in g.vertices:
        raise ValueError(f"base {base!r} is not a vertex")
    if rank is None:
        rank = max([e.label for e in g.edges], default=1)
    alphabet = rank if isinstance(rank, Alphabet) else Alphabet(rank)

    uf = _UnionFind()
    edges = [(e.tail, e.head, e.label) for e in g.edges]
    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(edges)
        out_seen, in_seen = {}, {}
        for t, h, x in edges:
            t, h = uf.find(t), uf.find(h)
            other = out_seen.setdefault((t, x), h)
            if other != h:
                uf.union(other, h, keep=uf.find(base))
                changed = True
                break
            other = in_seen.setdefault((h, x), t)
            if other != t:
                uf.union(other, t, keep=uf.find(base))
                changed = True
                break
    folded = {(uf.find(t), uf.find(h), x) for t, h, x in edges}
    vertices = {uf.find(v) for v in g.vertices}
    root = uf.find(base)
    return _finish(vertices, folded, root, alphabet)


def _trim_core(vertices: set, triples: set, base) -> tuple[set, set]:
    """Repeatedly delete non-base vertices of degree at most one."""
    vertices = set(vertices)
    triples = set(triples)
    degree = {v: 0 for v in vertices}
    for t, h, _ in triples:
        degree[t] += 1
        degree[h] += 1
    incident: dict = {v: set() for v in vertices}
    for tr in triples:
        incident[tr[0]].add(tr)
        incident[tr[1]].add(tr)
    queue = deque(v for v in vertices if v != base and degree[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in vertices:
            continue
        vertices.discard(v)
        for tr in list(incident[v]):
            triples.discard(tr)
            for w in (tr[0], tr[1]):
                incident[w].discard(tr)
                if w != v and w in vertices:
                    degree[w] -= 1
                    if w != base and degree[w] <= 1:
                        queue.append(w)
    return vertices, triples


def _component(vertices: set, triples: set, base) -> tuple[set, set]:
    nbrs: dict = {v: [] for v in vertices}
    for t, h, _ in triples:
        nbrs[t].append(h)
        nbrs[h].append(t)
    seen = {base}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen, {tr for tr in triples if tr[0] in seen}


def _finish(vertices: set, triples: set, base, alphabet: Alphabet) -> Folding:
    vertices, triples = _component(vertices, triples, base)
    vertices, triples = _trim_core(vertices, triples, base)
    return _canonical(vertices, triples, base, alphabet)


def _canonical(vertices: set, triples: set, base, alphabet: Alphabet) -> Folding:
    out = {(t, x): h for t, h, x in triples}
    inc = {(h, x): t for t, h, x in triples}
    order = {base: 1}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for x in alphabet.positive_letters():
            for w in (out.get((v, x)), inc.get((v, x))):
                if w is not None and w not in order:
                    order[w] = len(order) + 1
                    queue.append(w)
    assert len(order) == len(vertices)
    renamed = sorted((order[t], x, order[h]) for t, h, x in triples)
    edges = [Edge(i, t, h, x) for i, (t, x, h) in enumerate(renamed, start=1)]
    return Folding(LabeledDigraph(order.values(), edges), 1, alphabet)


def folding_from_edges(triples: Iterable[tuple], base, rank: int = 2) -> Folding:
    """Canonical folding from ``(tail, head, label)`` triples of an already folded graph."""
    triples = set(triples)
    vertices = {base}
    for t, h, _ in triples:
        vertices.update((t, h))
    return _finish(vertices, triples, base, Alphabet(rank))


def trivial_folding(alphabet: Alphabet | int = 2) -> Folding:
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    return Folding(LabeledDigraph([1], []), 1, alphabet)


def folding_of(p: SubgroupPresentation | Iterable[str], rank: int = 2,
               rng: random.Random | None = None) -> Folding:
    """Folding of the subgroup generated by ``p`` (a presentation or word strings)."""
    if not isinstance(p, SubgroupPresentation):
        p = SubgroupPresentation.from_strings(p, rank)
    if not p.nonempty_generators():
        return trivial_folding(p.alphabet)
    g, base = build_rose(p)
    return fold(g, base, p.alphabet, rng=rng)


# -- queries -----------------------------------------------------------------


def membership(f: Folding, w: Word) -> bool:
    """Does ``w`` label a closed walk at the base?"""
    if w.alphabet != f.alphabet:
        raise ValueError("word and folding use different alphabets")
    v = f.base
    for x in w:
        v = f.step(v, x)
        if v is None:
            return False
    return v == f.base


def rank(f: Folding) -> int:
    return len(f.edges) - len(f.vertices) + 1


def _spanning_tree(f: Folding) -> tuple[dict, set]:
    """Breadth-first spanning tree; returns base-to-vertex words and tree edge ids."""
    prefix = {f.base: Word.identity(f.alphabet)}
    tree = set()
    queue = deque([f.base])
    g = f.graph
    while queue:
        v = queue.popleft()
        steps = [(e, e.head, e.label) for e in g.out_edges(v)]
        steps += [(e, e.tail, -e.label) for e in g.in_edges(v)]
        steps.sort(key=lambda s: s[0].id)
        for e, w, x in steps:
            if w not in prefix:
                prefix[w] = concat(prefix[v], Word([x], f.alphabet))
                tree.add(e.id)
                queue.append(w)
    return prefix, tree


def spanning_tree_basis(f: Folding) -> list[Word]:
    """Free basis read off a breadth-first spanning tree, one word per non-tree edge."""
    prefix, tree = _spanning_tree(f)
    basis = []
    for e in f.edges:
        if e.id in tree:
            continue
        w = concat(concat(prefix[e.tail], Word([e.label], f.alphabet)), invert(prefix[e.head]))
        basis.append(w)
    return basis


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex counts by undirected degree and by degree-3 class.

    Class of a degree-3 vertex, by the single missing slot: ``c1`` no
    incoming ``a``, ``c3`` no incoming ``b`` (both one in, two out); ``c2``
    no outgoing ``a``, ``c4`` no outgoing ``b`` (both two in, one out).
    """

    d1: int
    d2: int
    d3: int
    d4: int
    c1: int
    c2: int
    c3: int
    c4: int

    @property
    def classes(self) -> tuple[int, int, int, int]:
        return (self.c1, self.c2, self.c3, self.c4)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("d1", "d2", "d3", "d4", "c1", "c2", "c3", "c4")}


def degree_counts(f: Folding) -> dict[int, int]:
    """Histogram of undirected degrees (any alphabet rank)."""
    counts: dict[int, int] = {}
    for v in f.vertices:
        d = f.graph.degree(v)
        counts[d] = counts.get(d, 0) + 1
    return counts


def vertex_class(f: Folding, v: int) -> int | None:
    """Degree-3 class (1..4) of ``v``, ``None`` for other degrees."""
    if f.alphabet.rank != 2:
        raise ClassCountUnavailable(f"class counts need rank 2, alphabet has rank {f.alphabet.rank}")
    missing = [(x, d) for x in (1, 2) for d in ("in", "out")
               if f.step(v, -x if d == "in" else x) is None]
    if len(missing) != 1:
        return None
    return {(1, "in"): 1, (1, "out"): 2, (2, "in"): 3, (2, "out"): 4}[missing[0]]


def degree_profile(f: Folding) -> DegreeProfile:
    if f.alphabet.rank != 2:
        raise ClassCountUnavailable(f"class counts need rank 2, alphabet has rank {f.alphabet.rank}")
    hist = degree_counts(f)
    classes = [0, 0, 0, 0]
    for v in f.vertices:
        c = vertex_class(f, v)
        if c is not None:
            classes[c - 1] += 1
    return DegreeProfile(hist.get(1, 0), hist.get(2, 0), hist.get(3, 0), hist.get(4, 0), *classes)


def is_3_balanced(f: Folding) -> bool:
    p = degree_profile(f)
    return p.c1 + p.c3 == p.c2 + p.c4


def neumann_majority_type(f: Folding) -> int | None:
    """Class ``i`` holding more than half the degree-3 vertices, if any."""
    p = degree_profile(f)
    for i, c in enumerate(p.classes, start=1):
        if 2 * c > p.d3:
            return i
    return None


def foldings_isomorphic(f: Folding, g: Folding) -> bool:
    """Base- and label-preserving isomorphism, by walking both graphs in step."""
    if f.alphabet != g.alphabet:
        return False
    if len(f.vertices) != len(g.vertices) or len(f.edges) != len(g.edges):
        return False
    match = {f.base: g.base}
    used = {g.base}
    queue = deque([f.base])
    letters = f.alphabet.letters()
    while queue:
        u = queue.popleft()
        v = match[u]
        for x in letters:
            u2, v2 = f.step(u, x), g.step(v, x)
            if (u2 is None) != (v2 is None):
                return False
            if u2 is None:
                continue
            if u2 in match:
                if match[u2] != v2:
                    return False
            else:
                if v2 in used:
                    return False
                match[u2] = v2
                used.add(v2)
                queue.append(u2)
    return len(match) == len(f.vertices)


def canonical_text(f: Folding) -> str:
    """Diff-stable text: header lines, then ``tail label head`` per edge."""
    lines = [
        f"alphabet {f.alphabet.rank}",
        f"vertices {len(f.vertices)}",
        f"edges {len(f.edges)}",
        f"base {f.base}",
    ]
    for e in f.edges:
        lines.append(f"{e.tail} {f.alphabet.name(e.label)} {e.head}")
    return "\n".join(lines) + "\n"


def parse_canonical_text(text: str) -> Folding:
    header = {}
    triples = []
    alphabet = None
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] in ("alphabet", "vertices", "edges", "base"):
            header[parts[0]] = int(parts[1])
            if parts[0] == "alphabet":
                alphabet = Alphabet(header["alphabet"])
            continue
        t, name, h = parts
        triples.append((int(t), int(h), alphabet.letter(name)))
    vertices = set(range(1, header["vertices"] + 1))
    return _canonical(vertices, set(triples), header["base"], alphabet)
