"""Sources and sinks, trail decompositions of foldings, positive bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import AlphabetError, NoDecomposition, NotStronglyConnected, TrivialFolding
from .folding import Folding, SubgroupPresentation
from .graph import (
    TrailDecomposition,
    is_strongly_connected,
    prefix_union,
    scc,
    shortest_trail,
    strong_trail_decomposition,
    trail_end,
    trail_start,
    trail_vertices,
)
from .words import Alphabet, Word, concat, invert


@dataclass(frozen=True)
class SourceSinkReport:
    sources: tuple
    sinks: tuple

    def __bool__(self):
        # truthy when there is something to report
        return bool(self.sources or self.sinks)

    @property
    def empty(self) -> bool:
        return not self


def find_sources_sinks(f: Folding) -> SourceSinkReport:
    """Vertices that are singleton components of degree 2 with both edges out (in)."""
    g = f.graph
    parts = scc(g)
    sources, sinks = [], []
    for v in g.vertices:
        if len(parts.component_of(v)) != 1 or g.degree(v) != 2:
            continue
        n_out, n_in = len(g.out_edges(v)), len(g.in_edges(v))
        if n_out == 2 and n_in == 0:
            sources.append(v)
        elif n_in == 2 and n_out == 0:
            sinks.append(v)
    return SourceSinkReport(tuple(sources), tuple(sinks))


def is_source_sink_free(f: Folding) -> bool:
    return find_sources_sinks(f).empty


def trail_decomposition(f: Folding) -> TrailDecomposition:
    """A directed trail decomposition of the whole folding.

    Strongly connected pieces (components with a cycle) are decomposed first,
    each grown from its own root.  Every remaining edge ``u -> v`` is then
    extended backwards from ``u`` and forwards from ``v`` until both ends land
    on covered vertices, and the resulting trail is appended.

    Raises :class:`NoDecomposition` when none exists: when a source or sink is
    present, and also when some vertex has degree 1 (only the base of a core
    graph can), since no trail can start or end at such a vertex.
    """
    g = f.graph
    if not g.edges:
        raise TrivialFolding("the trivial folding has no edges to decompose")
    report = find_sources_sinks(f)
    if report:
        parts = [f"source at vertex {v}" for v in report.sources]
        parts += [f"sink at vertex {v}" for v in report.sinks]
        raise NoDecomposition("; ".join(parts), report.sources, report.sinks)
    leaves = [v for v in g.vertices if g.degree(v) == 1]
    if leaves:
        raise NoDecomposition(f"vertex {leaves[0]} has degree 1")

    parts = scc(g)
    cyclic = [c for c in parts.components
              if len(c) > 1 or any(e.is_loop() for e in g.out_edges(next(iter(c))))]
    cyclic.sort(key=lambda c: (f.base not in c, min(c)))
    if not cyclic:
        raise AssertionError("source/sink-free core folding without a directed cycle")

    trails = []
    for comp in cyclic:
        sub = g.induced(comp)
        root = f.base if f.base in comp else min(comp)
        trails.extend(strong_trail_decomposition(sub, root).trails)

    covered_v = set()
    covered_e = set()
    for p in trails:
        covered_v |= trail_vertices(g, p)
        covered_e.update(p)

    for e in g.edges:
        if e.id in covered_e:
            continue
        back = []
        u = e.tail
        seen = {u}
        while u not in covered_v:
            step = min(g.in_edges(u), key=lambda x: x.id)
            back.append(step.id)
            u = step.tail
            if u in seen:
                raise AssertionError("backward walk closed a cycle outside the cyclic components")
            seen.add(u)
        fwd = []
        v = e.head
        seen = {v}
        while v not in covered_v:
            step = min(g.out_edges(v), key=lambda x: x.id)
            fwd.append(step.id)
            v = step.head
            if v in seen:
                raise AssertionError("forward walk closed a cycle outside the cyclic components")
            seen.add(v)
        p = tuple(reversed(back)) + (e.id,) + tuple(fwd)
        assert not covered_e.intersection(p)
        trails.append(p)
        covered_v |= trail_vertices(g, p)
        covered_e.update(p)

    return TrailDecomposition(tuple(trails), trail_start(g, trails[0]))


def has_trail_decomposition(f: Folding) -> bool:
    try:
        trail_decomposition(f)
    except NoDecomposition:
        return False
    return True


def trail_word(f: Folding, trail) -> Word:
    return Word([f.graph.edge(eid).label for eid in trail], f.alphabet)


def positive_basis(f: Folding) -> list[Word]:
    """A free basis of positive words, for a strongly connected folding.

    ``h_0`` is read along the first (closed) trail of a strong decomposition
    rooted at the base; each later trail ``P_i`` from ``x`` to ``y`` is
    completed to ``s_i P_i t_i`` with ``s_i`` (``t_i``) a shortest directed
    path from the base to ``x`` (from ``y`` to the base) inside the earlier
    trails.
    """
    g = f.graph
    if not is_strongly_connected(g):
        raise NotStronglyConnected("folding is not strongly connected; no positive basis")
    if not g.edges:
        return []
    d = strong_trail_decomposition(g, f.base)
    basis = [trail_word(f, d[0])]
    for i in range(1, len(d)):
        before = prefix_union(g, d, i - 1)
        s = shortest_trail(before, f.base, trail_start(g, d[i]))
        t = shortest_trail(before, trail_end(g, d[i]), f.base)
        assert s is not None and t is not None
        basis.append(trail_word(f, s + d[i] + t))
    return basis


def is_positively_generated(f: Folding) -> bool:
    return is_strongly_connected(f.graph)


def _image_table(images: Mapping, alphabet: Alphabet) -> dict[int, Word]:
    table = {}
    for key, img in images.items():
        x = alphabet.letter(key) if isinstance(key, str) else alphabet.check(key)
        if x < 0:
            x, img = -x, invert(img)
        if not isinstance(img, Word):
            raise TypeError(f"image of {key!r} must be a Word")
        table[x] = img
    return table


def apply_automorphism(p: SubgroupPresentation, images: Mapping) -> SubgroupPresentation:
    """Substitute ``images[x]`` for every generator letter ``x`` and reduce.

    ``images`` maps letters (``'a'`` or ``1``) to words, possibly over a
    different alphabet.  Whether the map is invertible is not checked.
    """
    table = _image_table(images, p.alphabet)
    missing = [x for x in p.alphabet.positive_letters() if x not in table]
    if missing:
        raise ValueError(f"no image for letter(s) {', '.join(p.alphabet.name(x) for x in missing)}")
    targets = {w.alphabet for w in table.values()}
    if len(targets) != 1:
        raise AlphabetError("images must all lie over one alphabet")
    target = targets.pop()
    new = []
    for w in p.generators:
        out = Word.identity(target)
        for x in w:
            out = concat(out, table[x] if x > 0 else invert(table[-x]))
        new.append(out)
    return SubgroupPresentation(target, tuple(new))
