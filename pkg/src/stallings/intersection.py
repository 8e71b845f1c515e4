"""Intersections of subgroups and the Hanna Neumann family of rank bounds."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass

from .decomposition import find_sources_sinks, is_positively_generated
from .errors import AlphabetError
from .folding import (
    Folding,
    SubgroupPresentation,
    _finish,
    folding_of,
    neumann_majority_type,
    rank,
)
from .words import Alphabet, Word


def pullback(f: Folding, g: Folding) -> Folding:
    """Folding of the intersection: the product graph seen from the pair of bases."""
    if f.alphabet != g.alphabet:
        raise AlphabetError("foldings are over different alphabets")
    start = (f.base, g.base)
    seen = {start}
    triples = set()
    queue = deque([start])
    letters = f.alphabet.letters()
    while queue:
        u, v = queue.popleft()
        for x in letters:
            u2, v2 = f.step(u, x), g.step(v, x)
            if u2 is None or v2 is None:
                continue
            w = (u2, v2)
            triples.add(((u, v), w, x) if x > 0 else (w, (u, v), -x))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return _finish(seen, triples, start, f.alphabet)


def reduced_rank(r: int) -> int:
    return max(r - 1, 0)


@dataclass(frozen=True)
class HncReport:
    rank_h: int
    rank_k: int
    rank_meet: int
    reduced_rank_h: int
    reduced_rank_k: int
    reduced_rank_meet: int
    bound_hn_conjecture: int
    bound_hneumann: int
    bound_burns: int
    bound_tardos96: int | None
    verdict_hn_conjecture: bool
    verdict_hneumann: bool
    verdict_burns: bool
    verdict_tardos96: bool
    h_positively_generated: bool
    k_positively_generated: bool
    h_source_sink_free: bool
    k_source_sink_free: bool
    majority_type_h: int | None
    majority_type_k: int | None

    @property
    def proved_bounds_hold(self) -> bool:
        return self.verdict_hneumann and self.verdict_burns and self.verdict_tardos96

    @property
    def is_equality(self) -> bool:
        return self.reduced_rank_meet == self.bound_hn_conjecture

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "HncReport":
        return cls(**data)


def rank_bounds(rank_h: int, rank_k: int) -> dict:
    """Right-hand sides of the four inequalities for ``rank(H & K) - 1``.

    The Tardos bound ``2hk - h - k + 1`` (in reduced ranks) is only claimed
    when both ranks are at least 2; otherwise it is reported as ``None``.
    """
    h, k = reduced_rank(rank_h), reduced_rank(rank_k)
    return {
        "bound_hn_conjecture": h * k,
        "bound_hneumann": 2 * h * k,
        "bound_burns": 2 * h * k - min(h, k),
        "bound_tardos96": 2 * h * k - h - k + 1 if h >= 1 and k >= 1 else None,
    }


def _majority(f: Folding):
    return neumann_majority_type(f) if f.alphabet.rank == 2 else None


def hnc_report(fh: Folding, fk: Folding) -> HncReport:
    meet = pullback(fh, fk)
    rh, rk, rm = rank(fh), rank(fk), rank(meet)
    lhs = reduced_rank(rm)
    b = rank_bounds(rh, rk)
    return HncReport(
        rank_h=rh,
        rank_k=rk,
        rank_meet=rm,
        reduced_rank_h=reduced_rank(rh),
        reduced_rank_k=reduced_rank(rk),
        reduced_rank_meet=lhs,
        **b,
        verdict_hn_conjecture=lhs <= b["bound_hn_conjecture"],
        verdict_hneumann=lhs <= b["bound_hneumann"],
        verdict_burns=lhs <= b["bound_burns"],
        verdict_tardos96=b["bound_tardos96"] is None or lhs <= b["bound_tardos96"],
        h_positively_generated=is_positively_generated(fh),
        k_positively_generated=is_positively_generated(fk),
        h_source_sink_free=find_sources_sinks(fh).empty,
        k_source_sink_free=find_sources_sinks(fk).empty,
        majority_type_h=_majority(fh),
        majority_type_k=_majority(fk),
    )


def hnc_check(ph: SubgroupPresentation, pk: SubgroupPresentation) -> HncReport:
    if ph.alphabet != pk.alphabet:
        raise AlphabetError("presentations are over different alphabets")
    return hnc_report(folding_of(ph), folding_of(pk))


def embedding_image(i: int) -> Word:
    """Image ``a^i b a^i`` of the ``i``-th generator in F(a, b)."""
    return Word([1] * i + [2] + [1] * i, Alphabet(2))


def embed_to_rank2(p: SubgroupPresentation) -> SubgroupPresentation:
    """Rewrite generators via ``x_i -> a^i b a^i``; injective, keeps positivity."""
    out = []
    for w in p.generators:
        letters = []
        for x in w:
            img = list(embedding_image(abs(x)).letters)
            letters.extend(img if x > 0 else [-y for y in reversed(img)])
        out.append(Word(letters, Alphabet(2)))
    return SubgroupPresentation(Alphabet(2), tuple(out))
