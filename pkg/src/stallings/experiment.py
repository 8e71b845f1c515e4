"""Seeded random presentations and the property-check harness.

Every sample draws from its own ``random.Random`` seeded by ``(seed, index)``,
so results do not depend on evaluation order.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field

from .decomposition import (
    find_sources_sinks,
    has_trail_decomposition,
    is_positively_generated,
    positive_basis,
)
from .folding import (
    SubgroupPresentation,
    folding_of,
    foldings_isomorphic,
    is_3_balanced,
    membership,
    rank,
)
from .graph import (
    is_self_avoiding,
    is_strongly_connected,
    prefix_union,
    strong_trail_decomposition,
    verify_decomposition,
)
from .intersection import embed_to_rank2, hnc_check
from .words import Alphabet, Word

DISTRIBUTIONS = ("positive-words", "reduced-words")


def random_reduced_word(rng: random.Random, alphabet: Alphabet, length: int) -> Word:
    """Uniform among letters that do not cancel the previous one."""
    letters = alphabet.letters()
    out = []
    for _ in range(length):
        choices = [x for x in letters if not out or x != -out[-1]]
        out.append(rng.choice(choices))
    return Word(out, alphabet)


def random_positive_word(rng: random.Random, alphabet: Alphabet, length: int) -> Word:
    return Word([rng.randint(1, alphabet.rank) for _ in range(length)], alphabet)


def random_presentation(rng: random.Random, alphabet: Alphabet, generators: tuple[int, int],
                        lengths: tuple[int, int], distribution: str) -> SubgroupPresentation:
    draw = random_positive_word if distribution == "positive-words" else random_reduced_word
    n = rng.randint(*generators)
    return SubgroupPresentation(alphabet, tuple(draw(rng, alphabet, rng.randint(*lengths)) for _ in range(n)))


def sample_rng(seed: int, index: int, stream: str = "") -> random.Random:
    return random.Random(f"{seed}:{index}:{stream}")


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 1
    samples: int = 1000
    generator_count_range: tuple[int, int] = (1, 3)
    word_length_range: tuple[int, int] = (1, 4)
    distribution: str = "positive-words"
    ambient_rank: int = 2

    def __post_init__(self):
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ValueError(f"samples must be at least 1, got {self.samples!r}")
        for name in ("generator_count_range", "word_length_range"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must be a non-empty range of positive integers, got {lo}:{hi}")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"distribution must be one of {', '.join(DISTRIBUTIONS)}")
        Alphabet(self.ambient_rank)
        if not -(2 ** 63) <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


@dataclass
class _Tally:
    checked: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, index: int, reproducer: str):
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append((index, reproducer))


def check_strong_decomposition(f) -> bool:
    d = strong_trail_decomposition(f.graph, f.base)
    if not verify_decomposition(f.graph, d, strong=True):
        return False
    if not all(is_self_avoiding(f.graph, p) for p in d.trails):
        return False
    return all(is_strongly_connected(prefix_union(f.graph, d, i)) for i in range(len(d)))


def check_positive_basis(f) -> bool:
    basis = positive_basis(f)
    if len(basis) != rank(f) or not all(w.is_positive() for w in basis):
        return False
    return foldings_isomorphic(folding_of(SubgroupPresentation(f.alphabet, tuple(basis))), f)


def run_sample(config: ExperimentConfig, index: int) -> dict:
    """Evaluate every applicable property on one sample; ``{name: bool}``."""
    alphabet = Alphabet(config.ambient_rank)
    rng = sample_rng(config.seed, index, "H")
    ph = random_presentation(rng, alphabet, config.generator_count_range,
                             config.word_length_range, config.distribution)
    pk = random_presentation(sample_rng(config.seed, index, "K"), alphabet,
                             config.generator_count_range, config.word_length_range, "reduced-words")
    f = folding_of(ph)
    results = {"generators_contained": all(membership(f, w) for w in ph.generators)}

    sc = is_strongly_connected(f.graph)
    if config.distribution == "positive-words":
        results["positive_implies_strongly_connected"] = sc
    if sc:
        results["positive_basis_round_trip"] = check_positive_basis(f)
        results["strong_decomposition"] = check_strong_decomposition(f)

    if alphabet.rank == 2:
        has_dec = has_trail_decomposition(f)
        results["decomposition_iff_source_sink_free"] = has_dec == find_sources_sinks(f).empty
        if has_dec:
            results["decomposition_implies_3_balanced"] = is_3_balanced(f)

    eh, ek = embed_to_rank2(ph), embed_to_rank2(pk)
    fe = folding_of(eh)
    results["embedding_preserves_rank"] = rank(fe) == rank(f)
    if all(w.is_positive() for w in ph.generators):
        results["embedding_preserves_positivity"] = all(w.is_positive() for w in eh.generators)

    report = hnc_check(eh, ek) if alphabet.rank != 2 else hnc_check(ph, pk)
    results["proved_bounds"] = report.proved_bounds_hold
    if is_positively_generated(f):
        results["hnc_when_positively_generated"] = report.verdict_hn_conjecture
    if alphabet.rank == 2 and report.h_source_sink_free:
        results["hnc_when_source_sink_free"] = report.verdict_hn_conjecture
    results["_reproducer"] = (
        f"# sample {index} seed {config.seed}\n# H\n{ph.to_text()}# K\n{pk.to_text()}"
    )
    return results


def run_experiment(config: ExperimentConfig, reproducer_dir: str | None = None) -> dict:
    tallies: dict[str, _Tally] = {}
    for i in range(config.samples):
        res = run_sample(config, i)
        repro = res.pop("_reproducer")
        for name, ok in res.items():
            tallies.setdefault(name, _Tally()).record(ok, i, repro)

    report = {
        "config": {
            "seed": config.seed,
            "samples": config.samples,
            "generator_count_range": list(config.generator_count_range),
            "word_length_range": list(config.word_length_range),
            "distribution": config.distribution,
            "ambient_rank": config.ambient_rank,
        },
        "properties": {
            name: {"checked": t.checked, "passed": t.passed,
                   "failed_samples": sorted(i for i, _ in t.failures)}
            for name, t in sorted(tallies.items())
        },
    }
    report["all_passed"] = all(t.passed == t.checked for t in tallies.values())

    if reproducer_dir is not None:
        written = []
        for name, t in sorted(tallies.items()):
            for i, text in sorted(t.failures):
                os.makedirs(reproducer_dir, exist_ok=True)
                path = os.path.join(reproducer_dir, f"{name}-{i:06d}.txt")
                with open(path, "w") as fh:
                    fh.write(text)
                written.append(path)
        report["reproducers"] = written
    return report


def format_report(report: dict) -> str:
    cfg = report["config"]
    lines = [
        f"seed={cfg['seed']} samples={cfg['samples']} distribution={cfg['distribution']} "
        f"ambient_rank={cfg['ambient_rank']} generators={cfg['generator_count_range'][0]}:"
        f"{cfg['generator_count_range'][1]} lengths={cfg['word_length_range'][0]}:{cfg['word_length_range'][1]}",
    ]
    width = max((len(n) for n in report["properties"]), default=0)
    for name, p in report["properties"].items():
        status = "ok" if p["passed"] == p["checked"] else "FAIL"
        lines.append(f"{name:<{width}}  {p['passed']:>6}/{p['checked']:<6} {status}")
    for path in report.get("reproducers", []):
        lines.append(f"reproducer: {path}")
    return "\n".join(lines) + "\n"


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
