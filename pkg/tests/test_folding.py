import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_reduced_words, generator_products, subgroup_ball
from stallings.errors import ClassCountUnavailable, EmptyPresentation, ParseError
from stallings.folding import (
    SubgroupPresentation,
    build_rose,
    canonical_text,
    degree_counts,
    degree_profile,
    fold,
    folding_of,
    foldings_isomorphic,
    is_3_balanced,
    membership,
    neumann_majority_type,
    parse_canonical_text,
    parse_subgroup_file,
    rank,
    spanning_tree_basis,
    trivial_folding,
    vertex_class,
)
from stallings.words import Alphabet, Word

F2 = Alphabet(2)


def triples(g):
    return sorted((e.tail, e.head, e.label) for e in g.edges)


def edges_of(f):
    return {(e.tail, e.head, e.label) for e in f.edges}


reduced_word = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=4).map(
    lambda xs: Word(xs, F2)).filter(bool)
presentations = st.lists(reduced_word, min_size=1, max_size=3).map(
    lambda ws: SubgroupPresentation(F2, tuple(ws)))


# -- rose and fold -----------------------------------------------------------

def test_rose_single_letter():
    g, base = build_rose(SubgroupPresentation.from_strings(["a"]))
    assert g.vertices == (base,) and triples(g) == [(0, 0, 1)]


def test_rose_ab():
    g, base = build_rose(SubgroupPresentation.from_strings(["ab"]))
    assert len(g.vertices) == 2
    assert triples(g) == [(0, 1, 1), (1, 0, 2)]


def test_rose_with_inverse_letters():
    # a-loop at 0; b: 0->1, a: 1->2, and b^-1 back from 2 becomes b: 0->2
    g, base = build_rose(SubgroupPresentation.from_strings(["a", "baB"]))
    assert len(g.vertices) == 3
    assert triples(g) == [(0, 0, 1), (0, 1, 2), (0, 2, 2), (1, 2, 1)]


def test_rose_rejects_empty_presentation():
    with pytest.raises(EmptyPresentation):
        build_rose(SubgroupPresentation.from_strings(["aA", "1"]))


def test_fold_conjugate_example():
    f = folding_of(["a", "baB"])
    assert len(f.vertices) == 2 and len(f.edges) == 3
    assert edges_of(f) == {(1, 1, 1), (1, 2, 2), (2, 2, 1)}


def test_fold_whole_group():
    f = folding_of(["a", "b"])
    assert f.vertices == (1,) and edges_of(f) == {(1, 1, 1), (1, 1, 2)}


def test_fold_no_folds_needed():
    f = folding_of(["aB"])
    assert edges_of(f) == {(1, 2, 1), (1, 2, 2)}


def test_trivial_subgroup():
    f = folding_of(["aA"])
    assert f == trivial_folding(2)
    assert rank(f) == 0 and f.is_trivial()


def test_fold_folds_parallel_paths():
    # aab and aaB share the prefix aa
    f = folding_of(["aab", "aaB"])
    assert rank(f) == 2
    assert edges_of(f) == {(1, 2, 1), (2, 3, 1), (3, 1, 2), (1, 3, 2)}
    assert membership(f, Word.parse("aabbAA", F2))
    assert not membership(f, Word.parse("aa", F2))


# -- membership --------------------------------------------------------------

def test_membership_examples():
    f = folding_of(["a", "baB"])
    assert membership(f, Word.parse("baB", F2))
    assert not membership(f, Word.parse("b", F2))
    assert membership(f, Word.identity(F2))


@settings(max_examples=60, deadline=None)
@given(presentations)
def test_membership_matches_generator_products(p):
    f = folding_of(p)
    gens = [w.letters for w in p.generators]
    ball = subgroup_ball(gens, 6)
    # every short product of the given generators is accepted
    assert all(membership(f, Word(w, F2)) for w in generator_products(gens, 3))
    for w in all_reduced_words(2, 6):
        assert membership(f, Word(w, F2)) == (w in ball), w


@given(presentations)
def test_generators_are_members(p):
    f = folding_of(p)
    assert all(membership(f, w) for w in p.generators)


@given(presentations, st.integers(0, 2 ** 32))
def test_fold_is_confluent(p, seed):
    g, base = build_rose(p)
    a = fold(g, base, F2, rng=random.Random(seed))
    b = fold(g, base, F2, rng=random.Random(seed + 1))
    c = fold(g, base, F2)
    assert foldings_isomorphic(a, b) and foldings_isomorphic(a, c)


@given(presentations)
def test_folding_invariants(p):
    f = folding_of(p)
    outs, ins = set(), set()
    for e in f.edges:
        assert (e.tail, e.label) not in outs and (e.head, e.label) not in ins
        outs.add((e.tail, e.label))
        ins.add((e.head, e.label))
    for v in f.vertices:
        d = f.graph.degree(v)
        assert d <= 4
        assert v == f.base or d >= 2
    if not f.is_trivial():
        assert f.graph.degree(f.base) >= 1


# -- rank and bases ----------------------------------------------------------

def test_rank_examples():
    assert rank(folding_of(["a", "b"])) == 2
    assert rank(folding_of(["a", "baB"])) == 2
    assert rank(trivial_folding()) == 0


def test_spanning_tree_basis_examples():
    assert sorted(map(str, spanning_tree_basis(folding_of(["a", "b"])))) == ["a", "b"]
    assert sorted(map(str, spanning_tree_basis(folding_of(["a", "baB"])))) == ["a", "baB"]
    assert spanning_tree_basis(trivial_folding()) == []


@given(presentations)
def test_spanning_tree_basis_regenerates_subgroup(p):
    f = folding_of(p)
    basis = spanning_tree_basis(f)
    assert len(basis) == rank(f)
    assert all(membership(f, w) for w in basis)
    assert foldings_isomorphic(folding_of(SubgroupPresentation(F2, tuple(basis))), f)


def test_isomorphism_examples():
    f = folding_of(["ab", "ba"])
    assert foldings_isomorphic(f, f)
    assert not foldings_isomorphic(folding_of(["a"]), folding_of(["b"]))
    again = folding_of(SubgroupPresentation(F2, tuple(spanning_tree_basis(f))))
    assert foldings_isomorphic(f, again)


def test_isomorphism_respects_the_base():
    # <a, Bab> has the same unbased graph as <a, baB>, seen from the other vertex
    f, g = folding_of(["a", "baB"]), folding_of(["a", "Bab"])
    assert len(f.vertices) == len(g.vertices) and len(f.edges) == len(g.edges)
    assert not foldings_isomorphic(f, g)


@given(presentations, presentations)
def test_isomorphism_agrees_with_canonical_text(p, q):
    f, g = folding_of(p), folding_of(q)
    assert foldings_isomorphic(f, g) == (canonical_text(f) == canonical_text(g))


# -- degree classes ----------------------------------------------------------

def test_degree_profile_free_group():
    prof = degree_profile(folding_of(["a", "b"]))
    assert (prof.d1, prof.d2, prof.d3, prof.d4) == (0, 0, 0, 1)
    assert prof.classes == (0, 0, 0, 0)


def test_degree_profile_conjugate_example():
    f = folding_of(["a", "baB"])
    prof = degree_profile(f)
    assert prof.d3 == 2
    # base: a-loop and b-out (missing b-in); other: a-loop and b-in (missing b-out)
    assert vertex_class(f, 1) == 3 and vertex_class(f, 2) == 4
    assert prof.classes == (0, 0, 1, 1)
    assert is_3_balanced(f)


def test_degree_profile_single_loop():
    prof = degree_profile(folding_of(["a"]))
    assert prof.d2 == 1 and prof.d3 == 0


def test_three_generator_example():
    # a: 1->2->3 with b-loops at all three vertices
    f = folding_of(["b", "abA", "aabAA"])
    assert edges_of(f) == {(1, 2, 1), (2, 3, 1), (1, 1, 2), (2, 2, 2), (3, 3, 2)}
    prof = degree_profile(f)
    assert prof.classes == (1, 1, 0, 0)
    assert is_3_balanced(f)


def test_majority_type():
    assert neumann_majority_type(folding_of(["a", "b"])) is None
    assert neumann_majority_type(folding_of(["aB"])) is None
    assert neumann_majority_type(folding_of(["a", "baB"])) is None
    # <bAB>: base has degree 1, the other vertex is the only degree-3 vertex
    assert neumann_majority_type(folding_of(["bAB"])) == 4


def test_class_counts_need_rank_two():
    f = folding_of(["abc"], rank=3)
    with pytest.raises(ClassCountUnavailable):
        degree_profile(f)
    with pytest.raises(ClassCountUnavailable):
        is_3_balanced(f)
    with pytest.raises(ClassCountUnavailable):
        neumann_majority_type(f)
    assert degree_counts(f) == {2: 3}


@given(presentations)
def test_class_sum_rule(p):
    f = folding_of(p)
    prof = degree_profile(f)
    assert sum(prof.classes) == prof.d3
    assert prof.d1 + prof.d2 + prof.d3 + prof.d4 == len(f.vertices) - (1 if f.is_trivial() else 0)
    if is_3_balanced(f):
        assert neumann_majority_type(f) is None


# -- text formats ------------------------------------------------------------

def test_parse_subgroup_file():
    p = parse_subgroup_file("# comment\nalphabet 2\n a  # first\n\nbaB\n")
    assert p.rank == 2 and [str(w) for w in p.generators] == ["a", "baB"]
    assert parse_subgroup_file(p.to_text()) == p


@pytest.mark.parametrize("text, line, column", [
    ("alphabet 2\na$\n", 2, 2),
    ("alphabet 2\n  abc\n", 2, 5),
    ("a\n", 1, 1),
    ("alphabet x\n", 1, 10),
    ("", 1, 1),
])
def test_parse_subgroup_file_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_subgroup_file(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_canonical_text():
    f = folding_of(["a", "baB"])
    assert canonical_text(f) == "alphabet 2\nvertices 2\nedges 3\nbase 1\n1 a 1\n1 b 2\n2 a 2\n"
    assert parse_canonical_text(canonical_text(f)) == f


@given(presentations)
def test_canonical_text_round_trip(p):
    f = folding_of(p)
    assert foldings_isomorphic(parse_canonical_text(canonical_text(f)), f)
