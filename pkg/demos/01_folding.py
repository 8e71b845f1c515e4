"""
Folding a subgroup of F(a, b)
=============================

Start from generators, glue them into a rose and fold until the graph is
deterministic. The folded graph answers membership by tracing a word from
the base.
"""

from stallings import Word, build_rose, folding_of, membership, rank, spanning_tree_basis
from stallings.folding import SubgroupPresentation

p = SubgroupPresentation.from_strings(["aab", "aaB", "ba"])
rose, base = build_rose(p)
print(f"rose: {len(rose.vertices)} vertices, {len(rose.edges)} edges")

f = folding_of(p)
print(f"folded: {len(f.vertices)} vertices, {len(f.edges)} edges, rank {rank(f)}")
print(f.to_text())

# the folding decides membership by following edges from vertex 1
for text in ["bb", "aabbAA", "aa", "ab"]:
    print(f"{text:>8} in H? {membership(f, Word.parse(text))}")

# a free basis read off a spanning tree
print("basis:", ", ".join(map(str, spanning_tree_basis(f))))
