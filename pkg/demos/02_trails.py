"""
Trail decompositions
====================

Strongly connected foldings split into an ordered list of trails, each one
glued to what came before exactly at its two ends. Reading the trails as
words gives a positive basis.
"""

from stallings import folding_of, positive_basis, strong_trail_decomposition, verify_decomposition
from stallings.graph import is_strongly_connected, prefix_union, trail_word_letters
from stallings.words import Word

f = folding_of(["aab", "ba", "bbb"])
print("strongly connected:", is_strongly_connected(f.graph))

d = strong_trail_decomposition(f.graph, f.base)
for i, trail in enumerate(d.trails):
    word = Word(trail_word_letters(f.graph, trail), f.alphabet)
    grown = prefix_union(f.graph, d, i)
    print(f"P{i}: edges {list(trail)} spell {word}; prefix has {len(grown.vertices)} vertices")
print("verifies as strong:", verify_decomposition(f.graph, d, strong=True))

# a positive generating set read from the decomposition
print("positive basis:", ", ".join(map(str, positive_basis(f))))

# the same subgroup given with inverses still gets a positive basis
g = folding_of(["aB", "b"])
print("<aB, b> has positive basis", ", ".join(map(str, positive_basis(g))))
