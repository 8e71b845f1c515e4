"""
Sources, sinks and degree classes
=================================

A vertex with two outgoing edges and nothing else is a source; a folding
with one has no trail decomposition. Decomposable foldings are 3-balanced.
"""

from stallings import degree_profile, find_sources_sinks, folding_of, has_trail_decomposition, is_3_balanced
from stallings.errors import NoDecomposition
from stallings.decomposition import trail_decomposition

for gens in (["aB"], ["a", "baB"], ["ab", "ba"], ["b", "abA", "aabAA"], ["baB"]):
    f = folding_of(gens)
    r = find_sources_sinks(f)
    p = degree_profile(f)
    print(f"<{', '.join(gens)}>: sources {list(r.sources)} sinks {list(r.sinks)}, "
          f"C = {p.classes}, balanced {is_3_balanced(f)}, decomposable {has_trail_decomposition(f)}")

# <bab^-1> has no sources or sinks, but its base is a leaf
try:
    trail_decomposition(folding_of(["baB"]))
except NoDecomposition as exc:
    print("baB:", exc.reason)
