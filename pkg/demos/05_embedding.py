"""
Moving to two generators
========================

The map x_i -> a^i b a^i embeds any free group into F(a, b), keeps ranks of
subgroups and sends positive words to positive words.
"""

from stallings import SubgroupPresentation, embed_to_rank2, folding_of, rank
from stallings.decomposition import is_positively_generated

p = SubgroupPresentation.from_strings(["ab", "cd", "dA"], 4)
q = embed_to_rank2(p)
print("F4 generators:", ", ".join(map(str, p.generators)))
print("in F(a, b):  ", ", ".join(map(str, q.generators)))
print("ranks:", rank(folding_of(p)), rank(folding_of(q)))

pos = SubgroupPresentation.from_strings(["abc", "ca"], 3)
print("positive before and after:", is_positively_generated(folding_of(pos)),
      is_positively_generated(folding_of(embed_to_rank2(pos))))
