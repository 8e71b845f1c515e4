"""
Intersections and the Hanna Neumann bound
=========================================

The folding of H & K is the part of the product graph reachable from the
pair of bases. Its rank is compared against the classical bounds.
"""

from stallings import SubgroupPresentation, folding_of, hnc_check, pullback, rank

h = SubgroupPresentation.from_strings(["aa", "b"])
k = SubgroupPresentation.from_strings(["aaa", "b"])
meet = pullback(folding_of(h), folding_of(k))
print(f"H & K: {len(meet.vertices)} vertices, {len(meet.edges)} edges, rank {rank(meet)}")

r = hnc_check(h, k)
print(f"rank(H&K) - 1 = {r.reduced_rank_meet}, conjectured bound {r.bound_hn_conjecture}, "
      f"equality: {r.is_equality}")
for name in ("hn_conjecture", "hneumann", "burns", "tardos96"):
    print(f"  {name:<14} bound {getattr(r, 'bound_' + name)!s:>4}  holds {getattr(r, 'verdict_' + name)}")

# a positively generated H against a messier K
r = hnc_check(SubgroupPresentation.from_strings(["ab", "ba", "bba"]),
              SubgroupPresentation.from_strings(["aB", "bbA", "abab"]))
print(f"positive H: ranks {r.rank_h}, {r.rank_k} -> meet {r.rank_meet}, holds {r.verdict_hn_conjecture}")
