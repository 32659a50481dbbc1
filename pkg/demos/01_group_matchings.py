"""
Matchings between subsets of a finite abelian group
====================================================

A matching from A to B is a bijection phi with a + phi(a) outside A for
every a.  We look for one with an augmenting-path search and compare the
verdict with brute force over all bijections.
"""

from linmatch.group_matching import (GroupSpec, GroupSubset, exhaustive_matching_exists,
                                     find_matching, is_matching)

# A cyclic example where a matching exists.
Z5 = GroupSpec.parse("Z5")
A = GroupSubset.parse(Z5, "0,1")
B = GroupSubset.parse(Z5, "2,3")
phi = find_matching(A, B)
print("Z5:", phi, is_matching(A, B, phi))

# {0, 2} is the subgroup of order 2 in Z4, and 2 lies in both sets.  Then
# 2 + phi(2) stays in A whichever way we match, so no matching exists.
Z4 = GroupSpec.parse("Z4")
A = GroupSubset.parse(Z4, "0,2")
for text in ("1,2", "2,3", "1,3"):
    B = GroupSubset.parse(Z4, text)
    print(f"Z4: {{0,2}} -> {{{text}}}:", find_matching(A, B) is not None,
          "(brute force:", exhaustive_matching_exists(A, B), ")")

# Product groups take ";" between elements and "," between coordinates.
G = GroupSpec.parse("Z2xZ3")
A = GroupSubset.parse(G, "0,0;1,1")
B = GroupSubset.parse(G, "0,1;1,0")
print(G, find_matching(A, B))
