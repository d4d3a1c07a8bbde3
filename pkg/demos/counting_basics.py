"""
Counting r-matchings in a tree
==============================

An r-matching is a set of edges whose pairwise distances are all at least r.
The empty set and single edges always qualify, so every tree on n vertices
has at least n of them.
"""

from rmatch import brute_force_count, build_tree, count_r_matchings, path, spider

# a path on 7 vertices: 13 induced matchings (r = 2)
p7 = path(7)
print("s_2(P_7) =", count_r_matchings(p7, 2))

# raising r can only remove matchings
print([count_r_matchings(p7, r) for r in range(1, 8)])

# trees are plain edge lists on vertices 0..n-1
t = build_tree(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
for r in (1, 2, 3):
    print(r, count_r_matchings(t, r), brute_force_count(t, r))

# the DP handles big trees instantly; counts are exact Python ints
big = spider(40, 50)
print(big.n, "vertices,", len(str(count_r_matchings(big, 5))), "digits")
