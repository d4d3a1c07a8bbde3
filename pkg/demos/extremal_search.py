"""
Which tree has the most r-matchings?
====================================

Exhaustive search over every unlabelled tree on n vertices.
"""

from rmatch import probe_problem_4_4, search_extremal

# r = 2: the path wins, tying with the claw only at n = 4
for n in (4, 7, 12):
    rep = search_extremal(2, n)
    print(n, rep.max_count, rep.argmax_codes, rep.trees_examined)

# the minimum is always n, reached by every tree of diameter at most r + 1
rep = search_extremal(3, 8)
print(rep.min_count, len(rep.argmin_codes))

# worker processes split the enumeration; the result does not change
print(search_extremal(3, 13, threads=4).as_dict() == search_extremal(3, 13).as_dict())

# open radii: is the path still the maximiser?
for rep in probe_problem_4_4(5, 13):
    print(rep.n, rep.path_is_max, rep.max_count)
