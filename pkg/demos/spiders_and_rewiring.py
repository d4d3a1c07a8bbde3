"""
Spiders and the leaf-reduction rewiring
=======================================

T_{a,b} is b paths of a vertices hung from a common centre. For most r a
spider eventually beats the path with the same number of vertices.
"""

from rmatch import (build_tree, count_r_matchings, lower_bound, path_count, spider,
                    spider_counts, spider_vs_path, transform_leaf_reduction)

b = spider_vs_path(6, 6, 300)
print("first b:", b, count_r_matchings(spider(6, b), 6), path_count(6, 6 * b + 1))

# r = 2 never produces one
print(spider_vs_path(2, 3, 200))

# counts for many b at once
print(spider_counts(4, 5, 8))
print(lower_bound(20, 37))

# moving a short pendant path onto the longest one never loses matchings
t = build_tree(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
out = transform_leaf_reduction(t, 2)
print(out.input_count, "->", out.output_count, out.strict)
print(transform_leaf_reduction(spider(3, 3), 2).reason)
