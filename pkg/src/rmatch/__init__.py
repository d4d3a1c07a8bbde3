"""Exact counts of distance-r matchings in trees.

An r-matching of a tree is a set of edges in which every two edges are at
distance at least r (incident edges are at distance 0). The package counts
them exactly for arbitrary trees, tabulates path counts and the constants
governing their growth, and searches all small trees for extremal counts.
"""

from .asymptotics import (ConstantsRecord, GrowthConstant, alpha, best_leg_length, beta,
                          construction_leg_length, growth_constant, leg_growth,
                          lower_bound, solve_s, table, table_row, table_to_csv,
                          table_to_json, table_to_text, truncate4, upper_bound)
from .counting import brute_force_count, count_r_matchings
from .extremal import (NotApplicable, SearchReport, TransformOutcome, merge_reports,
                       probe_problem_4_4, search_extremal, spider_counts,
                       spider_growth_estimate, spider_vs_path, transform_leaf_reduction)
from .paths import PathSeries, path_count, path_count_series, verify_doubling
from .trees import (Tree, build_tree, canonical_code, diameter, edge_distance,
                    enumerate_trees, path, read_tree, spider, star)

__version__ = "0.1.0"
