"""
The constants table
===================

For each r: s solving r/2 + s = (s+1) log(s+1), the upper-bound base
alpha_r = e^(1/(s+1)), the path growth beta_r, the best spider leg a and its
per-edge growth.
"""

from rmatch import table, table_to_csv, table_to_text

rows = table(2, 11)
print(table_to_text(rows))

# spiders outgrow paths once their per-edge growth passes beta_r
print([r.r for r in rows if r.spider_growth > r.beta])

# plot-ready
print(table_to_csv(rows)[:200])
