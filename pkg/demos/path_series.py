"""
Paths and their recurrence
==========================

On a path, s_r(P_n) = s_r(P_{n-1}) + s_r(P_{n-r-1}). For r = 1 this is the
Fibonacci sequence.
"""

from rmatch import beta, growth_constant, path_count_series, verify_doubling

print(path_count_series(1, 12).values)
print(path_count_series(3, 20).values)

# splitting P_2n around its middle gives an exact identity
print(all(verify_doubling(4, n) for n in range(8, 60)))

# the growth rate is the root of x^(r+1) = x^r + 1
for r in (1, 2, 6):
    print(r, round(beta(r), 6))

# which closed form does the leading constant follow?
print(growth_constant(2, 300).report())
