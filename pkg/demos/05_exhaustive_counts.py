"""Compare the tree constructions with an exhaustive search, n = 1..5."""

from ordcross.oracle import count_summary, format_count_table, verify_dual_theorem

print(format_count_table(count_summary(5)))
res = verify_dual_theorem(4)
print("two-fixed-point sections of O_5 are exactly the duals:", res.ok, res.details)
