"""Built-in singularity class tables and the expression pipeline.

Run as:  python3 demos/03_singularity_tables.py
"""

from qschubert import (
    builtin_records,
    elaborate,
    in_qtilde_basis,
    parse,
    positivity_check,
    specialize,
    to_chern,
    verify_record,
)

records = builtin_records()
print(f"{len(records)} built-in records:")
for r in records:
    print(f"  {r.name:4s} codim {r.codim}: {r.legendre}")

# Every record passes four structural checks: nonnegative coefficients,
# a homogeneity constraint tying t-power and partition weight to the
# codimension, agreement of the t = 0 slice with the stored Lagrange
# expansion, and strictly decreasing partitions throughout.
print("\nverification")
for r in records:
    for line in verify_record(r).lines():
        print(f"  {line}")

# The Lagrange part of a record converts back to Chern polynomial form
# and specializes to Schubert classes on any LG(n); parts above n die.
a4 = next(r for r in records if r.name == "A_4")
print(f"\nA_4 Lagrange part as a Chern polynomial: {to_chern(a4.lagrange)}")
print(f"A_4 on LG(2): {specialize(a4.lagrange, 2)}")
print(f"A_4 on LG(1): {specialize(a4.lagrange, 1)}")

# The same expansion machinery runs on parsed expressions, so candidate
# formulas can be typed in and checked for positivity.
source = "3*Q[2] + t*c1"
texp = in_qtilde_basis(elaborate(parse(source)))
ok, violators = positivity_check(texp)
print(f"\nexpression {source!r} expands to {texp}")
print(f"nonnegative: {ok}")

source = "c2 - c1^2 + t*Q[1]"
texp = in_qtilde_basis(elaborate(parse(source)))
ok, violators = positivity_check(texp)
print(f"\nexpression {source!r} expands to {texp}")
print(f"nonnegative: {ok}, violators: {violators}")
