"""Walkthrough: the exact identity catalog.

Every check compares fully normalized rationals; "holds" is never a
tolerance statement.  Run with: python demos/02_identity_checks.py
"""

from jacsum import (
    check_cassini,
    check_lemma_1_1,
    check_step_2_2,
    check_step_3_1,
    identity_sweep,
)

r = check_lemma_1_1(3)
print(f"J(3) + J(4) = 2^3:  {r.lhs} == {r.rhs}  ->  {r.holds}")

r = check_cassini(3, 2)
print(f"Cassini-like at n=3, k=2:  {r.lhs} == {r.rhs}  ->  {r.holds}")

r = check_step_2_2(3)
print(f"telescoping step of the squared series at n=3: both sides {r.lhs}")

print("\nThe alternating-series step numerator collapses to (-1)^n:")
for n in (1, 2, 3, 10):
    print(f"  n={n:>2}: {check_step_3_1(n).lhs}")

results = identity_sweep(128, 64)
failures = [r for r in results if r.failed]
print(f"\nsweep to n=128 (Cassini to 64): {len(results)} checks,"
      f" {len(failures)} failures")
