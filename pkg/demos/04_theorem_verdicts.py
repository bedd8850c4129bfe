"""Walkthrough: per-index verdicts for the five reciprocal-sum claims.

Claims 2.2 and 3.1 are verified in two readings, because the derivation
behind each establishes something different from the printed statement.
Both verdicts are always computed; disagreements are flagged, never
reconciled.

Run with: python demos/04_theorem_verdicts.py
"""

from jacsum import verify_range, verify_thm_2_2, verify_thm_3_1

print("Claim 2.1 (two-sided bound on the inverse of the plain sum):")
for v in verify_range("2.1", 2, 10):
    print(f"  n={v.n:>2}: {v.status.value}  [{v.note}]")

print("\nClaim 3.1 at n=4: the derivation brackets the unsquared series,")
print("the statement displays the squared one.  Both readings:")
proof, stated = verify_thm_3_1(4)
for v in (proof, stated):
    print(f"  {v.variant:<14} {v.status.value:<9} decided={v.decided}"
          f" expected={v.expected}")
print("  discrepancy flagged:", proof.discrepancy)

print("\nClaim 2.2 at n=3: the derivation forces the floor past the printed")
print("bound, so the stated direction fails while the derived bound holds:")
stated, proof = verify_thm_2_2(3)
print(f"  stated         {stated.status.value}: floor {stated.decided} vs"
      f" bound {stated.expected}")
print(f"  proof-implied  {proof.status.value}: {proof.note}")

print("\nClaim 3.3 sweep (fails at n=2 only, outside its derivation range):")
for v in verify_range("3.3", 1, 8):
    mark = "  <-- refuted" if v.status.value == "refuted" else ""
    print(f"  n={v.n}: ceil={v.decided:>5} bound={v.expected:>5}"
          f" {v.status.value}{mark}")
