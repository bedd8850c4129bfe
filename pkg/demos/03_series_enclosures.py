"""Walkthrough: rigorous enclosures of the reciprocal series.

An enclosure is an exact rational interval certain to contain the series
limit: partial sum + two-sided tail bound.  Refinement doubles the
truncation index and never widens the interval.

Run with: python demos/03_series_enclosures.py
"""

from jacsum import SeriesFamily, SeriesSpec, enclose_inverse, enclosures

spec = SeriesSpec(SeriesFamily.RECIP, 3)
print("Successive enclosures of sum_{k>=3} 1/J(k):")
for i, enc in enumerate(enclosures(spec)):
    mid = (enc.interval.lo + enc.interval.hi) / 2
    print(f"  K={enc.terms:>3}  width ~ {float(enc.interval.width):.3e}"
          f"  midpoint ~ {float(mid):.15f}")
    if i == 2:
        break

print("\nDeciding a floor means refining until both interval endpoints agree.")
inv = enclose_inverse(SeriesSpec(SeriesFamily.ALT_RECIP, 2), "floor")
print(f"floor of (sum_{{k>=2}} (-1)^k/J(k))^-1 = {inv.decided}"
      f" (decided at K={inv.sum_enclosure.terms})")

print("\nThe alternating inverses hug integers: at even start n the inverse")
print("sits only about (4/3) 2^-n above 2^(n-1)-1, so deciding its floor")
print("needs truncation depth ~3n.  The adaptive driver finds that alone:")
for n in (8, 16, 32):
    inv = enclose_inverse(SeriesSpec(SeriesFamily.ALT_RECIP, n), "floor")
    print(f"  n={n:>2}: decided {inv.decided} == 2^{n-1}-1"
          f" = {2**(n-1)-1}, used K={inv.sum_enclosure.terms}")
