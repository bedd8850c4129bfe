"""Walkthrough: generating Jacobsthal numbers and polynomial values.

Run with: python demos/01_sequence_basics.py
"""

from jacsum import (
    jacobsthal,
    jacobsthal_closed_form,
    jacobsthal_poly,
    jacobsthal_range,
)

print("The first Jacobsthal numbers, J(n) = J(n-1) + 2 J(n-2):")
print(" ", jacobsthal_range(0, 10))

print("\nEvery value has an independent closed form (2^n - (-1)^n)/3;")
print("the two paths agree everywhere, e.g. at n = 100:")
print("  recurrence :", jacobsthal(100))
print("  closed form:", jacobsthal_closed_form(100))

print("\nThe sequence is the x = 2 slice of a two-parameter family")
print("P(n) = P(n-1) + x P(n-2); the x = 1 slice is Fibonacci:")
print("  x=2:", [jacobsthal_poly(n, 2) for n in range(10)])
print("  x=1:", [jacobsthal_poly(n, 1) for n in range(10)])

print("\nIndices are unbounded; J(2000) has",
      len(str(jacobsthal(2000))), "decimal digits.")
