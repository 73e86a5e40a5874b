"""Evaluating the monotone-triangle counting polynomial at integer rows.

For a strictly increasing bottom row the value counts monotone triangles.
The same polynomial, evaluated anywhere in Z^n, equals a signed enumeration
of generalized monotone triangles -- so decreasing and mixed rows produce
meaningful (possibly negative or zero) integers as well.
"""

from monotri import EvalCache, alpha, applicable_methods

print("A strictly increasing row counts monotone triangles:")
row = (2, 4, 5, 8, 9)
print(f"  value at {row} = {alpha(row)}")

print("\nEvery evaluation method agrees, including direct enumeration:")
for method in applicable_methods(row):
    print(f"  {method:>12}: {alpha(row, method)}")

print("\nMixed rows give signed counts:")
for row in [(4, 2, 1, 3), (3, 1), (2, 1), (0, 0, 0)]:
    print(f"  value at {row} = {alpha(row)}")

print("\nFor a pair the polynomial is simply b - a + 1, whatever the order:")
for a, b in [(1, 5), (5, 1), (3, 3)]:
    print(f"  value at ({a}, {b}) = {alpha((a, b))}")

print("\nValues are translation invariant, which the cache exploits:")
cache = EvalCache()
print(f"  value at (4, 2, 1, 3)  = {alpha((4, 2, 1, 3), 'operator', cache)}")
print(f"  value at (9, 7, 6, 8)  = {alpha((9, 7, 6, 8), 'operator', cache)}"
      f"   (cache hits: {cache.hits})")

print("\nCounts grow quickly with the row length:")
for n in range(1, 8):
    print(f"  staircase 1..{n}: {alpha(tuple(range(1, n + 1)))}")
