"""The three triangle classes and how they fit together.

Monotone triangles live over strictly increasing bottom rows, decreasing
monotone triangles over weakly decreasing ones.  Generalized monotone
triangles are defined for every integer bottom row and coincide with the
other two classes on their home turf.
"""

from monotri import (
    enumerate_dmt,
    enumerate_gmt,
    enumerate_mt,
    sc_statistic,
    validate_dmt,
    validate_monotone_triangle,
)

print("All four generalized monotone triangles with bottom row (4, 2, 1, 3):\n")
for t in enumerate_gmt((4, 2, 1, 3)):
    stats = sc_statistic(t)
    print(t.pretty())
    print(f"  newcomers={stats.newcomers}, sign-changing pairs={stats.sign_changing_pairs},"
          f" sign={stats.sign:+d}\n")

print("Strictly increasing bottom rows: the generalized class IS the monotone class.")
mt = [t.rows for t in enumerate_mt((1, 2, 3))]
gmt = [t.rows for t in enumerate_gmt((1, 2, 3))]
print(f"  bottom (1,2,3): {len(mt)} monotone = {len(gmt)} generalized,"
      f" identical: {mt == gmt}")
print(f"  all monotone-valid: {all(validate_monotone_triangle(t) for t in enumerate_gmt((1, 2, 3)))}")

print("\nWeakly decreasing bottom rows: the generalized class IS the decreasing class.")
dmt = sorted(t.rows for t in enumerate_dmt((2, 2, 1)))
gmt = sorted(t.rows for t in enumerate_gmt((2, 2, 1)))
print(f"  bottom (2,2,1): {len(dmt)} decreasing = {len(gmt)} generalized,"
      f" identical: {dmt == gmt}")
print(f"  all decreasing-valid: {all(validate_dmt(t) for t in enumerate_gmt((2, 2, 1)))}")

print("\nSome bottom rows admit no triangle at all:")
print(f"  bottom (2,1): {len(list(enumerate_gmt((2, 1))))} objects"
      " (the window between 2 and 1 is empty and both endpoints are barred)")
