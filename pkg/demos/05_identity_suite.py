"""Running the identity and conjecture verification suite from code.

Proven identities are checked on grids; conjectured identities are checked
exactly at desk scale and reported as consistent, never as proven.  The
ratio scan prints exact fractions for inspecting the conjectured rational
formulas.
"""

from monotri import (
    ConjectureSpec,
    asm_number,
    emit_ratio_sequence,
    refined_asm,
    render_table,
    run_conjecture_suite,
    run_identity_grid,
    vsasm_number,
)

print("Alternating-sign-matrix quantities straight from the polynomial:")
print(f"  totals by size:   {[asm_number(n) for n in range(1, 6)]}")
print(f"  refined, size 3:  {[refined_asm(3, i) for i in (1, 2, 3)]}")
print(f"  vertically symmetric (odd sizes 3, 5, 7): "
      f"{[vsasm_number(n) for n in (1, 2, 3)]}")

print("\nGrid checks of proven identities:")
reports = [
    run_identity_grid("theorem1", n=3, window=(-1, 1), exhaustive=True),
    run_identity_grid("cyclic", n=3, window=(-4, 4), samples=60, seed=7),
    run_identity_grid("shift-antisym", n=3, window=(-2, 2), samples=40, seed=7),
]
print(render_table(reports))

print("\nConjecture families at their two smallest parameter values:")
conjectures = run_conjecture_suite(ConjectureSpec(
    names=("comb-rec", "vsasm-reverse", "rev-dup", "one-desc", "ratio-k4")))
print(render_table(conjectures))

print("\nExact ratio scan for the doubled-pair insertion (pattern size 4):")
scan = emit_ratio_sequence(4, range(4, 9))
for n, ratio in scan.metadata["ratios"].items():
    print(f"  n={n}: ratio {ratio}")
print("  conjectured closed form: (n + 4) / 2")
