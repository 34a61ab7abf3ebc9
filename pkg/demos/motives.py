"""The essential-motive recursion and its numeric consequences.

One split hyperbolic plane decomposes Essential(n, r) into three shifted
pieces over rank n-2; iterating to the base yields a palindromic Tate
polynomial with top degree r(2n-3r).  The quadric comparison, the doubled
embedding shifts, and the minimal J-invariant arithmetic all reduce to this
recursion.
"""

from chowlab.motives import (
    cd2_identity_check,
    decompose_step,
    dim_orthogonal,
    dim_unitary,
    dvamr_check,
    essential_poincare,
    j_min,
    kvadrika_check,
    split_quadric_poincare,
    witt_decompose_whole,
)

print("one decomposition step:")
for n, r in ((2, 1), (4, 1), (4, 2), (6, 3)):
    print(f"  Essential({n},{r}) = {decompose_step(n, r)}")

print("\nfully expanded polynomials (palindromic, top degree r(2n-3r)):")
for n in (4, 5, 6, 7):
    for r in range(1, n // 2 + 1):
        p = essential_poincare(n, r)
        print(f"  n={n} r={r}: {p.to_list()}  dim={dim_unitary(n, r)}")

print("\nwhole-motive splitting with one hyperbolic plane (n=4, r=1):")
print(f"  {witt_decompose_whole(4, 1, 1)}")

print("\nsplit quadric vs (1+q) * essential part:")
for n in (2, 3, 4, 5):
    report = kvadrika_check(n)
    print(
        f"  n={n}: quadric {split_quadric_poincare(n).to_list()}, "
        f"residual {list(report.delta)} ({'binding' if report.binding else 'informational'})"
    )

print("\ndoubled-embedding shifts (positivity) and dominance for n <= 4:")
for n in (2, 3, 4):
    for r in range(1, n // 2 + 1):
        rep = dvamr_check(n, r)
        print(
            f"  n={n} r={r}: shift(m=2r-1)={rep.shift_odd}, shift(m=2r)={rep.shift_even}, "
            f"dominance={rep.dominance}"
        )

print("\nminimal J-invariant of binary-divisible forms:")
for n in (2, 4, 6, 8, 10):
    j = j_min(n)
    print(
        f"  n={n}: J={list(j)}, dim Y_n={dim_orthogonal(n, n)}, "
        f"cd_2 = {dim_orthogonal(n, n) - sum(j)} = dim X_{n//2} "
        f"(consistent: {cd2_identity_check(n)})"
    )
