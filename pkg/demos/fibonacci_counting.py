"""Count type A alternation sets three ways and watch the answers agree.

Sizes of highest-root alternation sets follow Fibonacci-flavored
patterns.  The script counts a few sets directly, compares the closed
forms for negated simple roots against those counts, and reads the same
numbers off rational generating functions.
"""

from weylalt import (
    RootSystemSpec,
    alternation_count,
    build_root_system,
    compute,
    count_neg_simple,
    fibonacci,
    series_grand,
    series_h,
    zero_weight,
)


def main() -> None:
    print("zero-weight set sizes march along the Fibonacci numbers:")
    for r in range(1, 11):
        rs = build_root_system(RootSystemSpec("A", r))
        size = len(compute(rs, rs.highest_root, zero_weight(r)))
        print(f"  rank {r:>2}: {size:>3}  (F_{r} = {fibonacci(r)})")

    print("closed form against direct counts at negated simple roots:")
    for r in range(2, 8):
        row = []
        for i in range(1, r + 1):
            formula = count_neg_simple(r, i)
            counted = alternation_count(r, i, i)
            marker = "" if formula == counted else "  <- MISMATCH"
            row.append(f"{formula}{marker}")
        print(f"  rank {r}: " + " ".join(row))

    print("the leading-column series reproduces the same numbers:")
    h1 = series_h(1, 10)
    values = " ".join(str(int(h1.coefficient((r,)))) for r in range(1, 11))
    print(f"  h coefficients, ranks 1..10: {values}")

    print("one trivariate series stores every count at once:")
    grand = series_grand(6)
    for r, i, j in ((4, 1, 4), (5, 2, 4), (6, 2, 4)):
        cell = int(grand.coefficient((r, i, j)))
        direct = alternation_count(r, i, j)
        print(f"  [x^{r} s^{i} t^{j}] = {cell}, direct count {direct}")


if __name__ == "__main__":
    main()
