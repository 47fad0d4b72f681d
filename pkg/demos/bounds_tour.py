"""Tour of the bound machinery at a few contrasting parameter points.

Shows every applicable lower bound rule, the best catalog construction,
and the closed-form exact value when one is certified.  The last stop is
a point where the closed-form table is provably wrong and the library
deliberately answers None.
"""

from ppric import best_lower, compute_report, exact_n


def show(L, s, r):
    report = compute_report(L, s, r)
    print(f"\n(L, s, r) = ({L}, {s}, {r})")
    for name, value in report.lower_bounds:
        print(f"  {name:<24} >= {value}")
    for name, value, recipe in report.upper_bounds:
        print(f"  {name:<24} <= {value}")
    print(f"  best bracket: [{report.best_lower}, {report.best_upper}]")
    print(f"  exact: {report.exact}"
          + (f"  via {report.exact_rule}" if report.exact else ""))


def main():
    show(6, 2, 0)     # disjoint supports are optimal: N = r + 3
    show(12, 4, 1)    # a seeded block construction meets the Mills bound
    show(34, 16, 0)   # six words cover a 34-bit space at radius 16
    show(33, 16, 0)   # one bit shorter: the >= 7 rule kicks in, no code known

    print("\nwhere the closed-form table overpromises:")
    notes = {
        (9, 3, 1): "formula says 6; exhaustive search proved the minimum is 7",
        (12, 3, 2): "formula says 7; exhaustive search proved the minimum is 8",
    }
    for point, note in notes.items():
        print(f"  exact_n{point} = {exact_n(*point)}   ({note})")
        print(f"  best_lower{point} = {best_lower(*point)}")


if __name__ == "__main__":
    main()
