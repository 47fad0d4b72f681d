"""Build one code from each recipe family and verify it on the spot.

Also demonstrates the two combining moves: gluing two covering designs
into a longer code (doubling) and the symbolic planner that type-checks
a doubling without needing the block lists.
"""

from ppric import (
    available_recipes,
    build_eps8,
    build_recipe,
    design_9_5_2,
    doubling,
    doubling_params,
    verify_exact,
)


def main():
    print("recipe catalog at (12, 4, 1):")
    for rec in available_recipes(12, 4, 1):
        print(f"  {rec.rule_label():<28} size {rec.size}")

    print("\nbuilding and checking each:")
    for rec in available_recipes(12, 4, 1):
        if rec.size > 100:
            print(f"  {rec.rule_label():<28} skipped (size {rec.size})")
            continue
        code = build_recipe(rec, 12, 4, 1)
        verdict = verify_exact(code)
        print(f"  {rec.rule_label():<28} size {code.size:<4} "
              f"is_ppric={verdict.is_ppric}")

    print("\nsix words covering a 17-bit space (s = 8, r = 0):")
    code = build_eps8(8)
    for w in code.codewords:
        print("  ", w.to_string())
    print("  is_ppric =", verify_exact(code).is_ppric)

    print("\ndoubling two (9, 5, 2) designs -> an (18, 4, 3) code:")
    d = design_9_5_2()
    glued = doubling(d, d)
    p = glued.params
    print(f"  parameters ({p.L}, {p.s}, {p.r}), size {glued.size},",
          "is_ppric =", verify_exact(glued).is_ppric)

    print("\nsymbolic plan, no blocks needed:")
    plan = doubling_params(28, 20, 6, 25, 28, 20, 6, 25)
    print("  two (28, 20, 6) designs with 25 blocks each ->", plan)


if __name__ == "__main__":
    main()
