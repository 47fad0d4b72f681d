"""The same covering idea in three metric spaces.

Binary codes lift to any alphabet unchanged; fixed-weight (Johnson)
spaces get their own construction with a provably minimal size; and
covering designs multiply into covering codes for the fixed-weight
world.
"""

from ppric import (
    BinaryWord,
    JohnsonWord,
    QaryWord,
    build_disjoint,
    fano_plane,
    johnson_construction,
    johnson_exact_check,
    johnson_verify,
    product_covering_code,
    qary_verify,
    verify_johnson_covering,
    verify_symmetric_sphere_identity,
)


def main():
    print("sphere-intersection identity, one scan per scheme:")
    print("  binary  L=8:      ",
          verify_symmetric_sphere_identity(BinaryWord.from_string("10101010"), 1, 2))
    print("  ternary L=6:      ",
          verify_symmetric_sphere_identity(QaryWord(3, (0, 2, 1, 0, 2, 1)), 1, 1))
    print("  fixed-weight J(13,6):",
          verify_symmetric_sphere_identity(
              JohnsonWord(13, frozenset(range(1, 7))), 1, 2))

    code = build_disjoint(6, 2, 0)
    print("\nbinary (6, 2, 0) code over bigger alphabets:")
    for q in (3, 4, 5):
        print(f"  q={q}: is_ppric =", qary_verify(code, q).is_ppric)

    print("\nfixed-weight code in J(8, 4), s=1, r=0:")
    jcode = johnson_construction(8, 4, 1, 0)
    for w in jcode.codewords:
        print("  ", w.to_string())
    print("  is_ppric =", johnson_verify(jcode).is_ppric)
    print("  three words are necessary:",
          johnson_exact_check(8, 4, 1, 0),
          "(every 2-word family was refuted by exhaustion)")

    print("\ncovering-code product of two Fano planes:")
    cover = product_covering_code(fano_plane(), fano_plane())
    verdict = verify_johnson_covering(cover)
    print(f"  {cover.size} codewords in J({cover.n}, {cover.L}),"
          f" k={cover.k}, t={cover.t}")
    print("  every target covered:", verdict.at_least_one,
          " exactly once:", verdict.exactly_one)


if __name__ == "__main__":
    main()
