"""Walk through verifying a proximity-covering code, twice.

The exact verifier reasons about multihit sets; the enumeration oracle
scans the whole space.  They must agree, and for a broken code the oracle
hands back a concrete violating word.
"""

from ppric import make_code, verify_enumeration, verify_exact


def main():
    # four weight-2 words on six coordinates: two disjoint pairs plus two
    # ties; the intersection of their radius-2 balls is exactly B(0, 0)
    good = make_code(6, 2, 0, [{1, 2}, {3, 4}, {5, 6}, {1, 3}])
    print("codewords:", [sorted(w.support()) for w in good.codewords])

    verdict = verify_exact(good)
    print("exact verifier:   is_ppric =", verdict.is_ppric)
    print("  gamma profile (min multihit size per gamma):",
          verdict.gamma_profile)

    oracle = verify_enumeration(good)
    print("enumeration scan: is_ppric =", oracle.is_ppric)

    # same support structure, but every codeword touches coordinate 1, so
    # the single-bit word e_1 hits all of them and slips inside every ball
    bad = make_code(6, 2, 0, [{1, 2}, {1, 3}, {1, 4}, {1, 5}])
    broken = verify_enumeration(bad)
    print("\nstar-shaped code: is_ppric =", broken.is_ppric)
    print("  violating word:", broken.violator.to_string(),
          "(weight", str(broken.violator.weight) + ",",
          "inside every ball but outside B(0, 0))")

    text = good.dumps(pretty=True)
    print("\nserialized form:")
    print(text)


if __name__ == "__main__":
    main()
