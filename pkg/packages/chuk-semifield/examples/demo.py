"""Demo: build semifields of order 81, compare them, and classify new-family members."""

from __future__ import annotations

from chuk_semifield import (
    NewFamilyParams,
    classify_pair,
    field_new,
    get_family_registry,
    invariants,
    knuth_orbit,
    new_family_count,
    nuclei,
)
from chuk_semifield.equivalence import dickson_link


def main() -> None:
    L = field_new(3, 2)
    nonsquare = L.smallest_nonsquare()
    registry = get_family_registry()

    print("=== Families over GF(9) ===")
    for name, params in (
        ("dickson", {"k": 1, "l": 1, "r": 1, "alpha": nonsquare}),
        ("new-family", {"k": 1, "l": 1, "alpha": nonsquare, "eta": nonsquare}),
        ("quadratic-field", {"a": nonsquare}),
    ):
        S = registry.build(name, L, params)
        N = nuclei(S)
        print(f"  {name:16s} {S.verify_axioms().summary()}; nuclei {(N.left, N.middle, N.right)}")

    print("\n=== Knuth orbit of the new family ===")
    S = registry.build("new-family", L, {"k": 1, "l": 1, "alpha": nonsquare, "eta": nonsquare})
    for member in knuth_orbit(S):
        print(f"  {member.label:12s} {invariants(member.semifield).nuclei_multiset}")

    print("\n=== Dickson as construction 2 ===")
    link = dickson_link(L, 1, 1, nonsquare)
    print(f"  {link.source.label} -> {link.target.label}: {'verified' if link.verify() else 'FAILED'}")

    print("\n=== Classification over GF(3^5) ===")
    big = field_new(3, 5)
    ns = big.smallest_nonsquare()
    a = NewFamilyParams(p=3, m=5, k=1, l=2, alpha=ns, eta=ns)
    for other in (a.model_copy(update={"alpha": int(big.power(ns, 3))}), a.model_copy(update={"k": 2, "l": 1})):
        verdict = classify_pair(a, other)
        print(f"  (k, l) = ({other.k}, {other.l}), alpha = {other.alpha}: isotopic = {verdict.isotopic}")

    print("\n=== Class counts ===")
    for p, m, k, l in ((3, 5, 1, 2), (5, 5, 1, 2), (3, 10, 1, 2)):
        report = new_family_count(p, m, k, l)
        print(f"  p={p} m={m} k={k} l={l}: {report.exact} classes in [{report.lower:.1f}, {report.upper}]")


if __name__ == "__main__":
    main()
