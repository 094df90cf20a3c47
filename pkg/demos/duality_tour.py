"""Count cylindric partitions three ways and compare with the dual weight."""
from collections import Counter

from abacrystal.abacus import compact_for_weight
from abacrystal.charformula import Z_borodin, Z_weyl, lambda_prime, profile_of
from abacrystal.cpp import enumerate_cpps, reflect

DEG = 10

for lam in [(1, 1, 0), (2, 1), (1, 2, 1), (2, 3, 1)]:
    n, ell = len(lam), sum(lam)
    charges = compact_for_weight(lam).charges
    counts = Counter(p.size for p in enumerate_cpps(n, charges, DEG))
    print(f"n={n} ell={ell} weight {lam} boundary {profile_of(lam, n, ell).word()}")
    print("  enumerated ", [counts[k] for k in range(DEG + 1)])
    print("  character  ", list(Z_weyl(lam, n, DEG)))
    print("  product    ", list(Z_borodin(profile_of(lam, n, ell), DEG)))
    dual = lambda_prime(lam)
    print(f"  dual weight {dual} gives", list(Z_weyl(dual, ell, DEG)))

pi = next(p for p in enumerate_cpps(3, (2, 1, 1, 1, 0, 0), 6) if p.size == 6 and len(p.rows[0]) > 1)
print("\na cylindric partition of type (3, 6):")
print(pi.render())
print("\nits reflection, of type (6, 3):")
print(reflect(pi).render())
