"""Walk from a compact abacus to a cylindric partition and a path, one step at a time."""
from abacrystal.abacus import AbacusCrystal, compact_for_weight, decompose, moved_strand, weight
from abacrystal.cpp import abacus_to_cpp
from abacrystal.charformula import dimq_V
from abacrystal.crystal import explore, q_character
from abacrystal.kyoto import J

lam = (1, 2, 1)
psi = compact_for_weight(lam)
print(f"compact configuration for weight {lam}, charges {psi.charges}")
print(psi.render(), "\n")

for i in (0, 1, 2, 1, 0, 0):
    strand = moved_strand(psi, i)
    psi = AbacusCrystal(3, "descending").f(psi, i)
    print(f"f_{i} moves a bead on strand {strand}; weight is now {weight(psi)}")
print(psi.render(), "\n")

gamma, part = decompose(psi)
print("tight part has weight", weight(gamma), "and the leftover partition is", part or "empty")
print("\nas a cylindric partition:")
print(abacus_to_cpp(psi).render())
print("\nas a path (deepest factor first):", J(gamma))

g = explore(AbacusCrystal(3, "descending"), compact_for_weight(lam), 8)
print("\nball sizes by degree:", q_character(g, 8))
print("character coefficients:", list(dimq_V(lam, 3, 8)))
