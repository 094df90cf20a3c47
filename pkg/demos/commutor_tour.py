"""The crystal commutor on a small tensor product, next to the naive flip."""
from abacrystal.commutor import (
    build_B,
    is_crystal_isomorphism,
    longest_words,
    schutzenberger,
    sigma_table,
    verify_star_characterization,
)

m = 3
B = build_B((2, 1), m)
print(f"B(2,1) for gl_{m} has {len(B)} elements; highest {B.highest}, lowest {B.lowest}")
for w, image in sorted(schutzenberger(B).items()):
    print(f"  xi{w} = {image}")

table = sigma_table(((2, 1),), ((1,),), m)
flip = {x: (x[1], x[0]) for x in table}
print("\ncommutor is a crystal isomorphism:", is_crystal_isomorphism(table, m))
print("plain flip is one:", is_crystal_isomorphism(flip, m))
moved = [(x, y) for x, y in table.items() if y != (x[1], x[0])]
print(f"{len(moved)} of {len(table)} elements land somewhere other than the flip, e.g.")
for x, y in moved[:4]:
    print(f"  {x} -> {y}")

for word in longest_words(m):
    reports = verify_star_characterization((2, 1), (1,), m, word)
    print(f"\nstring data along {word}: {sum(r['pass'] for r in reports)}/{len(reports)} highest elements pass")
