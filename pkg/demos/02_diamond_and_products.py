"""Walkthrough: the diamond collapses entirely, and products factor.

Run with:  python3 demos/02_diamond_and_products.py
"""

from latquot import (
    all_congruences,
    delta,
    m3,
    n5,
    product,
    quotient,
    verify_theorem3,
    DISTRIBUTIVE,
)

diamond = m3().lattice
print("The diamond M3 has only two congruences (it is simple):")
for theta in all_congruences(diamond):
    print(" ", theta.render(diamond))

d = delta(diamond)
print("\nSo its only distributive quotient is the singleton:")
print("  delta =", d.render(diamond))
print("  quotient size:", len(quotient(diamond, d).target))

pentagon = n5().lattice
prod = product(diamond, pentagon)
print(f"\nOn the {len(prod)}-element product of diamond and pentagon,")
dp = delta(prod)
print(f"delta has {dp.num_blocks()} blocks: the diamond factor collapses")
print("fully while the pentagon factor only glues a to b.")

report = verify_theorem3(diamond, pentagon, DISTRIBUTIVE)
print("\nComponentwise factorization check:", "PASS" if report.ok else "FAIL")
for line in report.details:
    print(" ", line)
