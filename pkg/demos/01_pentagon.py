"""Walkthrough: the pentagon and its largest distributive quotient.

Run with:  python3 demos/01_pentagon.py
"""

from latquot import (
    all_congruences,
    delta,
    dump_lattice_text,
    is_distributive,
    is_modular,
    n5,
    principal_congruence,
    quotient,
)

pentagon = n5()
lat = pentagon.lattice

print("The pentagon has five elements 0 < b < a < 1 and 0 < c < 1:")
print(dump_lattice_text(lat))
print(f"distributive: {is_distributive(lat)}, modular: {is_modular(lat)}")

print("\nIts congruence lattice has five members:")
for theta in all_congruences(lat):
    print(" ", theta.render(lat))

d = delta(lat)
print("\nThe least congruence with a distributive quotient:")
print(" ", d.render(lat))
print("It is principal: gluing a to b is enough,")
print("  theta(a,b) =", principal_congruence(lat, "a", "b").render(lat))

target = quotient(lat, d).target
print(f"\nThe quotient has {len(target)} elements and is "
      f"{'distributive' if is_distributive(target) else 'NOT distributive'}:")
print(dump_lattice_text(target))
