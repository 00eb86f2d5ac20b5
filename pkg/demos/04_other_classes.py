"""Walkthrough: the same machinery for any equational class of lattices.

Run with:  python3 demos/04_other_classes.py
"""

from latquot import (
    MODULAR,
    all_congruences,
    cong_join,
    kappa,
    n5,
    parse_identity_file,
    push_congruence,
    quotient,
    verify_theorem2,
)

pentagon = n5().lattice

print("Least congruence with a modular quotient of the pentagon:")
km = kappa(pentagon, MODULAR)
print(" ", km.render(pentagon))
print("(the same gluing as for distributivity: the 4-element quotient is Boolean)")

print("\nA custom class from an identity file; 'x = y' collapses everything:")
crush = parse_identity_file("x = y\n")
print(" ", kappa(pentagon, crush).render(pentagon))

print("\nKappa of a quotient is the pushed-down join of kappa with the kernel,")
print("checked over every congruence of the pentagon:")
for theta in all_congruences(pentagon):
    report = verify_theorem2(pentagon, theta, MODULAR)
    qmap = quotient(pentagon, theta)
    pushed = push_congruence(qmap, cong_join(pentagon, kappa(pentagon, MODULAR), theta))
    print(f"  kernel {theta.render(pentagon):24s} -> "
          f"{pushed.render(qmap.target):24s} {'PASS' if report.ok else 'FAIL'}")
