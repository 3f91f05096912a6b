"""The Clifford algebra on 2k generators and its finite signed-blade group.

Elements are sparse sums of blades e_I with Gaussian-rational coefficients.
Products, the star involution, and grading are all exact, and the phases
{1, i, -1, -i} times the blades form a finite group whose element orders
drive the translation geometry in the later demos.
"""

from collections import Counter

from spintorus import (
    Signature,
    element_order,
    element_source,
    evaluate_element,
    generator_group,
    grade_project,
    star,
)

sig = Signature(2, 0)

u = evaluate_element("(1+i)*e1 + 2*e1*e2", sig)
v = evaluate_element("e2", sig)
print(f"u = {u}")
print(f"v = {v}")
print(f"u * v = {u * v}")
print(f"v * u = {v * u}  (the blade product is ordered)")
print(f"u* = {star(u)}  (coefficients conjugated, factors reversed)")
print(f"(u v)* = {star(u * v)}")
print(f"v* u*  = {star(v) * star(u)}  (anti-automorphism)")

print()
print("Grading splits an element into scalar, vector, and bivector parts:")
for grade in range(3):
    print(f"  grade {grade}: {grade_project(u, grade)}")

print()
group = generator_group(sig)
orders = Counter(element_order(g, sig) for g in group)
print(f"The signed-blade group at k=1 has {len(group)} elements;")
print(f"orders 1/2/4 occur {orders[1]}/{orders[2]}/{orders[4]} times.")

print()
print("Each group element renders to a plain expression the CLI can replay:")
for g in group[:6]:
    print(f"  {g.label():<12} -> {element_source(g.to_element(sig))}")
