"""Concrete spinor matrices for the algebra.

A tensor ladder of Pauli-style blocks assigns every generator a 2^k x 2^k
matrix with Gaussian-integer entries.  The map extends multiplicatively to
all blades, is injective onto a full matrix algebra, and turns the star
involution into the ordinary conjugate transpose.
"""

from spintorus import (
    basis_elements,
    build_generators,
    evaluate_element,
    star,
    verify_algebra_iso,
    verify_unitary,
)

for k in (1, 2):
    table = build_generators(k)
    print(f"k={k}: {table.description}")
    for index, gamma in enumerate(table.gamma, start=1):
        print(f"  gamma[{index}] = {gamma!r}")
    iso = verify_algebra_iso(table)
    print(f"  flattened blade images: rank {iso.spanning_rank} of {iso.expected_rank}")
    print()

table = build_generators(1)
sig = table.sig
u = evaluate_element("e1*e2", sig)
print(f"rho(e1*e2) = {table.represent(u)!r}")
print(f"rho(u*)    = {table.represent(star(u))!r}")
print(f"rho(u)^+   = {table.represent(u).adjoint()!r}")

checked = sum(
    table.represent(star(v)) == table.represent(v).adjoint()
    for v in basis_elements(sig)
)
print(f"star matches the adjoint on {checked} of 8 basis elements")

report = verify_unitary(table)
print(f"unitary compatibility: {report.checked} checks, all pass = {report.all_compatible}")
