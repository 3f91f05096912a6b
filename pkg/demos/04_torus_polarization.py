"""The spinor torus and its principal polarization.

Points live on (C^{2^k} mod the Gaussian-integer lattice), stored as exact
coordinates in the fundamental square.  The identity Hermitian form induces
an integer symplectic pairing on the realified lattice, and its paired
elementary divisors certify a principal polarization.
"""

from spintorus import (
    LatticeSpec,
    PolarizationData,
    is_principal,
    parse_point,
    polarization_type,
    riemann_check,
    torsion_count,
    torsion_points,
)

p = parse_point("7/4-1/2i, 1/3", 1)
q = parse_point("1/2+3/4i, 2/3", 1)
print(f"p = {p}  (coordinates arrive already reduced)")
print(f"q = {q}")
print(f"p + q = {p + q}")
print(f"-p = {-p}")
print(f"order of p = {p.order()}")

print()
lattice = LatticeSpec.default(1)
print(f"n-torsion counts: n=2 -> {torsion_count(2, 1)}, n=3 -> {torsion_count(3, 1)}")
two_torsion = list(torsion_points(2, lattice))
print(f"the {len(two_torsion)} two-torsion points at k=1 start with:")
for point in two_torsion[:4]:
    print(f"  {point}")

print()
pol = PolarizationData.default(lattice)
report = riemann_check(pol)
print("pairing checks for the default form:")
print(f"  integer valued on the lattice: {report.integral}")
print(f"  compatible with multiplication by i: {report.complex_compatible}")
print(f"  positive definite: {report.positive}")
print(f"  polarization type: {polarization_type(pol)} -> principal = {is_principal(pol)}")
print(f"  pairing matrix on the realified basis: {pol.integer_form()}")
