"""Tour of the orthonormal Hermitian operator basis.

Builds the generalized Pauli family, shows how the traceless diagonal
matrices complete it to a basis, and checks orthonormality and the
expand/reconstruct round trip.
"""

import numpy as np

from diagchan import expand, generalized_pauli, max_norm, orthonormal_basis, reconstruct

np.set_printoptions(precision=4, suppress=True, linewidth=100)

print("Unnormalized family for n = 3 (count = n^2 = 9):")
family = generalized_pauli(3)
print(f"  identity + {3} symmetric + {3} antisymmetric + {2} diagonal = {len(family)}")
print("  last diagonal element (two ones, then -2):")
print(family[-1].real)

print("\nGram deviation of the normalized basis from the identity:")
for n in range(2, 7):
    basis = orthonormal_basis(n)
    gram = np.einsum("aij,bij->ab", basis.elements.conj(), basis.elements)
    print(f"  n = {n}: {max_norm(gram - np.eye(n * n)):.2e}")

print("\nExpand/reconstruct round trip on a random 4x4 matrix:")
rng = np.random.default_rng(1)
m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
basis = orthonormal_basis(4)
coeffs = expand(m, basis)
print(f"  coefficient count: {coeffs.size}")
print(f"  round-trip error:  {max_norm(reconstruct(coeffs, basis) - m):.2e}")

print("\nExpansion of the projector onto the second basis state (n = 2):")
proj = np.diag([0.0, 1.0]).astype(complex)
print(" ", np.round(expand(proj, orthonormal_basis(2)).real, 6),
      "=  (1/sqrt2, 0, 0, -1/sqrt2)")
