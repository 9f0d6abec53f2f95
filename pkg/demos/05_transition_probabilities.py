"""Classical transition probabilities induced on the computational basis.

Every diagonal channel maps basis projectors to diagonal matrices, so its
restriction to the computational basis is a classical Markov kernel. The
kernel depends only on the diagonal-block coefficients and is computed
both directly and in closed form; composing channels multiplies the
kernels.
"""

import numpy as np

from diagchan import (
    ChannelFamily,
    DiagonalChannel,
    diagonal_block_coefficients,
    family_parameter_range,
    is_row_stochastic,
    max_norm,
    transition_closed_form,
    transition_direct,
)

np.set_printoptions(precision=4, suppress=True, linewidth=100)

print("Hybrid depolarizing classical channel, n = 2, p = 0.2:")
ch = DiagonalChannel.from_family(ChannelFamily.HYBRID_DEPOLARIZING_CLASSICAL, 2, 0.2)
p_matrix = transition_direct(ch)
print(p_matrix)
print(f"  row sums: {p_matrix.sum(axis=1).tolist()}  "
      f"row-stochastic: {is_row_stochastic(p_matrix)}")

print("\nDirect extraction vs closed form, n = 5, all families at midpoints:")
for family in ChannelFamily:
    lo, hi = family_parameter_range(family, 5)
    ch = DiagonalChannel.from_family(family, 5, (lo + hi) / 2)
    direct = transition_direct(ch)
    closed = transition_closed_form(diagonal_block_coefficients(ch), 5)
    print(f"  {family.value:42s} max difference {max_norm(direct - closed):.2e}")

print("\nA coefficient vector outside the valid set produces a signed kernel:")
bad = np.array([1.0, 0.3, 0.3, 1.1])  # diagonal coefficient beyond 1
p_bad = transition_direct(bad)
print(p_bad)
print(f"  row-stochastic: {is_row_stochastic(p_bad)}; row sums stay at "
      f"{np.round(p_bad.sum(axis=1), 12).tolist()} because the leading coefficient is 1")

print("\nComposition multiplies the kernels:")
a = DiagonalChannel.from_family(ChannelFamily.DEPOLARIZING, 3, 0.6)
b = DiagonalChannel.from_family(ChannelFamily.HYBRID_DEPOLARIZING_CLASSICAL, 3, 0.2)
composed = transition_direct(a.compose(b))
product = transition_direct(a) @ transition_direct(b)
print(f"  max difference between kernel of composition and product of kernels: "
      f"{max_norm(composed - product):.2e}")
