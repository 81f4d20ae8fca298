# %% [markdown]
# # Level 0 for a finite abelian group
#
# For abelian G conjugation is trivial, so an equivariant bundle over G is a
# representation at each point. Pushing forward along multiplication adds
# the points and tensors the fibres: K_G(G) is the group ring of G x G^.

# %%
import numpy as np

from verlinde import FiniteAbelianGroup, abelian_groups, kgg_ring

G = FiniteAbelianGroup((3,))
R = kgg_ring(G)
basis = R.basis
i, j = basis.index(((1,), (1,))), basis.index(((2,), (2,)))
print(basis[i], "*", basis[j], "=", basis[R.product[i, j]])

# %% [markdown]
# A general element is an integer array indexed by (point, character).

# %%
f = np.zeros((3, 3), dtype=int)
f[1, 0], f[2, 1] = 2, -1
print(R.convolve(f, f))

# %%
for G in abelian_groups(12):
    R = kgg_ring(G)
    print(G.cyclic_orders, R.rank, R.is_commutative() and R.is_associative() and R.is_unital())
