# %% [markdown]
# # The level-k fusion ring and the Verlinde formula

# %%
import numpy as np

from verlinde import build_fusion_ring, s_matrix, verlinde_coeff_numeric

ring = build_fusion_ring(3)
print(ring.to_text())

# %% [markdown]
# The sine S-matrix diagonalises the fusion rules. Summing
# S_al S_bl S_cl / S_0l recovers each coefficient up to rounding.

# %%
s = s_matrix(3)
print(np.round(s.entries, 6))
print("orthogonality residual:", s.orthogonality_residual())
print("N_{1,2}^3 ~", verlinde_coeff_numeric(s, 1, 2, 3))
