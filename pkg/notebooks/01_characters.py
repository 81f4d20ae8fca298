# %% [markdown]
# # Characters of SU(2) on the maximal torus
#
# The torus T of diagonal matrices has representation ring Z[a, a^-1].
# An SU(2) representation restricts to a Weyl-symmetric Laurent polynomial,
# and the irreducibles X<n> = Sym^n(sigma) restrict to a^n + a^(n-2) + ... + a^-n.

# %%
from verlinde import ALPHA, LaurentPoly, chi, decompose, rep_mul, restrict, weyl_involution

sigma = restrict(chi(1))
print("sigma on T:", sigma)
print("Sym^3 on T:", restrict(chi(3)))

# %% [markdown]
# Multiplying characters on the torus and reading the result back in the
# irreducible basis gives the Clebsch-Gordan rule.

# %%
square = sigma * sigma
print("sigma^2 on T:", square)
print("decomposed:", decompose(square))
print("X2 * X3 =", rep_mul(chi(2), chi(3)))

# %% [markdown]
# The Weyl group swaps a and a^-1. Only fixed points decompose.

# %%
p = 3 * ALPHA**2 - ALPHA**-1
print(p, "->", weyl_involution(p))
try:
    decompose(ALPHA**3 + 1)
except ValueError as err:
    print("rejected:", err)
