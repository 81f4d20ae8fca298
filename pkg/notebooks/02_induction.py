# %% [markdown]
# # Holomorphic induction
#
# A torus weight a^n gives a line bundle on SU(2)/T = CP^1; its sections
# (minus its first cohomology) form a virtual SU(2) representation.

# %%
from verlinde import LaurentPoly, chi, induce, induce_monomial, restrict

for n in range(-5, 6):
    print(f"ind(a^{n}) = {induce_monomial(n)}")

# %% [markdown]
# Induction is a map of R(SU(2))-modules: ind(res(x) p) = x ind(p).

# %%
x = chi(2) - chi(0)
p = LaurentPoly({-3: 2, 1: 1})
print(induce(restrict(x) * p), "==", x * induce(p))
