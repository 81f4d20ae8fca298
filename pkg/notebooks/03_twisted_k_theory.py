# %% [markdown]
# # Twisted equivariant K-theory of SU(2) by Mayer-Vietoris
#
# Cover SU(2) by the complements of -1 and +1. The twisted K-homology is the
# kernel and cokernel of p -> (ind(p), ind(a^m p)) from R(T) to two copies
# of R(SU(2)). On the module generators 1 and a^-1 this is a 2x2 matrix.

# %%
from verlinde import certify_injective, cokernel, mv_map, quotient_mul
from verlinde.rep_ring import to_text

m = 5
mv = mv_map(m)
for name, row in zip(("1", "a^-1"), mv.entries):
    print(f"{name:>5} -> ({to_text(row[0])}, {to_text(row[1])})")

# %% [markdown]
# The determinant over the integral domain R(SU(2)) is nonzero, so the map
# is injective and K_1 vanishes. The cokernel is R(SU(2)) / <X<m-1>>.

# %%
print("det =", to_text(certify_injective(mv)))
q = cokernel(mv)
print(f"K_0 = R(SU2)/<{to_text(q.relation)}>, rank {q.rank}, degree {q.degree}")
print("[X2][X3] =", quotient_mul(q, 2, 3))

# %% [markdown]
# With m = 1 the relation is X<0> = 1 and the quotient is the zero ring.

# %%
print(cokernel(mv_map(1)).rank)
