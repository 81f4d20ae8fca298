# %% [markdown]
# # Comparing the two rings level by level
#
# At level k the twist is m = k + 2. V_a is matched with the class of X<a>
# and the structure constants are compared entry by entry.

# %%
import time

from verlinde import verify_level, verify_range
from verlinde.theorem import summarize

print(verify_level(2))

start = time.perf_counter()
reports = verify_range(64)
print(summarize(reports).splitlines()[-1], f"in {time.perf_counter() - start:.2f}s")
