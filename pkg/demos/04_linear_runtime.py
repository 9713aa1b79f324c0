# %% [markdown]
# # Linear work on Fibonacci words
#
# Operation counts (stack pushes plus border fallbacks) per symbol stay flat
# as the input grows, while wall time grows in proportion to length.

# %%
import sys

from coverinfer.bench import bench_random, bench_run, write_csv

records = bench_run(10, 25)
write_csv(records, sys.stdout)
ratios = [r.ops / r.n for r in records]
print(f"ops per symbol between {min(ratios):.3f} and {max(ratios):.3f}")

# %% [markdown]
# A random binary string of a million symbols still comes back over two letters.

# %%
r = bench_random(10**6, seed=1)
print(r.label, f"{r.wall_time:.2f}s", "alphabet", r.alphabet)
