# %% [markdown]
# # Which arrays are cover arrays?
#
# Enumerating one string per relabeling class gives every cover array of a
# given length. Extra letters do not add any new arrays.

# %%
from itertools import product

from coverinfer import distinct_cover_arrays, validate

two = distinct_cover_arrays(8, 2)
three = distinct_cover_arrays(8, 3)
print(len(two), "arrays of length 8; same with three letters:", two == three)
for c in two[:5]:
    print(" ", c)

# %% [markdown]
# `validate` decides membership by building a witness and checking its cover
# array. Cheap pair checks reject most candidates first.

# %%
for c in ([0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0], [0, 0, 2], [0, 2], [0, 0, 2, 2]):
    print(c, "->", validate(c).line())

accepted = [c for c in product(*(range(i) for i in range(1, 9))) if validate(c).valid]
print(len(accepted), "of the 40320 in-range length-8 arrays are valid")
