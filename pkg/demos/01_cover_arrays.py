# %% [markdown]
# # Borders and covers
#
# A cover of a string is a proper prefix whose occurrences, overlapping or
# side by side, hit every position. The minimal cover array records the
# shortest cover of every prefix; the maximal one records the longest.

# %%
from coverinfer import (
    border_array,
    list_all_covers,
    max_to_min,
    maximal_cover_array_oracle,
    minimal_cover_array,
)

x = "abaababaabaababaabababa"
print("x      ", " ".join(x))
print("border ", border_array(x))
print("minimal", minimal_cover_array(x))
print("maximal", maximal_cover_array_oracle(x))

# %% [markdown]
# Every cover of a prefix is also covered by each shorter cover, so walking
# from the maximal entry down through earlier entries lands on the minimal one.

# %%
print(list_all_covers(x[:17]))
print(max_to_min(maximal_cover_array_oracle(x)) == minimal_cover_array(x))
