# %% [markdown]
# # Rebuilding a string from its cover array
#
# `infer` prunes the array, joins positions that must hold equal letters,
# and assigns each group one of two letters, picking the letter that keeps
# an uncovered position uncovered.

# %%
from coverinfer import build_cover_graph, connected_components, infer, minimal_cover_array, prune

c = [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0]
cp = prune(c)
print("pruned    ", cp)
print("components", connected_components(build_cover_graph(cp)).components)

result = infer(c)
print("x         ", result.text)
print("borders   ", result.borders)
print("round trip", list(minimal_cover_array(result.text)) == c)

# %% [markdown]
# The same works on the cover array of any string, however many letters it
# uses: the rebuilt string has the same cover array over just {a, b}.

# %%
original = "dcadcbdcadcdcadcbdcadc"
c = minimal_cover_array(original)
rebuilt = infer(c).text
print(original, "->", rebuilt, minimal_cover_array(rebuilt) == c)
