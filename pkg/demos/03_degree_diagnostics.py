# %% [markdown]
# # Degree diagnostics on a large extremal candidate
#
# For the apex construction on 601 vertices with r = 2 we compute a
# maximum cut, the low-degree set L, the vertices W with many neighbours
# on their own side, and a shortest odd cycle C.  The expected picture is
# L = {apex}, W empty and C a triangle through the apex.

# %%
from fractions import Fraction

from turanbooks import EpsilonParams, containment_report, epsilon_ok, extremal_structure_report, krr_graph

# %%
eps = Fraction("6e-5")
print("admissible:", epsilon_ok(2, eps))
g = krr_graph(601, 2)
rep = containment_report(g, EpsilonParams(eps, 2))
print(rep.cut_kind, rep.internal, float(rep.internal_cap))
print("L =", rep.L, "W =", rep.W, "C =", rep.cycle)
print(rep.checks)

# %% [markdown]
# Larger eps makes the low-degree threshold drop, so L can only shrink.

# %%
for e in ("1e-6", "1e-5", "6e-5", "0.001"):
    r = containment_report(g, EpsilonParams.of(e, 2), restarts=2)
    print(e, epsilon_ok(2, e), r.L, r.passed)

# %% [markdown]
# ## Structure around the triangle
#
# Remove the triangle, 2-color what is left into S* and T*, and compare
# the degree sums of the triangle vertices with |S*| + r - 1 and |T*| + r - 1.

# %%
st = extremal_structure_report(g, 2)
print(st.labeling, st.sum_s, st.target_s, st.sum_t, st.target_t, st.gstar_turan)

# %% [markdown]
# The same quantities on a small graph that is far from extremal.

# %%
from turanbooks.graph import cycle_graph

small = containment_report(cycle_graph(5), EpsilonParams.of("0.01", 1))
print(small.internal, small.L, small.cycle, small.checks)
