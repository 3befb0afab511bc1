# %% [markdown]
# # Extremal constructions
#
# Build each family, count edges against its closed form and look at the
# book structure.  A book of size r is r triangles sharing one edge; the
# booksize of a graph is the largest such r.

# %%
from turanbooks import booksize, enumerate_g0_c3, enumerate_g1_b2, krr_graph, odd_girth, turan_graph
from turanbooks.constructions import turan_dot_c3
from turanbooks.graph import emit_graph6

# %% [markdown]
# ## Balanced complete bipartite graphs
#
# T_{n,2} is triangle-free with floor(n^2/4) edges.

# %%
for n in (6, 7, 10, 11):
    g = turan_graph(n, 2)
    print(n, g.edge_count, n * n // 4, booksize(g))

# %% [markdown]
# ## The apex construction
#
# Take K_{floor((n-1)/2), ceil((n-1)/2)} and add one vertex adjacent to r
# vertices on each side.  Every book passes through the apex, so the
# booksize is exactly r, and the graph has one edge per apex edge beyond
# the bipartite base.

# %%
for n, r in [(9, 1), (9, 2), (21, 3), (41, 5)]:
    g = krr_graph(n, r)
    print(f"n={n} r={r}: edges={g.edge_count} "
          f"formula={(n - 1) ** 2 // 4 + 2 * r} booksize={booksize(g)} odd girth={odd_girth(g)}")

# %%
print(emit_graph6(krr_graph(9, 2)))

# %% [markdown]
# ## Triangle-free, non-bipartite
#
# A path w1 w2 w3 hung on T_{n-3,2}: each member has odd girth 5 and
# floor((n-1)^2/4) + 1 edges.  Members are listed up to isomorphism.

# %%
for n in range(6, 13):
    fam = enumerate_g0_c3(n)
    print(n, len(fam), sorted({g.edge_count for g in fam}), {odd_girth(g) for g in fam})

# %% [markdown]
# ## Booksize one, non-bipartite
#
# A triangle w1 w2 w3 on top of T_{n-3,2}.

# %%
for n in range(7, 13):
    fam = enumerate_g1_b2(n)
    print(n, len(fam), {g.edge_count for g in fam}, {booksize(g) for g in fam})

# %% [markdown]
# ## A triangle glued at one vertex
#
# This one forbids long odd cycles rather than books.

# %%
for n in (8, 12, 20):
    g = turan_dot_c3(n)
    print(n, g.edge_count, (n - 2) ** 2 // 4 + 3)
