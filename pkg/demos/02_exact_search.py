# %% [markdown]
# # Exact extremal search at small n
#
# `solve` grows graphs one vertex at a time (the new vertex always has
# minimum degree), keeps one representative per isomorphism class and
# prunes branches that cannot reach the target edge count.  The result is
# the maximum edge count and every extremal graph up to isomorphism.

# %%
from turanbooks import SearchProblem, naive_oracle, solve, verify_theorem
from turanbooks.graph import parse_graph6

# %% [markdown]
# ## Cross-check against brute force
#
# For n <= 7 the oracle scans every labeled graph with numpy.

# %%
p = SearchProblem(7, max_booksize=1, require_non_bipartite=True)
fast, slow = solve(p), naive_oracle(p)
print(fast.max_edges, slow.max_edges, fast.extremal == slow.extremal)
print(fast.graph6)

# %% [markdown]
# ## Booksize at most one
#
# From n = 7 on the balanced complete bipartite graph is the only
# extremal graph.  At n = 6 the triangular prism ties with it.

# %%
for n in range(6, 11):
    out = solve(SearchProblem(n, max_booksize=1))
    print(n, out.max_edges, out.graph6)

# %%
prism = parse_graph6(solve(SearchProblem(6, max_booksize=1)).graph6[1])
print(sorted(prism.edges()))

# %% [markdown]
# ## Adding a non-bipartite requirement
#
# The value matches floor((n-1)^2/4) + 2 already at n = 7, but the
# extremal set only coincides with the triangle family at n = 10.

# %%
for n in range(7, 11):
    rep = verify_theorem("main", r=1, n=n)
    print(n, rep.searched, rep.formula, rep.status, rep.extremal_count, rep.family_size)

# %% [markdown]
# ## Odd cycles
#
# Forbidding C5 at n = 7: two copies of K4 sharing a vertex tie with
# K_{3,4}.  The tie disappears at n = 8.

# %%
for n in (6, 7, 8):
    rep = verify_theorem("th0", k=2, n=n)
    print(n, rep.searched, rep.status, rep.extremal)
