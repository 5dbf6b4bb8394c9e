# %% [markdown]
# # Splitting a curve germ into weighted components
#
# The splitter factors generators, certifies primes and weighs each
# component by an intersection ratio with random lines (seeded).

# %%
from lenumbers.components import SplitConfig, geometric_branch_count, split_components
from lenumbers.ideals import buchberger
from lenumbers.poly import parse_polynomial

XYZ = ("x", "y", "z")
f = parse_polynomial("(z^2-x^2-y^2)*(z-x)", XYZ)
d = split_components([f.derivative(1), f.derivative(2)], SplitConfig(seed=0))
for c in d:
    print(c, "mult_0 =", c.mult_origin, "branches =", c.branches)

# %% [markdown]
# A cuspidal component has multiplicity 2 at the origin but one branch.

# %%
Z = ("z0", "z1", "z2")
d = split_components([parse_polynomial("z1*z2", Z), parse_polynomial("z1^2 - z0^3 + 2*z2", Z)])
for c in d:
    print(c, c.mult_origin, c.branches)

# %% [markdown]
# Counting over C: a rational binary quadratic with no real root is one
# component over Q but two complex lines.

# %%
print(geometric_branch_count(buchberger([parse_polynomial(t, Z) for t in ("z1", "z0^2 + 3*z2^2")])))
