# %% [markdown]
# # Integer linear algebra for Le-module candidates
#
# Smith normal form gives ker and coker of a boundary map; characteristic
# polynomials of the monodromies must be products of cyclotomics with
# prescribed traces.

# %%
from lenumbers.lemodule import (
    IntegerMatrix,
    format_intpoly,
    kernel_cokernel,
    possible_char_polys,
    smith_normal_form,
    verify_le_module_candidate,
)

D = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
snf = smith_normal_form(D)
print(snf.diag)
print(kernel_cokernel(D))

# %% [markdown]
# With lambda1 = 2 and m = 1 the trace of alpha1 is +-1, leaving only
# t^2 +- t + 1.

# %%
for trace in (1, -1):
    print(trace, [format_intpoly(q) for q in possible_char_polys(2, trace)])

# %%
A = IntegerMatrix.from_rows([[0, -1], [1, 1]])
rep = verify_le_module_candidate(IntegerMatrix.identity(2), A, A, m=2, n=2)
for name, ok in rep.checks.items():
    print(f"{name:22s} {ok}")
