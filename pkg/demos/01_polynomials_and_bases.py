# %% [markdown]
# # Exact polynomials, Groebner bases and local colengths
#
# Everything is over Q with exact fractions.  Variable index 0 is the
# distinguished coordinate z0.

# %%
from lenumbers.ideals import buchberger, local_colength, local_dimension, mora_standard_basis, saturate
from lenumbers.poly import parse_polynomial

XYZ = ("x", "y", "z")
f = parse_polynomial("(z^2-x^2-y^2)*(z-x)", XYZ)
print(f)
print("df/dz =", f.derivative(2))

# %% [markdown]
# A global reduced basis (degrevlex) and a local standard basis.  The local
# one sees only the germ at the origin: x - x^2 is a unit multiple of x there.

# %%
XY = ("x", "y")
G = buchberger([parse_polynomial("x^2", XY), parse_polynomial("x*y + y^2", XY)])
print("global:", G)
L = mora_standard_basis([parse_polynomial("x - x^2", XY), parse_polynomial("y", XY)])
print("local leading monomials:", L.leading_monomials())

# %% [markdown]
# Colength = number of standard monomials of the local leading ideal.
# It is the intersection multiplicity at the origin.

# %%
Z = ("z0", "z1", "z2")
P = lambda *ts: [parse_polynomial(t, Z) for t in ts]
print(local_colength(P("3*z1 + 2*z0", "z2", "z1^2")))    # 2
print(local_colength(P("z1", "2*z2 - z0^3", "z0^5")))    # 5
print(local_dimension(P("z1*(3*z1 + 2*z0)", "z2")))       # 1: a curve germ

# %%
I = buchberger(P("z1^2*(4*z1 + 3*z0)", "z2"))
print(saturate(I, parse_polynomial("z1", Z)))  # strips the embedded line V(z1, z2)
