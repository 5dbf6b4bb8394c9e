# %% [markdown]
# # Polar curve, Le cycle and Le numbers
#
# `analyze` splits V(df/dz1, ..., df/dzn) into the polar part (df/dz0 does not
# vanish) and the Le part, then intersects with V(df/dz0) and V(z0).

# %%
from lenumbers import analyze, parse_polynomial

Z = ("z0", "z1", "z2")
examples = [
    ("(z^2-x^2-y^2)*(z-x)", ("x", "y", "z")),
    ("z1^2+z2^2", Z),
    ("z2^2-z1^3-z0*z1^2", Z),
    ("(z0^2-z1^2+z2^2)*z2", Z),
    ("(z1^2-z0^3+z2)*z2", Z),
    ("z2^2-z1^4-z0*z1^3", Z),
    ("z2^2-z1^3-z0^2*z1^2", Z),
]
for text, vars_ in examples:
    a = analyze(parse_polynomial(text, vars_))
    print(f"{text:24s} lambda0={a.lambda0} lambda1={a.lambda1} m={a.m} r={a.r} mu={a.mu}")

# %% [markdown]
# Genericity is checked, not assumed.  Using z1 as the distinguished
# coordinate for the last example breaks the isolated-slice condition.

# %%
bad = analyze(parse_polynomial("z2^2-z1^3-z0^2*z1^2", ("z1", "z0", "z2")))
print(bad.status, bad.genericity)
