# %% [markdown]
# # Admissible cohomology of the Milnor fibre
#
# Given (lambda0, lambda1) and optionally m, r, mu, list every compatible
# (rank H^{n-1}, rank H^n, torsion) profile.

# %%
from lenumbers import analyze, classify, classify_analysis, parse_polynomial, prime_allowed

for args in [(0, 4), (2, 1), (3, 2), (2, 3), (3, 3), (4, 5)]:
    print(args)
    for p in classify(*args):
        print("   ", p.describe(2), "(open)" if p.open_example else "")

# %% [markdown]
# Extra data narrows the answer: m = 1 with lambda1 = 2 leaves one case and
# restricts torsion primes to 3 and 1 mod 6.

# %%
for p in classify(3, 2, m=1):
    print(p.describe(2))
print([p for p in range(2, 40) if all(p % d for d in range(2, p)) and prime_allowed(p)])

# %%
h = analyze(parse_polynomial("z2^2-z1^4-z0*z1^3", ("z0", "z1", "z2")))
for p in classify_analysis(h):
    print(p.describe(h.n_ambient))
