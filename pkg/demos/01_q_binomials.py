# # q-binomials and the relation yx = qxy
#
# Gaussian binomials are computed here by the q-Pascal recursion, which
# never divides.  This walk-through compares the recursion with the
# factorial quotient and with brute-force expansion of (x + y)^n.

# %%
from qstein.qcomb import expand_power_xy, q_binomial, q_binomial_quotient, q_factorial
from qstein.scalar import as_q, format_scalar, parse_scalar

q = as_q(parse_scalar("1/2"))
print("(4 2)_q at q = 1/2:", format_scalar(q_binomial(4, 2, q)))

# %% [markdown]
# The quotient (n)!_q / ((k)!_q (n-k)!_q) agrees wherever it is defined.

# %%
for n in range(6):
    row = [format_scalar(q_binomial(n, k, q)) for k in range(n + 1)]
    print(n, row)
assert all(q_binomial_quotient(6, k, q) == q_binomial(6, k, q) for k in range(7))

# %% [markdown]
# At a root of unity the factorial quotient breaks down (here (2)!_q = 0
# at q = -1) but the recursion still gives an answer.

# %%
minus_one = as_q(-1)
print("(2)! at q=-1:", format_scalar(q_factorial(2, minus_one)))
print("quotient (3 1):", q_binomial_quotient(3, 1, minus_one))
print("recursion (3 1):", format_scalar(q_binomial(3, 1, minus_one)))

# %% [markdown]
# Rewriting every word in x and y with yx -> qxy reproduces the q-binomial
# theorem coefficient by coefficient.

# %%
coeffs = expand_power_xy(5, q)
for k in sorted(coeffs):
    assert coeffs[k] == q_binomial(5, k, q)
print("(x + y)^5 coefficients:", [format_scalar(coeffs[k]) for k in sorted(coeffs)])
