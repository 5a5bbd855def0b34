# # Submultiplicative seminorms on az+b
#
# For |q| < 1 the family p_{D,K} is submultiplicative exactly when
# D |q|^K >= 1.  Below the edge a two-term witness breaks it, and every
# submultiplicative seminorm built from generator data is dominated by a
# member of the family.

# %%
import random

from qstein.azb import AZB_INDEX
from qstein.seminorm import PDK, check_submultiplicative, pdk_witness, random_element, vanishing_bound
from qstein.transform import verify_azb_reflexivity

rng = random.Random(0)
s = PDK(4, 2, "1/2")
pairs = [(random_element(AZB_INDEX, rng), random_element(AZB_INDEX, rng)) for _ in range(500)]
rep = check_submultiplicative(s, pairs)
print(s, "violations:", len(rep.violations), "exact checks:", rep.exact_checks)

# %% [markdown]
# Sweep D across the edge D |q|^K = 1 with K = 2 and q = 1/2, so the edge
# sits at D = 4.

# %%
u, v = pdk_witness(2)
for D in (2, 3, 4, 5):
    r = check_submultiplicative(PDK(D, 2, "1/2", allow_illegal=True), [(u, v)])
    print(f"D={D}: submultiplicative on witness = {r.ok}")

# %% [markdown]
# A seminorm with p(z) = p(z^-1) = 2 must vanish on t^k from this K on.

# %%
print("vanishing bound:", vanishing_bound("1/2", 2, 2))

# %% [markdown]
# The full classification check for both branches |q| != 1 and |q| = 1.

# %%
for q in ("1/2", "2", "i"):
    print(verify_azb_reflexivity(q, window=3).summary())
