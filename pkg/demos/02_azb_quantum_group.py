# # The quantum group az+b
#
# Elements are sums c z^n t^k with t z = q z t.  We multiply, take
# coproducts and antipodes, and compare three independent descriptions:
# the closed formulas, the skew construction over Laurent polynomials and
# the word rewriting system.

# %%
from qstein.algebras import GradedElem, check_hopf_axioms, check_pairing_duality
from qstein.azb import (
    AZB_INDEX,
    AzbAlgebra,
    GeneratorWord,
    azb_dual_pair,
    normal_form,
    skew_iso_check,
)
from qstein.scalar import parse_scalar

q = parse_scalar("1/2")
A = AzbAlgebra(q)
z, t = A.basis_elem((1, 0)), A.basis_elem((0, 1))
print("t*z =", A.mul(t, z))
print("kappa(t) =", A.coproduct(t))
print("sigma(t) =", A.antipode(t))

# %% [markdown]
# The same product by rewriting the word "z t z z t t t".

# %%
w = GeneratorWord.parse("z t z z t t t")
print(w, "->", normal_form(q, w))
assert normal_form(q, w) == A.mul(A.basis_elem((1, 1)), A.basis_elem((2, 3)))

# %% [markdown]
# The closed formulas coincide with the generic skew construction, and all
# Hopf axioms hold on a window of basis elements.

# %%
print("skew iso:", skew_iso_check(q, window=3))
print(check_hopf_axioms(A, 3).summary())

# %% [markdown]
# The dual side pairs z^n t^k with zeta_n tau^k with weight (k)!_q; both
# adjunction identities hold.

# %%
dp = azb_dual_pair(q)
print(dp.pair(GradedElem(AZB_INDEX, {(1, 2): 1}), GradedElem(AZB_INDEX, {(1, 2): 1})))
print(check_pairing_duality(dp, 3).summary())
