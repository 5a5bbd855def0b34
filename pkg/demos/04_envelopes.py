# # Envelopes of function sets on the punctured plane
#
# On the grid {2^j, 2^j i : |j| <= 4} we compute the outer envelope of a
# set of Laurent polynomials, its reciprocal through the polar and the box
# envelope of semicharacters.

# %%
import numpy as np

from qstein.envelope import (
    FunctionSet,
    box_envelope,
    default_grid,
    inner_envelope_bisection,
    majorization_gl1,
    outer_envelope,
    rCN,
)

grid = default_grid()
D = FunctionSet.of({0: 1}, {1: 1}, {-1: 1})
outer = outer_envelope(D, grid)
inner = inner_envelope_bisection(D, grid)
prod = np.array([outer[x] * inner[x] for x in grid.points])
print("max |outer * inner - 1| =", np.abs(prod - 1).max())

# %% [markdown]
# For an atom rCN(C, N) the monomial witnesses recover f exactly.

# %%
f = rCN(2, 1)
box = box_envelope(f, grid)
print([(str(x), round(box[x], 6), f(x)) for x in grid.points[::4]])

# %% [markdown]
# Every semicharacter on the plane is dominated by some rCN(C, N).

# %%
g = rCN(2, 1) * rCN(1, 1)
maj = majorization_gl1(g, grid)
print("C, N =", tuple(maj), "holds:", maj.holds)
