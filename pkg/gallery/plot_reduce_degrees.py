"""
How large does the remainder get during Reduce?
===============================================

Reduce divides by the vanishing ideal's Groebner basis.  On semi-grids the
first basis element is a univariate polynomial in X and the intermediate
remainders stay below deg_Y 2a.  On a point subset whose first basis
element carries Y terms that bound can be exceeded.
"""

# %%
import random

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cabcodes import BiPoly, hermitian, reduce, vanishing_gb

C, P = hermitian(4)
rng = random.Random(1)

# %%
# Sample subsets, reduce a random input, and record the peak Y-degree.
peak, y_free = [], []
for _ in range(200):
    Q = P.take(sorted(rng.sample(range(P.n), rng.randrange(1, P.n + 1))))
    G = vanishing_gb(Q, C.order)
    f = BiPoly(C.field, [[rng.randrange(16) for _ in range(Q.n_x)] for _ in range(C.a)])
    stats = {}
    reduce(f, G, stats=stats)
    peak.append(stats["max_deg_y"] / C.a)
    y_free.append(G.g1_y_free)

peak, y_free = np.array(peak), np.array(y_free)
print("over 2a:", int((peak >= 2).sum()), "of", len(peak))
print("over 2a with G1 free of Y:", int(((peak >= 2) & y_free).sum()))

# %%
bins = np.arange(0, peak.max() + 0.5, 0.25)
plt.hist([peak[y_free], peak[~y_free]], bins=bins, stacked=True, label=["G1 free of Y", "G1 with Y terms"])
plt.axvline(2, color="k", ls="--")
plt.xlabel("max deg_Y of remainder / a")
plt.legend()
plt.savefig("reduce_degrees.png")
