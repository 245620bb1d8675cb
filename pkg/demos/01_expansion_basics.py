import math

import numpy as np

from expminors import ExpansionParams, Graph, ball, certify_expansion, gen_random_regular, spectral_lambda
from expminors.expansion import mixing_bound, edges_between, ndl_expansion_params

# A graph is an (alpha, t)-expander when every set S with |S| <= alpha*n/t has
# at least t*|S| vertices just outside it.  Small hosts can be checked exhaustively.

petersen = Graph.petersen()
print(certify_expansion(petersen, ExpansionParams(0.25, 2)).to_json())

# The 8-cycle fails at (1/2, 2): two adjacent vertices see only two others.
print(certify_expansion(Graph.cycle(8), ExpansionParams(0.5, 2)).to_json())

# Balls around a set grow geometrically until they reach alpha*n vertices.
g = gen_random_regular(60, 8, seed=1)
params = ExpansionParams(0.25, 4)
cert = certify_expansion(g, params)
print("60-vertex 8-regular host:", cert.verdict, "size cap", cert.checked_size_cap)
U = {0}
for z in range(4):
    print(f"  z={z}: |ball| = {len(ball(g, U, z)):3d}, floor = {min(0.25 * 60, (1 + 4) ** z):g}")

# Spectral side: lambda = max(|lambda_2|, |lambda_n|) from power iteration.
h = gen_random_regular(2000, 64, seed=3)
regular, lam = spectral_lambda(h)
print(f"\n2000-vertex 64-regular: lambda ~ {lam:.2f} (Ramanujan value {2 * math.sqrt(63):.2f})")

# With lambda < d/4 the spectrum alone gives an expansion guarantee.
print("implied parameters:", ndl_expansion_params(h.n, 64, lam))

# The mixing lemma in action: edge counts between random halves stay near d|X||Y|/n.
rng = np.random.default_rng(0)
X = np.flatnonzero(rng.random(h.n) < 0.5)
Y = np.setdiff1d(np.arange(h.n), X)
print(f"e(X, Y) = {edges_between(h, X, Y)}, bound {mixing_bound(h.n, 64, lam, len(X), len(Y)):.0f}")
