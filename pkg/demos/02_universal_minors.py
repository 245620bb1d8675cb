import math
import time

from expminors import (Graph, embed_universal, empirical_capacity, gen_gnm, gen_random_regular, gen_random_tree,
                       robust_partition, verify_minor)
from expminors.expansion import heuristic_finder
from expminors.generators import degree3_reduce

# Any graph with few vertices and edges is a minor of a good expander.  The engine first
# finds a robust piece of the host, splits every pattern vertex into a path of degree-3
# vertices, then places them one by one, joining each to its placed neighbours.

host = gen_random_regular(4096, 16, seed=0)
alpha, t = 0.25, 12

# The guaranteed capacity is zero at this size, so we size patterns empirically:
# m = floor(xi * n * ln t / ln n).
m = empirical_capacity(host.n, t, xi=0.2)
print("pattern budget m =", m)

start = time.perf_counter()
robust = robust_partition(host, alpha, t, heuristic_finder(), check_hypothesis=False)
print(f"robust part: {len(robust.X)} vertices, beta = {robust.beta}, {time.perf_counter() - start:.1f}s")

side = math.isqrt(m // 2)
patterns = {
    "grid": Graph.grid(side, side),
    "tree": gen_random_tree(m, 1),
    "cubic": gen_random_regular((2 * m // 3) // 2 * 2, 3, 1),
    "random": gen_gnm(m // 2, m, 1),
}

for name, h in patterns.items():
    reduced, _ = degree3_reduce(h)
    start = time.perf_counter()
    model = embed_universal(host, alpha, t, h, max_size=m, robust=robust)
    sizes = [len(W) for W in model.branch_sets.values()]
    print(f"{name:7s} n={h.n:3d} e={h.edge_count:3d} reduced to {reduced.n:3d} vertices: "
          f"valid={bool(verify_minor(model))}, largest branch set {max(sizes)}, "
          f"{sum(sizes)} host vertices used, {time.perf_counter() - start:.2f}s")

# Branch sets stay far below the guaranteed size limit
print("limit on a reduced branch set:", round(model.info["p1_bound"]))
