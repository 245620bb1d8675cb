from expminors import Graph
from expminors.counting import (count_bounds, find_non_minor, graph_classes, separation_crossover,
                                universality_threshold)

# A bounded-degree host cannot contain every graph with m/2 vertices and m edges once
# m ~ 6 n ln(d+2) / ln n: it has too few minors of that size.  The argument compares
# an upper bound on the host's minors with a lower bound on how many such graphs exist.

for n in (10 ** 4, 10 ** 6, 10 ** 9, 10 ** 12):
    m = universality_threshold(n, 10)
    r = count_bounds(n, 10, m)
    print(f"n={n:.0e} m={m:<14d} separation={r.separation:+.4g}" + ("  (m > n)" if r.trivial else ""))

# The displayed bounds only bite for enormous hosts
print(f"crossover for d=10 near n = {separation_crossover(10):.3g}")

# At toy scale the existence claim can be checked outright.  Graphs of a given size
# are enumerated up to isomorphism and tested with an exact minor search.
print("\n4-vertex classes by edge count:", [len(graph_classes(4, e)) for e in range(7)])

print("not a minor of C12:", find_non_minor(Graph.cycle(12), 4, 6).edges())
print("not a minor of the 4x4 grid:", find_non_minor(Graph.grid(4, 4), 5, 10).edges())
print("every 8-vertex, 28-edge graph is a minor of K16:", find_non_minor(Graph.complete(16), 8, 28) is None)
