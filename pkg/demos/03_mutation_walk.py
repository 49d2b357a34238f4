"""
Walking a clique down to the standard one
=========================================
"""
from toricnccr.cliques import enumerate_maximal_cliques, format_clique
from toricnccr.mutation import check_tilting_certificate, mutation_graph, normalize_to_standard
from toricnccr.semigroup import build_rank1
from toricnccr.weights import validate

data = build_rank1(validate(1, [-3, -2, -2, 2, 2, 3]))


def show(c):
    return "{" + format_clique(c) + "}"


# Each step drops the top element m, adds m - N and shifts back to min 0.
# The certificate checks two finite lists of differences against S+.
for c in enumerate_maximal_cliques(data):
    path = normalize_to_standard(data, c)
    print(show(c), f"-> {len(path)} step(s)")
    for step in path.steps:
        rep = check_tilting_certificate(data, step)
        print(f"    remove {step.removed:+d}, add {step.added:+d} -> {show(step.after)}"
              f"   certificate {'ok' if rep.ok else 'FAILED'}")

graph = mutation_graph(data)
print(f"\nmutation graph: {len(graph.nodes)} nodes, standard {show(graph.standard)}")
