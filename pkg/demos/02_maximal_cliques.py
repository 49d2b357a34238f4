"""
Maximal CM cliques
==================

A clique is a set of integers whose pairwise differences are all CM
weights.  For the golden weights there are a handful of maximal ones,
each of size N = 7 with one element in every residue class mod 7.
"""
from toricnccr.cliques import (enumerate_maximal_cliques, format_clique, is_half_sigma_translate,
                               is_interval, is_maximal_clique, residue_profile)
from toricnccr.semigroup import build_rank1
from toricnccr.weights import validate

data = build_rank1(validate(1, [-3, -2, -2, 2, 2, 3]))

cliques = enumerate_maximal_cliques(data)
for c in cliques:
    tag = "interval" if is_interval(c) else ""
    print(f"{{{format_clique(c)}}}  {tag}")

# both enumerators must agree
assert cliques == enumerate_maximal_cliques(data, "bronkerbosch")

odd = (-4, -2, -1, 0, 1, 2, 4)
print("\nodd clique maximal:", is_maximal_clique(data, odd))
print("interval:", is_interval(odd), " half-Sigma translate:", is_half_sigma_translate(data, odd))
print("residues:", residue_profile(odd, data.N))
