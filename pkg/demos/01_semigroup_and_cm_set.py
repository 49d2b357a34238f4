"""
Non-CM weights of a rank-one torus action
=========================================

Weights -3,-2,-2,2,2,3.  The shifted semigroup S+ = N + <2,3> decides
which integer weights fail to be Cohen-Macaulay; everything else is a
finite window around zero.
"""
from toricnccr.semigroup import build_rank1, cm_set, in_S_plus, p_of, q_of
from toricnccr.weights import sigma_zonotope, validate

config = validate(1, [-3, -2, -2, 2, 2, 3])
data = build_rank1(config)

print("generators:", data.gens)
print("N =", data.N, " Frobenius =", data.F, " B =", data.B)

# 7 = N + 0 is the smallest element of S+, 8 is the gap left by F = 1
for n in range(5, 12):
    print(f"  {n:3d} in S+ ? {in_S_plus(data, n)}")

cms = cm_set(data)
print("CM weights:", cms)
print("Sigma:", sigma_zonotope(config).describe())

# every |mu| < N is CM; the extra pair +-8 comes from the Frobenius gap
assert all(m in cms for m in range(-6, 7)) and 8 in cms and 7 not in cms

###############################################################################
# The residue-class functions: the least p >= 1 (resp. greatest q <= -1) that
# puts i + pN in S+ (resp. -(i + qN) in S+).
for i in range(data.N):
    print(f"  i={i}: p={p_of(data, i)}, q={q_of(data, i)}")
