"""
CM test in rank two
===================

In higher rank the test runs over the finitely many sign patterns of
one-parameter subgroups and asks an integer feasibility question for
each one.  The hexagon weights satisfy every hypothesis; the skew
configuration is not weakly symmetric and gets refused.
"""
from toricnccr.cm_general import cm_verdicts, local_weight_membership
from toricnccr.errors import HypothesisViolated
from toricnccr.weights import enumerate_lambda_classes, lambda_class_of, profile, validate

hexagon = validate(2, [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])
print(profile(hexagon))
print("lambda classes:", len(enumerate_lambda_classes(hexagon)))

radius = 3
verdicts = cm_verdicts(hexagon, [(x, y) for y in range(radius, -radius - 1, -1)
                                 for x in range(-radius, radius + 1)])
# a small picture: '#' marks CM weights
for y in range(radius, -radius - 1, -1):
    print("  " + " ".join("#" if verdicts[(x, y)] else "." for x in range(-radius, radius + 1)))

skew = validate(2, [(1, 0), (2, 0), (0, 1), (-1, 1), (-1, -1), (-1, -1)])
try:
    cm_verdicts(skew, [(0, 0)])
except HypothesisViolated as exc:
    print("\nskew config:", exc)

# the local condition itself is still computable
cls = lambda_class_of(skew, (2, 1))
print("(-3,-1) in local weights of lambda=(2,1):", local_weight_membership(skew, cls, (-3, -1)))
