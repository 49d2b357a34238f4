"""
Cross-checking against brute force
==================================

Draw random rank-one configurations and compare each fast path with its
naive counterpart.  The same run is available as
``toricnccr check --random 20 --seed 7``.
"""
import sys

from toricnccr.suite import all_passed, check_config, random_rank1_suite

n = int(sys.argv[1]) if len(sys.argv) > 1 else 20
failures = 0
for config in random_rank1_suite(n, seed=7):
    results = check_config(config)
    ok = all_passed(results)
    failures += not ok
    print(("PASS" if ok else "FAIL"), config)
    if not ok:
        for r in results:
            print("   ", r.line())

print(f"{n - failures}/{n} configurations agree")
