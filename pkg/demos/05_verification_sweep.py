"""Run every theorem check over all quasi completely regular semirings of order <= 3.

Each verdict is holds, fails (with a witness) or not-applicable. The one
recurring failure is the description of nu by idempotent pairs alone: it
is exact on completely regular semirings and too fine otherwise.
"""
from collections import Counter

from semicong import is_completely_regular_semiring
from semicong.enumeration import enumerate_semirings
from semicong.verify import TAGS, verify

tally = Counter()
l32_fails_on_cr = 0
for n in (1, 2, 3):
    for S in enumerate_semirings(n, filters=["qcr"]):
        report = verify(S)
        for tag, v in report.results.items():
            tally[tag, v.status] += 1
        if "L3.2" in report.failures and is_completely_regular_semiring(S):
            l32_fails_on_cr += 1

for tag in TAGS:
    counts = {s: tally[tag, s] for s in ("holds", "fails", "not-applicable") if tally[tag, s]}
    print(f"{tag:6} {counts}")
print("L3.2 failures on completely regular instances:", l32_fails_on_cr)
