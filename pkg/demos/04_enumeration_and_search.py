"""
Enumerating small semigroups and running a campaign
===================================================

Count semigroups up to isomorphism, then check every partition of every
semigroup of order at most 3 and look at how tight the bound is.
"""

import collections
import json
import tempfile
from pathlib import Path

from semicover.enumeration import enumerate_semigroups
from semicover.harness import CampaignConfig, run_search

for order in range(1, 5):
    iso = sum(1 for _ in enumerate_semigroups(order))
    anti = sum(1 for _ in enumerate_semigroups(order, include_anti_iso_dedup=True))
    print(f"order {order}: {iso} up to isomorphism, {anti} up to anti-isomorphism too")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "records.jsonl"
    summary = run_search(CampaignConfig(orders=(1, 3), out=out))
    print(json.dumps(summary.to_dict(), indent=1))

    # how far is the best cell from the n bound, by number of cells
    gaps = collections.Counter()
    for line in out.read_text().splitlines():
        rec = json.loads(line)
        gaps[rec["n"], rec["n"] - rec["best_value"]] += 1
    for (n, gap), count in sorted(gaps.items()):
        print(f"n={n}  n - best = {gap}: {count} records")
