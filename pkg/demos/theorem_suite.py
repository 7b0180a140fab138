"""Run every mechanical check and write the JSON report.

Each claim comes back as a report with one entry per instance; the
product conjecture is open, so its failures would be listed as findings.
"""

import json
import sys

from cleangraph import run_suite

reports = run_suite()
for r in reports:
    print(f"{r.claim_id:<22} {r.suite_verdict:<10} {r.instances_checked:>5} instances  {r.wall_time:6.2f}s")
    if r.summary:
        print("   ", r.summary)

out = sys.argv[1] if len(sys.argv) > 1 else "report.json"
with open(out, "w", encoding="utf-8") as fh:
    json.dump([r.to_dict() for r in reports], fh, indent=1, ensure_ascii=False)
print("wrote", out)
