#!/usr/bin/env python3
"""Run every verification suite at demonstration scale.

The suites draw reproducible random data and compare independently
implemented answers; a disagreement would be a bug in the package, so a
healthy run prints five PASS lines.  Use the CLI for full-scale runs:

    conestab verify main-theorem --trials 10000 --bound 20
"""

import sys

from conestab.verify import (
    TrialConfig,
    verify_hm_reduction,
    verify_intcone,
    verify_main_theorem,
    verify_r0,
    verify_star_equivalence,
)

runs = [
    # fan condition iff pattern-level stable/semistable/open agreement
    ("main-theorem", verify_main_theorem, TrialConfig(seed=1, trials=500, coord_bound=10)),
    # interior form iff membership form of the fan condition
    ("fan-condition forms", verify_star_equivalence, TrialConfig(seed=2, trials=500, coord_bound=10)),
    # membership off both rays forces interior membership (exhaustive box)
    ("pair-cone interior", verify_intcone, TrialConfig(seed=3, trials=1, coord_bound=4)),
    # dense one-parameter sweep never contradicts the finite reduction
    ("one-ps sweep", verify_hm_reduction, TrialConfig(seed=4, trials=50, coord_bound=10)),
    # trivial degree-0 invariants iff no invariant monomial
    ("degree-0 invariants", verify_r0, TrialConfig(seed=5, trials=500, coord_bound=10)),
]

failed = False
for name, suite, cfg in runs:
    report = suite(cfg)
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}  {name:22s} checked={report.checked}  details={report.details}")
    if not report.passed:
        failed = True
        print(f"      first failure: {report.first_failure}")

sys.exit(1 if failed else 0)
