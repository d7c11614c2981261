"""Seeded corpus checks, maximin search, and the per - diam counterexample hunt."""

from convexcurves import verifier
from convexcurves.reports import reports_to_csv

entries = verifier.corpus(200, seed=0)
for theorem in ("T1_four_points", "T2_double_perimeter", "T4_extreme_curve", "BARRIER_half"):
    reports = verifier.run_corpus(theorem, entries)
    print(f"{theorem:22s} {sum(r.passed for r in reports)}/{len(reports)} pass, min slack {min(r.slack for r in reports):.4g}")

print(reports_to_csv(verifier.run_corpus("T1_four_points", entries[:3])))

shape = entries[40].shape
for res in verifier.maximin_profile(shape, [2, 3, 4, 5], restarts=8):
    print(f"maximin k={res.k}: {res.value:.5f} (half perimeter {0.5 * shape.perimeter:.5f})")

rep = verifier.conjecture_search(2000, seed=1)
print(f"search over {rep.trials} trials: min slack {rep.min_slack:.3g}, family minima {rep.family_min}")
print(f"candidates: {len(rep.candidates)}")
