"""
A small randomized run
======================

The experiment harness draws seeded random subgroups and checks every
property it can on each one. Reduced-word samples expose foldings whose base
is a leaf; those have no sources or sinks yet no trail decomposition.
"""

from stallings.experiment import ExperimentConfig, format_report, run_experiment

for dist in ("positive-words", "reduced-words"):
    report = run_experiment(ExperimentConfig(seed=7, samples=300, distribution=dist))
    print(format_report(report))
