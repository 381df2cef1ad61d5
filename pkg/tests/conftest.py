import sys
from pathlib import Path

import pytest

# make the sibling oracle helpers importable from any test module
sys.path.insert(0, str(Path(__file__).resolve().parent))


@pytest.fixture(scope="session")
def corpus_results():
    """One shared run of the shipped corpus (two-prime plan, seed 0)."""
    from freecurve.corpus import run_corpus
    from freecurve.data import shipped_corpus_dir

    return run_corpus(shipped_corpus_dir(), seed=0, mode="auto")


@pytest.fixture(scope="session")
def random_curve_survey():
    """Classification survey over >= 50 random reduced curves of degree 4..9."""
    from curvegen import random_reduced_curves
    from freecurve.classify import classify
    from freecurve.fields import FieldPlan
    from freecurve.invariants import tjurina
    from freecurve.syzygy import mdr

    survey = []
    plan = FieldPlan.primes(0)
    for f in random_reduced_curves(52):
        r = mdr(f, plan)
        tau = tjurina(f, plan)
        classification = classify(f, plan)
        survey.append((f, r, tau, classification))
    return survey
