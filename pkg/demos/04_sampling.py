"""Seeded Monte Carlo measurement of every system in the ensemble, checked
against the operator-level predictions: the mean empirical frequency is the
Born weight and its variance is p(1-p)/N.
"""

from freqop import EnsembleSpec, StateVector
from freqop import analytic
from freqop.sampler import empirical_frequency, run_trials, sample_outcomes

state = StateVector.two_level(0.36)
n, trials, seed = 100, 10_000, 42

rec = sample_outcomes(state, n, seed)
k, f0 = empirical_frequency(rec, 0)
print(f"one ensemble of N={n}: {k} outcomes were 0, empirical f_0 = {f0}")

summary = run_trials(state, n, trials, seed, j=0)
spec = EnsembleSpec(state, n, 0)
print(f"\n{trials} independent trials (rng {summary.rng_algorithm}, seed {seed}):")
print(f"  mean frequency    {summary.mean_frequency:.5f}   predicted {analytic.expectation(spec):.5f}")
print(f"  sample variance   {summary.sample_variance:.3e}  predicted {analytic.uncertainty(spec)**2:.3e}")
print(f"  stream rule: {summary.stream_rule}")
