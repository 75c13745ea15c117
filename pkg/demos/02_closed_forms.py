"""Closed-form ensemble statistics and the 1/N distance law, cross-checked
against the dense oracle where the dense oracle can reach.
"""

from freqop import EnsembleSpec, StateVector
from freqop import analytic, dense
from freqop.analysis import convergence_sweep

state = StateVector.two_level(0.5)

print("p = 0.5: expectation, uncertainty, distance^2, gram vs N")
for n in (2, 5, 7):
    spec = EnsembleSpec(state, n, 0)
    st = analytic.statistics(spec)
    dd = dense.distance_sq_dense(spec)
    print(
        f"  N={n}: <F>={st.expectation:.4f}  dF={st.uncertainty:.4f}  "
        f"|F psi - p psi|^2={st.distance_sq:.6f} (dense {dd:.6f})  "
        f"gram={st.gram:.6f}"
    )

sweep = convergence_sweep(state, 0, [10, 100, 1000, 10000])
print("\nDistance law over large N (no dense matrices needed):")
for row in sweep.rows:
    print(f"  N={row.n:>6}  distance^2 = {row.distance_sq:.2e}")
print(f"log-log slope: {sweep.slope:.9f}  (the 1/N law)")
