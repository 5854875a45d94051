"""Orientation dependence and the reach of the thermal ladder.

Part one: the torque about the contact normal.  The energy scales like
-1/sin(theta), so perpendicular cylinders sit at an energy maximum: the
torque vanishes there and is negative below, driving the pair toward
alignment.

Part two: the Matsubara sum against the zero-temperature integral for a
Neumann pair.  At 2 pi T d well below one the ladder reproduces the
integral; raising T an order of magnitude leaves a single surviving term
and the classical, temperature-linear regime takes over.
"""

import math

from casimir_cylinders import engine

g = engine.Geometry(6.0, math.pi / 2)

print("torque (zero-T, EM), d = 6R:")
for theta in (math.pi / 3, 5 * math.pi / 12, math.pi / 2):
    res = engine.torque(
        engine.Geometry(6.0, theta), "em", regime="zero_t",
        n_max=2, n_k=32, n_kappa=24,
    )
    print(f"  theta = {theta:7.4f}   tau = {res.value:+.5e}"
          f"   (est {res.est_error:.1e})")

print()
print("Neumann finite-T ladder vs the T = 0 integral, d = 6R:")
zero = engine.energy_zero_T(g, "neumann", n_max=2, n_k=48, n_kappa=40,
                            tol=None)
print(f"  T = 0        E = {zero.value:+.6e}")
for temperature in (0.002, 0.02, 0.2):
    res = engine.energy_finite_T(g, "neumann", temperature=temperature,
                                 n_max=2, n_k=48)
    print(f"  T = {temperature:<6g} E = {res.value:+.6e}"
          f"   E / E(T=0) = {res.value / zero.value:.4f}")
