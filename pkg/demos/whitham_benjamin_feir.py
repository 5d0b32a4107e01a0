"""The Benjamin-Feir cutoff of the Whitham equation and its relatives.

Small-amplitude periodic waves of the Whitham equation are modulationally
unstable exactly for wave numbers above k* ~ 1.146, found here as the
unique sign change of Gamma(k).  The same machinery gives the fractional
KdV threshold at alpha = 1 and uniform stability for the ILW family.
"""
from modwave import (benjamin_feir_cutoff, delta_discriminant, delta_ilw,
                     lambda_fkdv, lambda_index, stokes_expand, stokes_residual,
                     whitham_symbol)

sym = whitham_symbol()
kstar, bracket = benjamin_feir_cutoff(sym)
print(f"Whitham cutoff k* = {kstar:.6f}  (bracket width {bracket[1]-bracket[0]:.1e})")

print("\n  k     Gamma(k)      Lambda(k)     small-amplitude verdict")
for k in (0.5, 0.9, 1.1, 1.146, 1.2, 1.5, 2.0, 3.0):
    lam, gam = lambda_index(k, sym)
    verdict = "stable" if lam > 0 else ("unstable" if lam < 0 else "threshold")
    print(f" {k:5.3f}  {gam: .6f}   {lam: .6f}    {verdict}")

# the discriminant itself at a small fixed amplitude
print("\nDelta_{xi,k,A} at A=0.01, xi=1e-4:")
for k in (1.0, 2.0):
    d = delta_discriminant(k, 1e-2, 1e-4, sym)
    print(f"  k={k}: {d: .3e}  ({'stable' if d > 0 else 'unstable'})")

# Stokes expansion sanity: the residual is O(A^3)
print("\nStokes residual order (Whitham, k=2):")
for A in (1e-2, 5e-3, 2.5e-3):
    r = stokes_residual(stokes_expand(2.0, A, 0.0, sym), sym)
    print(f"  A={A:.4f}: residual {r:.3e}")

print("\nfKdV index at k=1 (sign flips at alpha = 1):")
for al in (0.6, 0.8, 1.0, 1.2, 1.5):
    print(f"  alpha={al}: Lambda_fKdV = {lambda_fkdv(1.0, al): .4e}")

print("\nILW: Delta_ILW positive on a (k, H) grid:")
grid = [(k, H) for k in (0.5, 1.0, 2.0, 4.0) for H in (0.5, 1.0, 2.0)]
print("  min over grid:", min(delta_ilw(k, H) for k, H in grid), "> 0")
