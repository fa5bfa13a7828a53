"""Eigenvector vs row-geometric-mean rankings.

Discrepancy and the order-preservation checks accept any ranking vector.
On consistent matrices the two derivation methods are identical; on
inconsistent ones they drift apart slightly, and each gets its own
discrepancy picture.

Run: python demos/ranking_methods.py
"""

import numpy as np

from coprank import (consistent_matrix, eigenvector_ranking, cop_safety,
                     from_upper_triangle, geometric_mean_ranking,
                     global_discrepancy)

print("consistent matrix built from weights [5, 3, 2, 1]:")
m = consistent_matrix([5, 3, 2, 1])
ev = eigenvector_ranking(m)
gm = geometric_mean_ranking(m)
print(f"  eigenvector:    {np.round(ev.weights, 6)}")
print(f"  geometric mean: {np.round(gm.weights, 6)}")
print(f"  max difference: {np.max(np.abs(ev.weights - gm.weights)):.2e}")

print("\ninconsistent matrix (the classical 4-concept example):")
m = from_upper_triangle(4, {(1, 2): 2.5, (1, 3): 4, (1, 4): 9.5,
                            (2, 3): 3, (2, 4): 6.5, (3, 4): 5})
ev = eigenvector_ranking(m)
gm = geometric_mean_ranking(m)
print(f"  eigenvector:    {np.round(ev.weights, 4)}")
print(f"  geometric mean: {np.round(gm.weights, 4)}")

for name, mu in (("eigenvector", ev), ("geometric mean", gm)):
    d = global_discrepancy(m, mu)
    report = cop_safety(m, mu)
    print(f"  {name}: global discrepancy {d:.4f}, "
          f"POP safe {report.pop_safe}, POIP safe {report.poip_safe}, "
          f"direct POIP violations {len(report.poip_violations)}")

print("\nthe POIP break in this matrix is not an artifact of the eigenvector")
print("method: the geometric-mean ranking trips over the same pair.")
