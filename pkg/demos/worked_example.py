"""The classical 4-concept repair walkthrough, end to end.

A well-known judgment matrix (four concepts, mild inconsistency) whose
eigenvector ranking nevertheless breaks the order-of-intensity postulate:
the expert said m_34 = 5 is a stronger preference than m_13 = 4, but the
ranking disagrees.  Watching the discrepancy matrix points straight at the
two judgments worth re-eliciting; after two revisions both order-
preservation guarantees hold.

Run: python demos/worked_example.py
"""

import numpy as np

from coprank import (check_poip_direct, cop_safety, eigenvector_ranking,
                     from_upper_triangle, local_discrepancy_matrix,
                     principal_eigen, saaty_index)


def show_matrix(title, m):
    print(f"\n{title}")
    with np.printoptions(precision=3, suppress=True):
        print(m.values)


def show_analysis(m):
    sol = principal_eigen(m)
    mu = eigenvector_ranking(m)
    disc = local_discrepancy_matrix(m, mu)
    print(f"weights:        {np.round(mu.weights, 3)}")
    print(f"lambda_max:     {sol.lambda_max:.4f}   saaty index: {saaty_index(sol.lambda_max, m.n):.4f}")
    with np.printoptions(precision=3, suppress=True):
        print("local discrepancy:")
        print(disc.values)
    i, j = disc.argmax
    print(f"global discrepancy: {disc.global_value:.3f} at ({i},{j})")
    report = cop_safety(m, mu)
    print(f"POP  safe: {report.pop_safe}   (every m_ij > 1 must exceed {report.pop_threshold:.3f})")
    print(f"POIP safe: {report.poip_safe}   (every qualifying ratio must exceed {report.poip_threshold:.3f})")
    for i, j, k, l in report.poip_violations:
        print(f"  broken: m({i},{j}) = {m.entry(i, j):g} > m({k},{l}) = {m.entry(k, l):g}, "
              f"but the ranking ranks the second pair more intensely "
              f"({mu.ratio(i, j):.3f} <= {mu.ratio(k, l):.3f})")
    return mu, disc


judgments = from_upper_triangle(4, {(1, 2): 2.5, (1, 3): 4, (1, 4): 9.5,
                                    (2, 3): 3, (2, 4): 6.5, (3, 4): 5})
show_matrix("expert judgments:", judgments)
mu, disc = show_analysis(judgments)

print("\n--- the direct POIP check agrees with the eyeballing above:")
print("violations:", check_poip_direct(judgments, mu))

i, j = disc.argmax
print(f"\n--- worst judgment is ({i},{j}); the ranking would rather see "
      f"{mu.ratio(i, j):.2f} than {judgments.entry(i, j):g}.")
print("the expert re-evaluates it to 3.")
step1 = judgments.set_entry(3, 4, 3)
show_matrix("after the first revision:", step1)
mu1, disc1 = show_analysis(step1)

i, j = disc1.argmax
print(f"\n--- next worst is ({i},{j}); the expert settles on 1.5.")
step2 = step1.set_entry(1, 2, 1.5)
show_matrix("after the second revision:", step2)
show_analysis(step2)

print("\nBoth safety conditions hold now: no ranking produced from this")
print("matrix by the eigenvector method can break POP or POIP, and the")
print("inconsistency index dropped by an order of magnitude on the way.")
