"""Shared fixtures: the classical 4-concept worked example and friends.

``demo_matrix`` is the well-known judgment matrix from the order-preservation
debate (four concepts, POIP violated by the eigenvector ranking);
``revised_matrix`` is the same matrix after the two expert revisions
(3,4) -> 3 and (1,2) -> 1.5 that restore both guarantees.
"""

import numpy as np
import pytest

from coprank import PCMatrix, consistent_matrix, from_upper_triangle

DEMO_UPPER = {(1, 2): 2.5, (1, 3): 4.0, (1, 4): 9.5,
              (2, 3): 3.0, (2, 4): 6.5, (3, 4): 5.0}

# eigenvector ranking of demo_matrix, frozen from the converged solver and
# cross-checked against general-purpose eigensolvers to 12+ digits
DEMO_WEIGHTS = np.array([0.53279882, 0.28718784, 0.13899790, 0.04101545])
DEMO_LAMBDA = 4.12239426408355
DEMO_SAATY = 0.0407980880278499
DEMO_GLOBAL_DISC = 0.4753982556653593

REVISED_LAMBDA = 4.010957647388666
REVISED_SAATY = 0.0036525491295552
REVISED_GLOBAL_DISC = 0.14920814134509053

# published 3-decimal values for the same example
DEMO_WEIGHTS_3DP = [0.533, 0.287, 0.139, 0.041]
REVISED_WEIGHTS_3DP = [0.487, 0.338, 0.126, 0.048]
DEMO_DISC_3DP = {(1, 2): 0.348, (1, 3): 0.044, (1, 4): 0.367,
                 (2, 3): 0.452, (2, 4): 0.077, (3, 4): 0.475}
REVISED_DISC_3DP = {(1, 2): 0.038, (1, 3): 0.033, (1, 4): 0.064,
                    (2, 3): 0.119, (2, 4): 0.077, (3, 4): 0.149}


@pytest.fixture
def demo_matrix() -> PCMatrix:
    return from_upper_triangle(4, DEMO_UPPER)


@pytest.fixture
def revised_matrix(demo_matrix) -> PCMatrix:
    return demo_matrix.set_entry(3, 4, 3.0).set_entry(1, 2, 1.5)


@pytest.fixture
def consistent4() -> PCMatrix:
    return consistent_matrix([5.0, 3.0, 2.0, 1.0])
