import numpy as np
import pytest

from integral_htype.lie import structure_constants
from integral_htype.ungraded import extract_irreducible


def hamilton(x, y):
    """Quaternion product written out from i^2 = j^2 = k^2 = ijk = -1."""
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def left_matrix(mul, dim, a):
    """Dense matrix of x -> e_a x for a bilinear product on unit vectors."""
    M = np.zeros((dim, dim), dtype=np.int64)
    for b in range(dim):
        ea = [0] * dim
        eb = [0] * dim
        ea[a] = 1
        eb[b] = 1
        M[:, b] = mul(ea, eb)
    return M


@pytest.fixture(scope="session")
def tensors():
    return {k: structure_constants(extract_irreducible(k)) for k in range(1, 9)}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
