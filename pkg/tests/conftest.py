import numpy as np
from hypothesis import strategies as st

from xstates.state import XStateParams

_unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
_sym = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
_VERTICES = np.array([[1, 1, -1], [1, -1, 1], [-1, 1, 1], [-1, -1, -1]], dtype=float)


@st.composite
def physical_x_states(draw, bell_diagonal=False):
    """Physical X states built from a valid density matrix.

    Diagonal weights are normalised; the anti-diagonal entries are bounded
    by the geometric means of their blocks, which is exactly positivity.
    """
    w = np.array([draw(_unit) for _ in range(4)]) + 1e-9
    d = w / w.sum()
    a14 = draw(_sym) * np.sqrt(d[0] * d[3])
    a23 = draw(_sym) * np.sqrt(d[1] * d[2])
    vals = [
        2 * (a14 + a23),
        2 * (a23 - a14),
        d[0] - d[1] - d[2] + d[3],
        d[0] + d[1] - d[2] - d[3],
        d[0] - d[1] + d[2] - d[3],
    ]
    if bell_diagonal:
        # convex combination of the four tetrahedron vertices
        vals = [*d @ _VERTICES, 0.0, 0.0]
    vals = np.clip(vals, -1.0, 1.0)
    return XStateParams.of(*(float(v) for v in vals))


# Acceptance criteria record one verdict each; the lines are repeated in the
# terminal summary so they are visible without -s.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
