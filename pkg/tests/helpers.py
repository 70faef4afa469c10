import numpy as np
from hypothesis import strategies as st

angles = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi, allow_nan=False, allow_infinity=False)
deltas = st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False, allow_infinity=False)
rapidities = st.floats(min_value=0.0, max_value=4.0, allow_nan=False, allow_infinity=False)


@st.composite
def unit_vectors(draw):
    v = np.array([draw(st.floats(-1, 1)) for _ in range(3)])
    if np.linalg.norm(v) < 1e-3:
        v = np.array([0.0, 0.0, 1.0])
    return v / np.linalg.norm(v)


def random_state(rng, n):
    psi = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return psi / np.linalg.norm(psi)


def close(x, y, atol=1e-12, rtol=0.0):
    """Entrywise |x - y| <= atol with no relative slack."""
    return np.allclose(x, y, rtol=rtol, atol=atol)
