import numpy as np
from hypothesis import strategies as st


def exponent_lists(min_size=1, max_size=8, re_min=-0.45, re_max=5.0, im_max=5.0, real=False):
    """Strategy for lists of distinct exponents in the right region."""
    re = st.floats(re_min, re_max, allow_nan=False)
    if real:
        point = re.map(complex)
    else:
        point = st.builds(complex, re, st.floats(-im_max, im_max, allow_nan=False))
    return st.lists(point, min_size=min_size, max_size=max_size, unique=True)


def well_separated(points, delta=0.01):
    """Pseudo-hyperbolic separation of exponents: Carleson products of the
    kernel points all at least `delta`."""
    from muntz.basis import pseudo_hyperbolic_deltas
    pts = np.asarray(points, dtype=complex)
    if len(set(pts.tolist())) < pts.size:
        return False
    if pts.size < 2:
        return True
    from muntz.errors import DuplicatePoint
    try:
        return pseudo_hyperbolic_deltas(np.conj(pts) + 0.5).min() >= delta
    except DuplicatePoint:
        return False
