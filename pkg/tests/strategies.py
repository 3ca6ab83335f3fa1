"""Hypothesis strategies shared across the test modules."""

from hypothesis import strategies as st

from qbailey.series import from_coeffs

small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def truncated_series(draw, min_lo=-4, max_lo=4, max_len=12):
    lo = draw(st.integers(min_lo, max_lo))
    cs = draw(st.lists(small_ints, max_size=max_len))
    extra = draw(st.integers(0, 4))
    return from_coeffs(cs, lo, lo + len(cs) + extra)


@st.composite
def unit_series(draw, min_lo=-3, max_lo=3, max_len=10):
    """Truncated series whose leading coefficient is +-1 and which is known past it."""
    lo = draw(st.integers(min_lo, max_lo))
    lead = draw(st.sampled_from([1, -1]))
    tail = draw(st.lists(small_ints, max_size=max_len))
    extra = draw(st.integers(1, 5))
    return from_coeffs([lead] + tail, lo, lo + 1 + len(tail) + extra)


@st.composite
def exact_polys(draw, max_len=8):
    lo = draw(st.integers(-3, 3))
    cs = draw(st.lists(small_ints, max_size=max_len))
    return from_coeffs(cs, lo)
