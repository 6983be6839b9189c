import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

settings.register_profile(
    "hamfix",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hamfix")


def cpn_b_lists(min_n=1, max_n=6, bound=8):
    """Admissible exponent lists for the projective-space model."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.integers(-bound, bound), min_size=n + 1, max_size=n + 1, unique=True
        )
    )


@st.composite
def quadric_b_lists(draw, ns=(3, 5), bound=8):
    """Admissible exponent lists for the quadric model (distinct |b_i| != 0)."""
    n = draw(st.sampled_from(ns))
    k = (n + 1) // 2
    mags = draw(st.lists(st.integers(1, bound), min_size=k, max_size=k, unique=True))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k))
    return [m * s for m, s in zip(mags, signs)]
