from hypothesis import strategies as st


@st.composite
def partitions(draw, max_len=5, max_part=5):
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_len))
    return tuple(sorted(parts, reverse=True))
