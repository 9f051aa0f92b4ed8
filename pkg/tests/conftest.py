"""Shared hypothesis strategies drawn from the exact partition enumerator."""

from hypothesis import strategies as st

from altchar.partitions import has_distinct_odd_parts, is_self_conjugate, partitions


def partition_pool(max_n: int, min_n: int = 1, pred=None) -> list:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(p for p in partitions(n) if pred is None or pred(p))
    return out


small_partitions = st.sampled_from(partition_pool(12))
mid_partitions = st.sampled_from(partition_pool(18))
distinct_odd_types = st.sampled_from(partition_pool(17, pred=has_distinct_odd_parts))
self_conjugate_shapes = st.sampled_from(partition_pool(17, pred=is_self_conjugate))


@st.composite
def shape_type_pairs(draw, max_n: int = 9):
    """A shape and a cycle type of the same weight."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = partitions(n)
    return draw(st.sampled_from(pool)), draw(st.sampled_from(pool))


@st.composite
def small_perms(draw, max_n: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return tuple(draw(st.permutations(range(n))))
