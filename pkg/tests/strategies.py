"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from grothpos.shapes import Partition, partitions_upto

_SMALL = {n: partitions_upto(n) for n in range(9)}


def partitions_of_size_at_most(n: int):
    return st.sampled_from(_SMALL[n])


def rationals(max_num: int = 9, max_den: int = 9, upper: Fraction | None = None):
    s = st.builds(Fraction, st.integers(0, max_num), st.integers(1, max_den))
    if upper is not None:
        s = s.filter(lambda x: x < upper)
    return s


def nested_pair(n: int):
    """``(outer, inner)`` with ``inner ⊆ outer`` and ``|outer| <= n``."""
    def pick(outer):
        inners = [mu for mu in _SMALL[outer.size] if outer.contains(mu)]
        return st.tuples(st.just(outer), st.sampled_from(inners))

    return partitions_of_size_at_most(n).flatmap(pick)


__all__ = ["Partition", "nested_pair", "partitions_of_size_at_most", "rationals"]
