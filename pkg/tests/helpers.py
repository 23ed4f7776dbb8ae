"""Shared test utilities: word enumeration and the factor-witness check."""

from itertools import product


def all_words(alphabet="ab", max_len=6):
    for length in range(max_len + 1):
        for tup in product(alphabet, repeat=length):
            yield "".join(tup)


def check_factor_witness(us, vs, fw):
    """The located v part occurs in the named u part at the given offset,
    and non-empty occurrences are position-aligned in the base word."""
    i, j, off = fw.i - 1, fw.j - 1, fw.offset
    assert 0 <= i < len(us)
    assert 0 <= j < len(vs)
    u, v = us[i], vs[j]
    if v:
        assert 0 <= off <= len(u) - len(v)
    else:
        assert off == 0
    assert u[off:off + len(v)] == v
    if v:
        ustart = sum(map(len, us[:i]))
        vstart = sum(map(len, vs[:j]))
        assert ustart + off == vstart
