"""Bitmask helpers for monomials in exterior algebras.

A monomial is an int whose set bits are the generators it contains, in
increasing order.
"""
from functools import lru_cache


def popcount(x):
    return x.bit_count()


def merge_sign(x, y):
    """Sign of x*y relative to the sorted monomial x|y (x, y disjoint)."""
    inv = 0
    while y:
        low = y & -y
        inv += (x & ~((low << 1) - 1)).bit_count()
        y ^= low
    return -1 if inv & 1 else 1


def mono_mul(x, y):
    """Product of two monomials as (sign, mask); sign 0 if they share a generator."""
    if x & y:
        return 0, 0
    return merge_sign(x, y), x | y


def bits_of(x):
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


@lru_cache(maxsize=None)
def relabel(mask, posmap, width=4):
    """Move the block at position p to posmap[p] and re-sort.

    Generators inside a block keep their order; factors landing on the same
    position are multiplied in the original order.  Returns (sign, mask) with
    sign 0 when a generator repeats.
    """
    sign = 1
    out = 0
    low = (1 << width) - 1
    for p, q in enumerate(posmap):
        block = (mask >> (width * p)) & low
        if not block:
            continue
        moved = block << (width * q)
        if out & moved:
            return 0, 0
        if merge_sign(out, moved) < 0:
            sign = -sign
        out |= moved
    return sign, out
