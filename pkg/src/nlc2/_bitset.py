"""Bitmask helpers for dense vertex sets.

Vertex sets throughout the package are plain Python integers used as
bitmasks: bit ``v`` is set exactly when vertex ``v`` belongs to the set.
Arbitrary-precision integers make this exact for any graph size.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bit(v: int) -> int:
    """Mask containing only vertex ``v``."""
    return 1 << v


def mask_of(vs: Iterable[int]) -> int:
    """Mask containing exactly the vertices in ``vs``."""
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    """Vertices of ``mask`` as an ascending list."""
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    """Number of vertices in ``mask``."""
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Smallest vertex in a non-empty ``mask``."""
    if not mask:
        raise ValueError("empty mask has no lowest bit")
    return (mask & -mask).bit_length() - 1
