"""Small helpers for ints used as bit sets and for n-bit words.

Conventions used throughout the package:

* A vertex set over ``n`` indexed vertices is an int whose bit ``v`` marks
  vertex ``v``.
* A point of the hypercube {0,1}^n is an int ``w`` where bit ``i`` of ``w``
  is coordinate ``x_{i+1}``.  Its string rendering is ``n`` characters long
  with coordinate ``x_1`` first, so word 1 with n=3 renders as ``"100"``.
"""

from __future__ import annotations

from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def point_to_str(word: int, n: int) -> str:
    """Render an n-bit word as a coordinate string, x_1 first."""
    if not 0 <= word < (1 << n):
        raise ValueError(f"word {word} out of range for {n} bits")
    return "".join("1" if (word >> i) & 1 else "0" for i in range(n))


def str_to_point(s: str) -> int:
    """Parse a coordinate string (x_1 first) back into an int word."""
    word = 0
    for i, ch in enumerate(s):
        if ch == "1":
            word |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid word character {ch!r} in {s!r}")
    return word
