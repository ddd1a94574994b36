"""GF(2) linear algebra on int bitsets."""

from __future__ import annotations

from typing import Iterable


def rank(rows: Iterable[int]) -> int:
    """Rank of the 0/1 matrix whose rows are the given bitmasks.

    Incremental elimination keyed by leading bit; each row is reduced
    against the basis built so far.
    """
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            other = pivots.get(lead)
            if other is None:
                pivots[lead] = row
                r += 1
                break
            row ^= other
    return r
