"""Integer partitions: conjugation, Frobenius coordinates, threshold test, enumeration.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  No trailing zeros are ever
stored, so two partitions are equal iff their tuples are equal.
"""

from dataclasses import dataclass


def check_partition(parts) -> tuple[int, ...]:
    """Canonicalize an iterable into a partition tuple, rejecting bad input.

    Trailing zeros are stripped; anything else invalid raises ValueError.
    """
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p <= 0:
            raise ValueError(f"part {i} is {p!r}, expected a positive integer")
        if i + 1 < len(parts) and parts[i + 1] > p:
            raise ValueError(f"parts must be weakly decreasing, got {parts[i]} < {parts[i + 1]} at index {i}")
    return parts


def size(lam: tuple[int, ...]) -> int:
    return sum(lam)


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate partition: part i is the number of parts of lam that are >= i."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm/leg lengths along the main diagonal of the Young diagram.

    alphas[i] = lam[i] - (i+1) and betas[i] = conjugate(lam)[i] - (i+1),
    for the d_rank diagonal cells.  Both sequences are strictly decreasing
    and sum(alphas) + sum(betas) + d_rank == |lam|.
    """

    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    @property
    def d_rank(self) -> int:
        return len(self.alphas)


def frobenius(lam: tuple[int, ...]) -> FrobeniusCoords:
    """Frobenius coordinates of a partition (Durfee rank = number of diagonal cells)."""
    conj = conjugate(lam)
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    alphas = tuple(lam[i] - (i + 1) for i in range(d))
    betas = tuple(conj[i] - (i + 1) for i in range(d))
    return FrobeniusCoords(alphas, betas)


def is_threshold(lam: tuple[int, ...]) -> bool:
    """True iff beta_i = alpha_i + 1 for every diagonal cell."""
    fc = frobenius(lam)
    return all(b == a + 1 for a, b in zip(fc.alphas, fc.betas))


def partitions_of(d: int, max_parts: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of d (at most max_parts parts if given), descending lex order.

    The order matters downstream: the Schur-expansion pivot picks the
    lexicographically greatest unprocessed key.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def threshold_partitions(d: int) -> list[tuple[int, ...]]:
    """TP(d): threshold partitions of d, by filtering partitions_of(d)."""
    return [lam for lam in partitions_of(d) if is_threshold(lam)]


def odd_row_count(lam: tuple[int, ...]) -> int:
    """Number of odd parts (odd rows of the Young diagram)."""
    return sum(1 for p in lam if p % 2 == 1)


def odd_column_count(lam: tuple[int, ...]) -> int:
    """Number of odd parts of the conjugate (odd columns of the diagram)."""
    return odd_row_count(conjugate(lam))


def pad(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """View of lam as an integer vector with exactly n coordinates."""
    if len(lam) > n:
        raise ValueError(f"partition has {len(lam)} parts, cannot pad to length {n}")
    return lam + (0,) * (n - len(lam))
