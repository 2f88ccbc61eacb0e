"""Exact integer sequences built from set-partition counts.

Everything here is plain ``int`` arithmetic (Python integers are arbitrary
precision); no floating point is used anywhere. The central objects:

* ``stirling2(n, k)`` -- partitions of an n-element set into exactly k
  nonempty unlabeled blocks, memoized via the triangle recurrence
  ``S(n,k) = k*S(n-1,k) + S(n-1,k-1)``.
* ``ordered_bell(n)`` -- ordered set partitions (weak orderings) of an
  n-element set: ``sum(k! * S(n,k))``.
* the ``cyclic_*`` family -- set partitions whose blocks are arranged in a
  cycle, weighting by ``(k-1)!`` instead of ``k!``, with variants that keep
  only an even or only an odd number of blocks.
* ``worpitzky(n, k)`` -- ``k! * S(n+1, k+1)``.
* alternating variants of the weighted sums, used as cross-checks.

Brute-force enumeration counters (restricted growth strings and ordered
block sequences) live alongside so the closed-form routines can be tested
against an independent route.
"""

import threading
from dataclasses import dataclass
from math import factorial

__all__ = [
    "MAX_ENUMERATION_N",
    "MAX_ORDERED_ENUMERATION_N",
    "SequenceTable",
    "StirlingTriangle",
    "alternating_cyclic_sum",
    "alternating_factorial_sum",
    "count_ordered_partitions_exhaustive",
    "count_partitions_exhaustive",
    "cyclic_ordered_bell",
    "cyclic_ordered_bell_even",
    "cyclic_ordered_bell_odd",
    "factorial",
    "ordered_bell",
    "ordered_bell_parity",
    "ordered_set_partitions",
    "set_partitions",
    "stirling2",
    "stirling2_row",
    "worpitzky",
]

#: Largest n accepted by the exhaustive set-partition counter.
MAX_ENUMERATION_N = 12
#: Largest n accepted by the exhaustive ordered-set-partition counter.
MAX_ORDERED_ENUMERATION_N = 9


@dataclass(frozen=True)
class SequenceTable:
    """A named run of exact integer values; index i holds a(offset + i)."""

    name: str
    offset: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))


class StirlingTriangle:
    """Memoized rows of second-kind partition counts.

    Row ``n`` stores ``S(n, 0..n)``. Row extension is serialized with a
    lock so a shared instance is safe to use from several threads;
    completed rows are never mutated, and accessors hand out copies.
    """

    def __init__(self):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        """Index of the highest row computed so far."""
        return len(self._rows) - 1

    def _extend_to(self, n: int) -> None:
        # caller holds the lock
        while len(self._rows) <= n:
            prev = self._rows[-1]
            m = len(self._rows)
            row = [0] * (m + 1)
            row[m] = 1
            for k in range(1, m):
                row[k] = k * prev[k] + prev[k - 1]
            self._rows.append(row)

    def row(self, n: int) -> list[int]:
        """Return ``[S(n,0), ..., S(n,n)]`` as a fresh list."""
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        with self._lock:
            self._extend_to(n)
            return list(self._rows[n])

    def entry(self, n: int, k: int) -> int:
        """Return ``S(n, k)``; zero for ``k > n``."""
        if n < 0 or k < 0:
            raise ValueError(f"indices must be >= 0, got ({n}, {k})")
        if k > n:
            return 0
        with self._lock:
            self._extend_to(n)
            return self._rows[n][k]


_shared_triangle = StirlingTriangle()


def _require_at_least(n: int, minimum: int, name: str = "n") -> None:
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")


def _parity_residue(parity: str) -> int:
    try:
        return {"even": 0, "odd": 1}[parity]
    except KeyError:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}") from None


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-element set into exactly k nonempty blocks."""
    return _shared_triangle.entry(n, k)


def stirling2_row(n: int) -> list[int]:
    """The full row ``[S(n,0), ..., S(n,n)]``."""
    return _shared_triangle.row(n)


def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an n-element set: sum of k!*S(n,k)."""
    _require_at_least(n, 0)
    return sum(factorial(k) * s for k, s in enumerate(stirling2_row(n)))


def ordered_bell_parity(n: int, parity: str) -> int:
    """Ordered set partitions of [n] whose block count has the given parity.

    ``sum(k! * S(n,k))`` restricted to even or odd ``k``; defined for n >= 1.
    """
    _require_at_least(n, 1)
    residue = _parity_residue(parity)
    row = stirling2_row(n)
    return sum(factorial(k) * s for k, s in enumerate(row) if k % 2 == residue)


def cyclic_ordered_bell(n: int) -> int:
    """Set partitions of [n] with blocks arranged in a cycle: sum of (k-1)!*S(n,k)."""
    _require_at_least(n, 1)
    row = stirling2_row(n)
    return sum(factorial(k - 1) * row[k] for k in range(1, n + 1))


def cyclic_ordered_bell_even(n: int) -> int:
    """Cyclic arrangements with an even number of blocks: sum of (k-1)!*S(n,k), k even."""
    _require_at_least(n, 1)
    row = stirling2_row(n)
    return sum(factorial(k - 1) * row[k] for k in range(2, n + 1, 2))


def cyclic_ordered_bell_odd(n: int) -> int:
    """Cyclic arrangements with an odd number of blocks: sum of (k-1)!*S(n,k), k odd."""
    _require_at_least(n, 1)
    row = stirling2_row(n)
    return sum(factorial(k - 1) * row[k] for k in range(1, n + 1, 2))


def worpitzky(n: int, k: int) -> int:
    """The Worpitzky number ``k! * S(n+1, k+1)``."""
    _require_at_least(n, 0)
    _require_at_least(k, 0, "k")
    return factorial(k) * stirling2(n + 1, k + 1)


def alternating_factorial_sum(n: int) -> int:
    """``sum((-1)^k * k! * S(n,k))``; equals (-1)^n for every n >= 1."""
    _require_at_least(n, 1)
    row = stirling2_row(n)
    return sum((-1) ** k * factorial(k) * s for k, s in enumerate(row))


def alternating_cyclic_sum(n: int) -> int:
    """``sum((-1)^k * (k-1)! * S(n,k))`` over k >= 1.

    Equals the even-block cyclic count minus the odd-block one: -1 at n=1
    and 0 for all n >= 2.
    """
    _require_at_least(n, 1)
    row = stirling2_row(n)
    return sum((-1) ** k * factorial(k - 1) * row[k] for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# Exhaustive enumeration (independent test oracles)
# ---------------------------------------------------------------------------


def set_partitions(n: int):
    """Yield every partition of {0,..,n-1} as a tuple of element tuples.

    Enumeration follows restricted growth strings: element i either joins
    an existing block or opens the next new one, so each partition is
    produced exactly once, blocks ordered by their smallest element.
    """
    _require_at_least(n, 0)
    if n == 0:
        yield ()
        return

    blocks: list[list[int]] = []

    def extend(i):
        if i == n:
            yield tuple(tuple(block) for block in blocks)
            return
        for block in blocks:
            block.append(i)
            yield from extend(i + 1)
            block.pop()
        blocks.append([i])
        yield from extend(i + 1)
        blocks.pop()

    yield from extend(0)


def count_partitions_exhaustive(n: int, k: int) -> int:
    """Count k-block partitions of an n-element set by explicit enumeration.

    Independent of :func:`stirling2`; capped at ``n <= MAX_ENUMERATION_N``
    to keep the enumeration at desk scale.
    """
    _require_at_least(n, 0)
    _require_at_least(k, 0, "k")
    if n > MAX_ENUMERATION_N:
        raise ValueError(
            f"exhaustive enumeration is capped at n <= {MAX_ENUMERATION_N}, got {n}"
        )
    return sum(1 for partition in set_partitions(n) if len(partition) == k)


def ordered_set_partitions(n: int):
    """Yield every sequence of disjoint nonempty blocks covering {0,..,n-1}.

    Blocks are element tuples; the first block ranges over all nonempty
    subsets (as bitmasks) of the remaining elements, then the rest is
    partitioned recursively, so every ordered partition appears once.
    """
    _require_at_least(n, 0)

    def elements(mask):
        return tuple(i for i in range(n) if mask >> i & 1)

    chosen: list[tuple[int, ...]] = []

    def extend(remaining):
        if not remaining:
            yield tuple(chosen)
            return
        submask = remaining
        while submask:
            chosen.append(elements(submask))
            yield from extend(remaining ^ submask)
            chosen.pop()
            submask = (submask - 1) & remaining

    yield from extend((1 << n) - 1)


def count_ordered_partitions_exhaustive(n: int) -> int:
    """Count ordered set partitions of an n-element set by explicit enumeration.

    Independent of :func:`ordered_bell`; capped at
    ``n <= MAX_ORDERED_ENUMERATION_N``.
    """
    _require_at_least(n, 0)
    if n > MAX_ORDERED_ENUMERATION_N:
        raise ValueError(
            "exhaustive enumeration is capped at "
            f"n <= {MAX_ORDERED_ENUMERATION_N}, got {n}"
        )
    return sum(1 for _ in ordered_set_partitions(n))
