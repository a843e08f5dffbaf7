"""Reference partition counts by direct enumeration.

Everything in this module counts partitions the slow, obviously correct
way: generate (or recursively walk) the actual part sequences and tally
them.  No shared state, no recurrence tables, nothing in common with
the production algorithms, so agreement between the two is meaningful.

Inputs are capped at ``ORACLE_LIMIT`` because enumeration cost grows
superpolynomially; past the cap an ``OracleLimitError`` is raised
rather than silently burning hours.
"""

__all__ = [
    "ORACLE_LIMIT",
    "OracleLimitError",
    "count_partitions",
    "count_with_greatest_part",
    "distinct_length_counts",
    "iter_partitions",
    "partition_length_counts",
]

ORACLE_LIMIT = 80


class OracleLimitError(ValueError):
    """Input too large for enumeration to finish in reasonable time."""


def _guard(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError(f"n must be an integer, got {type(n).__name__}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ORACLE_LIMIT:
        raise OracleLimitError(f"n={n} exceeds the oracle limit of {ORACLE_LIMIT}")


def _check_m(m):
    if isinstance(m, bool) or not isinstance(m, int):
        raise ValueError(f"m must be an integer, got {type(m).__name__}")
    if m < 0:
        raise ValueError("m must be nonnegative")


def _ascending(n):
    # Kelleher's accelerated ascending-composition generator: each
    # partition of n appears exactly once as a nondecreasing list.
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _distinct_desc(remaining, cap):
    # strictly decreasing part tuples summing to remaining, parts <= cap
    if remaining == 0:
        yield ()
        return
    for p in range(min(cap, remaining), 0, -1):
        for rest in _distinct_desc(remaining - p, p - 1):
            yield (p,) + rest


def _exact_desc(remaining, cap, parts_left, step):
    # nonincreasing (step 0) or strictly decreasing (step 1) tuples of
    # exactly parts_left parts summing to remaining
    if parts_left == 0:
        if remaining == 0:
            yield ()
        return
    if remaining < parts_left:
        return
    for p in range(min(cap, remaining), 0, -1):
        for rest in _exact_desc(remaining - p, p - step, parts_left - 1, step):
            yield (p,) + rest


def iter_partitions(n, m=None, distinct=False):
    """Yield each partition of n once, as a nonincreasing tuple.

    With m, only partitions into exactly m parts; with distinct=True,
    only partitions into pairwise different parts.  n = 0 yields the
    empty tuple (and nothing else unless m rules it out).
    """
    _guard(n)
    if m is not None:
        _check_m(m)
        yield from _exact_desc(n, n, m, 1 if distinct else 0)
        return
    if distinct:
        yield from _distinct_desc(n, n)
        return
    if n == 0:
        yield ()
        return
    for part in _ascending(n):
        yield tuple(reversed(part))


def count_partitions(n, m=None, distinct=False):
    """Number of partitions of n, by recursive walk with memoization.

    Same filters as iter_partitions.  The memo lives only for the
    duration of the call.
    """
    _guard(n)
    step = 1 if distinct else 0
    memo = {}
    if m is None:

        def total(remaining, cap):
            if remaining == 0:
                return 1
            if cap <= 0:
                return 0
            key = (remaining, cap)
            got = memo.get(key)
            if got is None:
                got = sum(
                    total(remaining - p, p - step)
                    for p in range(min(cap, remaining), 0, -1)
                )
                memo[key] = got
            return got

        return total(n, n)
    _check_m(m)

    def exact(remaining, cap, parts_left):
        if parts_left == 0:
            return 1 if remaining == 0 else 0
        if remaining < parts_left or cap <= 0:
            return 0
        key = (remaining, cap, parts_left)
        got = memo.get(key)
        if got is None:
            got = sum(
                exact(remaining - p, p - step, parts_left - 1)
                for p in range(min(cap, remaining), 0, -1)
            )
            memo[key] = got
        return got

    return exact(n, n, m)


def partition_length_counts(n):
    """counts[m] = partitions of n into exactly m parts, for m = 0..n.

    One enumeration pass; the whole row of counts for the price of one.
    """
    _guard(n)
    counts = [0] * (n + 1)
    if n == 0:
        counts[0] = 1
        return counts
    for part in _ascending(n):
        counts[len(part)] += 1
    return counts


def distinct_length_counts(n):
    """counts[m] = partitions of n into exactly m distinct parts."""
    _guard(n)
    counts = [0] * (n + 1)
    for part in _distinct_desc(n, n):
        counts[len(part)] += 1
    return counts


def count_with_greatest_part(n, k):
    """Partitions of n whose largest part is exactly k, by enumeration.

    By conjugation this equals the count with exactly k parts, which
    makes it a useful independent cross-check.
    """
    _guard(n)
    _check_m(k)
    if k == 0:
        return 1 if n == 0 else 0
    return sum(1 for part in iter_partitions(n) if part and part[0] == k)
