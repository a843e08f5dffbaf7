"""Grow-only cached lists of the partition numbers P(n) and Q(n).

P(n) counts all integer partitions of n, Q(n) those with pairwise
distinct parts.  Each list can be extended by either of two independent
recurrences (selected per cache at construction time), which the test
suite cross-validates against each other:

* P: "euler" uses the classic pentagonal-number lags; "ewell" (default)
  mixes triangular lags, taken only where the shifted index is divisible
  by four, with doubled square lags.  Ewell needs fewer terms per entry.
* Q: "ewell" reads doubled pentagonal lags off a P list; "merca"
  (default) is self-contained, combining tripled square lags with an
  indicator of the generalized pentagonal numbers.

Extension always restarts at the first missing index, so a cache only
ever grows and existing entries are never rewritten.  All values are
exact Python integers.

Thread contract: concurrent readers of the already materialized prefix
are safe; any call that may extend a cache (``ensure``, or indexing past
the end) requires exclusive access.  No locking is done here; callers
that share a cache across threads must serialize writes themselves.
"""

import hashlib
import re
from math import isqrt
from pathlib import Path

# Indices (n, m) are bounded; the counted values themselves are not.
INDEX_CEILING = 2**62


def _check_index(value, name="n"):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    if value > INDEX_CEILING:
        raise ValueError(f"{name} exceeds the index ceiling 2**62")


def _is_gp(n):
    # generalized pentagonal <=> 24n + 1 is a square with root = +-1 mod 6
    x = 24 * n + 1
    r = isqrt(x)
    return r * r == x and r % 6 in (1, 5)


def is_generalized_pentagonal(n: int) -> bool:
    """True when n = k(3k +- 1)/2 for some k >= 0 (0, 1, 2, 5, 7, 12, ...)."""
    _check_index(n)
    return _is_gp(n)


# Start offsets for the triangular-lag scan in the Ewell P recurrence,
# selected by n mod 4.  The lag k(k+1)/2 mod 4 repeats with period 8 in k
# as {0, 1, 3, 2, 2, 3, 1, 0}, so each residue is hit by exactly two k
# values per period; advancing k by 8 keeps the residue fixed.
_TRI_START_A = (0, 1, 3, 2)
_TRI_START_B = (7, 6, 4, 5)


def _extend_p_euler(values, n):
    # P(i) = sum_{k>=1} (-1)^(k+1) [P(i - k(3k-1)/2) + P(i - k(3k+1)/2)]
    for i in range(len(values), n + 1):
        total = 0
        k = 1
        while True:
            arg = i - k * (3 * k - 1) // 2
            if arg < 0:
                break
            term = values[arg]
            arg -= k  # second pentagonal lag k(3k+1)/2
            if arg >= 0:
                term += values[arg]
            total += term if k & 1 else -term
            k += 1
        values.append(total)


def _extend_p_ewell(values, n):
    # P(i) = sum over k with 4 | (i - k(k+1)/2) of P((i - k(k+1)/2)/4)
    #        - 2 sum_{k>=1} (-1)^k P(i - 2k^2)
    # The first sum walks only the qualifying k, two per period of 8: the
    # shifted index drops by 2k + 9 between consecutive hits, with k read
    # before the divide-by-four, so the decrement itself grows by 16.
    for i in range(len(values), n + 1):
        total = 0
        k = 1
        while True:
            arg = i - 2 * k * k
            if arg < 0:
                break
            total += 2 * values[arg] if k & 1 else -2 * values[arg]
            k += 1
        r = i & 3
        for start in (_TRI_START_A[r], _TRI_START_B[r]):
            arg = i - start * (start + 1) // 2
            if arg < 0:
                continue
            arg //= 4  # exact by choice of start
            dec = 2 * start + 9
            while arg >= 0:
                total += values[arg]
                arg -= dec
                dec += 16
        values.append(total)


def _extend_q_ewell(values, p_series, n):
    # Q(i) = P(i) + sum_{k>=1} (-1)^k [P(i - k(3k-1)) + P(i - k(3k+1))]
    p_series.ensure(n)
    pv = p_series.values
    for i in range(len(values), n + 1):
        total = pv[i]
        k = 1
        while True:
            arg = i - k * (3 * k - 1)
            if arg < 0:
                break
            term = pv[arg]
            arg -= 2 * k  # second lag k(3k+1)
            if arg >= 0:
                term += pv[arg]
            total += -term if k & 1 else term
            k += 1
        values.append(total)


def _extend_q_merca(values, n):
    # Q(i) = s(i) - 2 sum_{k>=1} (-1)^k Q(i - 3k^2), s = pentagonal indicator
    for i in range(len(values), n + 1):
        total = 1 if _is_gp(i) else 0
        k = 1
        while True:
            arg = i - 3 * k * k
            if arg < 0:
                break
            total += 2 * values[arg] if k & 1 else -2 * values[arg]
            k += 1
        values.append(total)


class PartitionSeries:
    """Materialized prefix of P(0), P(1), ... with on-demand extension.

    ``values[i]`` is the number of partitions of i; ``values[0] == 1``.
    The recurrence only ever looks backward, so extension is a single
    append-only sweep from the first missing index.
    """

    ALGORITHMS = ("ewell", "euler")

    __slots__ = ("values", "algorithm")

    def __init__(self, algorithm="ewell", values=None):
        if algorithm not in self.ALGORITHMS:
            raise ValueError(f"unknown P-series algorithm {algorithm!r}")
        self.algorithm = algorithm
        self.values = [1] if values is None else values

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        self.ensure(n)
        return self.values[n]

    def __repr__(self):
        return f"{type(self).__name__}(algorithm={self.algorithm!r}, len={len(self.values)})"

    def ensure(self, n):
        """Materialize values[0..n]; no-op when already present."""
        _check_index(n)
        if n < len(self.values):
            return
        if not self.values:
            self.values.append(1)
        if self.algorithm == "euler":
            _extend_p_euler(self.values, n)
        else:
            _extend_p_ewell(self.values, n)


class DistinctSeries:
    """Materialized prefix of Q(0), Q(1), ... with on-demand extension.

    The "ewell" recurrence reads a PartitionSeries (one is created on
    first use unless supplied); "merca" is self-contained.
    """

    ALGORITHMS = ("merca", "ewell")

    __slots__ = ("values", "algorithm", "p_series")

    def __init__(self, algorithm="merca", values=None, p_series=None):
        if algorithm not in self.ALGORITHMS:
            raise ValueError(f"unknown Q-series algorithm {algorithm!r}")
        self.algorithm = algorithm
        self.values = [1] if values is None else values
        self.p_series = p_series

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        self.ensure(n)
        return self.values[n]

    def __repr__(self):
        return f"{type(self).__name__}(algorithm={self.algorithm!r}, len={len(self.values)})"

    def ensure(self, n):
        """Materialize values[0..n]; no-op when already present."""
        _check_index(n)
        if n < len(self.values):
            return
        if not self.values:
            self.values.append(1)
        if self.algorithm == "ewell":
            if self.p_series is None:
                self.p_series = PartitionSeries()
            _extend_q_ewell(self.values, self.p_series, n)
        else:
            _extend_q_merca(self.values, n)


class CacheFormatError(ValueError):
    """A cache file was rejected; ``line`` is the offending 1-based line."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


_HEADER_RE = re.compile(r"(PCACHE|QCACHE) v1 (0|[1-9][0-9]*)\Z")


def serialize_series(series) -> bytes:
    """Canonical text form: header line, then one decimal value per line.

    The header is ``PCACHE v1 <count>`` or ``QCACHE v1 <count>``; values
    follow from index 0, each line terminated by a single newline.  The
    encoding is byte-deterministic, so save/load/save round-trips are
    byte-identical.
    """
    kind = "PCACHE" if isinstance(series, PartitionSeries) else "QCACHE"
    parts = [f"{kind} v1 {len(series.values)}"]
    parts.extend(map(str, series.values))
    parts.append("")
    return "\n".join(parts).encode("ascii")


def save_series(series, path):
    Path(path).write_bytes(serialize_series(series))


def load_series(path):
    """Read a cache file back, validating structure line by line.

    Returns a PartitionSeries or DistinctSeries according to the header.
    Malformed input raises CacheFormatError naming the bad line; checks
    cover the header shape, the promised value count, decimal syntax of
    every value line, and values[0] == 1 for nonempty caches.
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise CacheFormatError(1, "cache file is not ASCII text") from exc
    lines = text.splitlines()
    if not lines:
        raise CacheFormatError(1, "empty file, expected a PCACHE/QCACHE header")
    match = _HEADER_RE.match(lines[0])
    if match is None:
        raise CacheFormatError(1, f"bad header {lines[0]!r}")
    kind, count = match.group(1), int(match.group(2))
    if len(lines) - 1 != count:
        raise CacheFormatError(
            len(lines), f"header promises {count} values, file has {len(lines) - 1}"
        )
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.isdigit():
            raise CacheFormatError(lineno, f"not a decimal value: {line!r}")
        values.append(int(line))
    if values and values[0] != 1:
        raise CacheFormatError(2, "first value must be 1")
    if kind == "PCACHE":
        return PartitionSeries(values=values)
    return DistinctSeries(values=values)


def series_checksum(series) -> str:
    """SHA-256 hex digest of the canonical serialized form."""
    return hashlib.sha256(serialize_series(series)).hexdigest()


_shared_p = None
_shared_q = None


def shared_p_series() -> PartitionSeries:
    """Process-wide default P series (single-threaded convenience)."""
    global _shared_p
    if _shared_p is None:
        _shared_p = PartitionSeries()
    return _shared_p


def shared_q_series() -> DistinctSeries:
    """Process-wide default Q series (single-threaded convenience)."""
    global _shared_q
    if _shared_q is None:
        _shared_q = DistinctSeries()
    return _shared_q
