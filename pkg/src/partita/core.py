"""Scalar computation of P(n, m) and Q(n, m).

P(n, m) counts the integer partitions of n into exactly m parts; Q(n, m)
those into m pairwise distinct parts.  Two complementary algorithms are
provided together with an automatic dispatcher:

* ``p_parts_alg1`` runs an in-place recurrence table and costs about
  m * (n - m) slot updates, so it wins for small m.
* ``p_parts_alg2`` expands P(n, m) against the cached list of P(0..n-m)
  as an alternating sum of convolution-like terms, one per possible
  count of distinct parts; the number of such terms shrinks as m grows,
  so it wins for large m.

The dispatcher ``p_parts`` adds closed forms for m <= 6 and the shortcut
P(n, m) = P(n - m) for m >= ceil(n / 2), and switches between the two
algorithms at m = c * sqrt(n) (c configurable, default 2.7).  With a
warm series cache every dispatch path is O(n^(3/2)) or better.

All counts are exact Python integers; closed forms use exact rational
rounding, never floating point.  Indices are bounded by INDEX_CEILING.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import isqrt
from operator import mul

from .series import INDEX_CEILING, PartitionSeries, _check_index, shared_p_series

__all__ = [
    "ALG1",
    "ALG2",
    "CLOSED_FORM",
    "FAST_PATH",
    "DEFAULT_CROSSOVER",
    "INDEX_CEILING",
    "StepEstimate",
    "alg1_steps",
    "alg2_steps",
    "analytic_crossover",
    "analytic_crossover_floor",
    "dispatch_plan",
    "expansion_depth",
    "p_parts",
    "p_parts_alg1",
    "p_parts_alg2",
    "p_parts_closed",
    "practical_crossover",
    "q_parts",
]

# Dispatch labels, also used in CLI output.
CLOSED_FORM = "closed-form"
ALG1 = "alg1"
ALG2 = "alg2"
FAST_PATH = "fast-path"

DEFAULT_CROSSOVER = Fraction(27, 10)


def _as_fraction(constant):
    if isinstance(constant, Fraction):
        value = constant
    elif isinstance(constant, int):
        value = Fraction(constant)
    else:
        # via the decimal text so float 2.7 means exactly 27/10
        value = Fraction(str(constant))
    if value < 0:
        raise ValueError("crossover constant must be nonnegative")
    return value


def _stage_update(a, i, last):
    """Apply a[p] += a[p - i] for p = i..last, in place, in increasing p.

    Equivalent to prefix-summing every stride-i residue class of the
    prefix a[0..last], which is how it is executed (one C-level
    ``accumulate`` per class).  Positions beyond ``last`` are untouched.
    """
    if last < i:
        return
    stop = last + 1
    for r in range(i):
        a[r:stop:i] = accumulate(a[r:stop:i])


def p_parts_alg1(n: int, m: int) -> int:
    """P(n, m) by the in-place recurrence table (algorithm 1).

    Slot p of the working array holds P(p + i, i) once stage i has run;
    stage i adds a[p - i] into a[p] for p = i..n-m.  Stages beyond
    min(m, n - m) cannot change a[n - m], so they are skipped.  Needs no
    series cache.  Requires 1 <= m <= n.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if not 1 <= m <= n:
        raise ValueError("p_parts_alg1 requires 1 <= m <= n")
    size = n - m
    a = [1] * (size + 1)
    for i in range(2, min(m, size) + 1):
        _stage_update(a, i, size)
    return a[size]


def expansion_depth(n: int, m: int) -> int:
    """Largest i >= 0 with n - m*(i + 1) >= i*(i + 1)/2.

    This is the number of outer terms in algorithm 2's alternating
    expansion: term i involves partitions into i distinct parts, and i
    distinct parts need at least i*(i + 1)/2.  Evaluated with an exact
    integer square root.  Requires n >= 0, m >= 1.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if m < 1:
        raise ValueError("expansion_depth requires m >= 1")
    depth = (isqrt(8 * n + (2 * m - 1) ** 2) - 2 * m - 1) // 2
    return depth if depth > 0 else 0


def p_parts_alg2(n: int, m: int, cache: PartitionSeries | None = None) -> int:
    """P(n, m) by expansion against the cached series (algorithm 2).

    Starting from P(n - m), subtracts and adds correction sums, one per
    possible number i of distinct parts in the conjugate picture:

        P(n, m) = P(n - m) + sum_i (-1)^i sum_k Q(k, i) * P(kmax - k)

    with k running from i*(i + 1)/2 to kmax = n - m*(i + 1).  The i = 1
    term is a bare prefix sum of the series (Q(k, 1) = 1) and is handled
    directly; for i >= 2 the same recurrence array as algorithm 1 serves
    every term, advanced one stage per i over a shrinking prefix so that
    a[k - kmin] = Q(k, i).  Extends the cache to n - m on demand.
    Requires 1 <= m <= n.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if not 1 <= m <= n:
        raise ValueError("p_parts_alg2 requires 1 <= m <= n")
    cache = shared_p_series() if cache is None else cache
    size = n - m
    cache.ensure(size)
    pv = cache.values
    x = pv[size]
    t = n - 2 * m
    if t > 0:
        x -= sum(pv[:t])
    a = [1] * (size + 1)
    for i in range(2, expansion_depth(n, m) + 1):
        kmin = i * (i + 1) // 2
        width = n - m * (i + 1) - kmin  # last valid offset k - kmin
        _stage_update(a, i, width)
        s = sum(map(mul, a, pv[width::-1]))
        x += s if i % 2 == 0 else -s
    return x


# m = 6 closed form correction, indexed by n mod 6.
_F_MOD6 = (-96, 629, 224, 309, 224, 629)


def _round_nearest(num, den):
    # round half away from zero, exact integer arithmetic, den > 0
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((-2 * num + den) // (2 * den))


def p_parts_closed(n: int, m: int) -> int:
    """P(n, m) for m <= 6 by polynomial closed forms.

    m = 1 is constant, m = 2 a floor, and m = 3..6 are nearest-integer
    roundings of quartic-and-below polynomials in n with small parity
    (and, for m = 6, mod-6) corrections.  Everything is exact integer
    arithmetic; no floating point is involved, so results are identical
    across platforms.  Requires 1 <= m <= 6 and n >= m.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if not 1 <= m <= 6:
        raise ValueError("p_parts_closed requires 1 <= m <= 6")
    if n < m:
        raise ValueError("p_parts_closed requires n >= m")
    if m == 1:
        return 1
    if m == 2:
        return n // 2
    if m == 3:
        return _round_nearest(n * n, 12)
    sign = -1 if n % 2 else 1  # (-1)^n
    if m == 4:
        return _round_nearest(n * (2 * n * n + 6 * n + 9 * (sign - 1)), 288)
    if m == 5:
        return _round_nearest(
            n * (n**3 + 10 * n * (n + 1) - 15 * (3 * sign + 5)), 2880
        )
    return _round_nearest(
        n
        * (
            6 * n**4
            + 135 * n**3
            + 760 * n * n
            + 675 * (sign - 1) * n
            - 30 * _F_MOD6[n % 6]
        ),
        518400,
    )


def alg1_steps(n: int, m: int) -> int:
    """Inner-loop update count of algorithm 1, from its loop bounds.

    Equals (mu - 1) * (2*(n - m) - mu) / 2 with mu = min(m, n - m); the
    product is always even.  Returns 0 when mu <= 1 (no stage runs).
    Requires 1 <= m <= n.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if not 1 <= m <= n:
        raise ValueError("alg1_steps requires 1 <= m <= n")
    mu = min(m, n - m)
    if mu <= 1:
        return 0
    return (mu - 1) * (2 * (n - m) - mu) // 2


def alg2_steps(n: int, m: int) -> int:
    """Step model for algorithm 2: floor of d * (2*(n - m) - d) / 2 with
    d = expansion_depth(n, m).

    This is a cost model, not an executed-instruction count: it tracks
    how the shrinking stage prefixes scale but ignores bookkeeping, and
    the product is halved with flooring since it can be odd.  Returns 0
    when the expansion is empty.  Requires 1 <= m <= n.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if not 1 <= m <= n:
        raise ValueError("alg2_steps requires 1 <= m <= n")
    depth = expansion_depth(n, m)
    if depth == 0:
        return 0
    return depth * (2 * (n - m) - depth) // 2


def analytic_crossover(n: int, bits: int = 64) -> Fraction:
    """Where the two step models cross: (sqrt(24n + 9) - 3) / 6.

    Returned as a Fraction computed from a scaled integer square root;
    the absolute error is below 2**-bits.  Requires n >= 1.
    """
    _check_index(n, "n")
    if n < 1:
        raise ValueError("analytic_crossover requires n >= 1")
    scaled = isqrt((24 * n + 9) << (2 * bits))
    return (Fraction(scaled, 1 << bits) - 3) / 6


def analytic_crossover_floor(n: int) -> int:
    """Integer floor of analytic_crossover(n), computed exactly."""
    _check_index(n, "n")
    if n < 1:
        raise ValueError("analytic_crossover_floor requires n >= 1")
    return (isqrt(24 * n + 9) - 3) // 6


def practical_crossover(n: int, constant=DEFAULT_CROSSOVER) -> int:
    """floor(c * sqrt(n)): the dispatcher's alg1/alg2 threshold on m.

    Exact integer arithmetic throughout (c is taken as a fraction), so
    boundary cases do not depend on float rounding.  Requires n >= 0.
    """
    _check_index(n, "n")
    c = _as_fraction(constant)
    return isqrt(c.numerator * c.numerator * n) // c.denominator


def _choose(n, m, constant):
    # mirrors the dispatch order of p_parts; pure in (n, m, constant)
    if m == 0 or n <= m:
        return FAST_PATH
    if m >= (n + 1) // 2:
        return FAST_PATH
    if m <= 6:
        return CLOSED_FORM
    c = _as_fraction(constant)
    if (m * c.denominator) ** 2 <= n * c.numerator * c.numerator:
        return ALG1
    return ALG2


@dataclass(frozen=True)
class StepEstimate:
    """Step models for both algorithms plus the dispatcher's pick.

    ``chosen`` is a pure function of (n, m) and the crossover constant;
    it never depends on cache state, and changing the constant can only
    change ``chosen``, never the computed value.
    """

    alg1: int
    alg2: int
    chosen: str


def dispatch_plan(n: int, m: int, constant=DEFAULT_CROSSOVER) -> StepEstimate:
    """Step models and dispatch choice for P(n, m), without computing it.

    Outside 1 <= m <= n both models are reported as 0 (the answer there
    is a constant).
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if 1 <= m <= n:
        s1, s2 = alg1_steps(n, m), alg2_steps(n, m)
    else:
        s1 = s2 = 0
    return StepEstimate(s1, s2, _choose(n, m, constant))


def p_parts(
    n: int,
    m: int,
    cache: PartitionSeries | None = None,
    constant=DEFAULT_CROSSOVER,
    method: str = "auto",
) -> int:
    """P(n, m): the number of partitions of n into exactly m parts.

    Dispatch, in order: trivial cases (m = 0, n < m, n = m), then
    P(n - m) from the series cache when m >= ceil(n / 2), closed forms
    for m <= 6, algorithm 1 for m <= c * sqrt(n), algorithm 2 otherwise.
    ``method`` may force "alg1", "alg2" or "closed" (m <= 6 only); a
    forced method changes the route, never the value.  ``cache`` is a
    PartitionSeries, extended on demand; the shared default is used when
    omitted.
    """
    _check_index(n, "n")
    _check_index(m, "m")
    if m == 0:
        return 1 if n == 0 else 0
    if n < m:
        return 0
    if n == m:
        return 1
    if method == "auto":
        choice = _choose(n, m, constant)
    elif method == "alg1":
        return p_parts_alg1(n, m)
    elif method == "alg2":
        return p_parts_alg2(n, m, cache)
    elif method == "closed":
        if m > 6:
            raise ValueError("closed form requires m <= 6")
        return p_parts_closed(n, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    if choice == FAST_PATH:
        cache = shared_p_series() if cache is None else cache
        cache.ensure(n - m)
        return cache.values[n - m]
    if choice == CLOSED_FORM:
        return p_parts_closed(n, m)
    if choice == ALG1:
        return p_parts_alg1(n, m)
    return p_parts_alg2(n, m, cache)


def q_parts(
    n: int,
    m: int,
    cache: PartitionSeries | None = None,
    constant=DEFAULT_CROSSOVER,
    method: str = "auto",
) -> int:
    """Q(n, m): partitions of n into exactly m pairwise distinct parts.

    Subtracting the staircase 0 + 1 + ... + (m - 1) from the parts maps
    these bijectively onto ordinary partitions into m parts, so
    Q(n, m) = P(n - m*(m - 1)/2, m); zero whenever the shifted index is
    below m (the staircase itself needs m*(m + 1)/2).
    """
    _check_index(n, "n")
    _check_index(m, "m")
    shifted = n - m * (m - 1) // 2
    if shifted < m:
        return 0
    return p_parts(shifted, m, cache, constant, method)
