"""Eventually periodic permutations of the integers.

A permutation here is a bijection alpha of the integers carrying only finitely
many nonnegative integers to negative ones and vice versa.  Such a bijection is
stored as a finite window of explicit values together with periodic
continuation on both sides:

* ``vals[i]`` is ``alpha(lo + i)`` for ``lo <= n <= hi``;
* for ``n < lo``:  ``alpha(n) = alpha(n') - k*m`` where ``n = n' - k*m`` and
  ``n'`` is the unique representative of ``n`` modulo ``k`` in ``[lo, lo+k)``;
* for ``n > hi``:  ``alpha(n) = alpha(n') + k*m`` where ``n = n' + k*m`` and
  ``n'`` lies in ``(hi-k, hi]``.

Every such bijection has a finite counting function

    eval_s(alpha, a, b) = #{n >= b : alpha(n) < a}

and a shift

    shift_of(alpha) = #{n >= 0 : alpha(n) < 0} - #{n < 0 : alpha(n) >= 0},

both computed exactly with integer arithmetic (window scan plus closed-form
arithmetic-progression counts for the tails; no floating point anywhere).

Permutations are value objects: all public constructors return the canonical
representative (smallest valid period dividing the given one, smallest window
reproducing all trimmed values through the tail rule), so ``==`` is plain field
equality.

>>> a = make_from_one_line([2, 1])
>>> apply(a, 1), apply(a, 2), apply(a, 3)
(2, 1, 3)
>>> eval_s(a, 2, 1)
1
>>> shift_of(make_shift(3))
3
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InfiniteInversions,
    InvalidGeneratorSet,
    InvalidPermutation,
    ResourceLimit,
)

__all__ = [
    "Permutation",
    "ResidueClass",
    "Violation",
    "make_from_one_line",
    "make_affine",
    "make_shift",
    "make_sigma_set",
    "make_gamma",
    "from_window",
    "apply",
    "inverse",
    "compose",
    "shift_of",
    "eval_s",
    "delta_s",
    "diff_bound",
    "validate",
    "canonicalize",
    "has_inversion",
    "inversions_in",
    "is_finitary",
    "inv_count",
    "identity",
    "get_max_window",
    "set_max_window",
]

DEFAULT_MAX_WINDOW = 10**6
_max_window = DEFAULT_MAX_WINDOW


def get_max_window() -> int:
    return _max_window


def set_max_window(n: int) -> None:
    """Set the window-length cap used by compose and the constructors."""
    global _max_window
    if n < 1:
        raise ValueError("window cap must be positive")
    _max_window = n


class ResidueClass(NamedTuple):
    """The set rep + modulus*Z, used for periodic transposition families."""

    rep: int
    modulus: int

    def __contains__(self, n: int) -> bool:  # type: ignore[override]
        return (n - self.rep) % self.modulus == 0


class Violation(NamedTuple):
    kind: str
    detail: str


@dataclass(frozen=True)
class Permutation:
    """Canonical window representation of an eventually periodic bijection.

    ``chi`` (the shift) and ``diff_bound`` (sup of ``|alpha(n) - n|``) are
    derived caches and excluded from equality.
    """

    period: int
    lo: int
    vals: tuple[int, ...]
    chi: int = field(compare=False)
    diff_bound: int = field(compare=False)

    @property
    def hi(self) -> int:
        return self.lo + len(self.vals) - 1

    def __call__(self, n: int) -> int:
        return apply(self, n)

    def __repr__(self) -> str:
        body = " ".join(str(v) for v in self.vals)
        return f"ep(k={self.period}, lo={self.lo}; {body})"


# ---------------------------------------------------------------------------
# raw evaluation (works on not-yet-validated fields)


def _tail_apply(period: int, lo: int, vals: Sequence[int], n: int) -> int:
    hi = lo + len(vals) - 1
    if lo <= n <= hi:
        return vals[n - lo]
    if n < lo:
        r = (n - lo) % period
        np_ = lo + r
        m = (np_ - n) // period
        return vals[np_ - lo] - period * m
    r = (n - (hi - period + 1)) % period
    np_ = hi - period + 1 + r
    m = (n - np_) // period
    return vals[np_ - lo] + period * m


def _raw_diff_bound(period: int, lo: int, vals: Sequence[int]) -> int:
    # one tail period on each side of the window catches the tail supremum,
    # since |alpha(n) - n| is periodic along each tail
    hi = lo + len(vals) - 1
    return max(
        abs(_tail_apply(period, lo, vals, n) - n)
        for n in range(lo - period, hi + period + 1)
    )


def _raw_chi(period: int, lo: int, vals: Sequence[int], bound: int) -> int:
    pos = sum(
        1 for n in range(0, bound + 1) if _tail_apply(period, lo, vals, n) < 0
    )
    neg = sum(
        1 for n in range(-bound, 0) if _tail_apply(period, lo, vals, n) >= 0
    )
    return pos - neg


# ---------------------------------------------------------------------------
# validation


def validate(period: int, lo: int, vals: Sequence[int]) -> list[Violation]:
    """Check that raw window fields describe a bijection of the integers.

    Returns a list of violations (empty means valid).  Three checks suffice
    for this representation class:

    * the first and last ``period`` window values each form a complete
      residue system modulo ``period`` (tail injectivity and coverage);
    * the evaluated map is injective on a guard band around the window
      (any colliding pair lies within ``2*diff_bound`` of each other, so a
      band of width ``2*diff_bound + 2*period`` traps all collisions that
      are not pure-tail, and pure-tail collisions are excluded by the
      residue check);
    * every target in a guard band has exactly one preimage within
      ``diff_bound`` of it (surjectivity near the window; tail targets are
      covered by the residue systems).
    """
    out: list[Violation] = []
    k = period
    if k < 1:
        return [Violation("bad-period", f"period {k} is not positive")]
    if len(vals) < k:
        return [
            Violation(
                "short-window",
                f"window holds {len(vals)} values, needs at least period {k}",
            )
        ]
    if len(vals) > _max_window:
        raise ResourceLimit(
            f"window of {len(vals)} entries exceeds cap {_max_window}"
        )
    hi = lo + len(vals) - 1

    left = [v % k for v in vals[:k]]
    if len(set(left)) != k:
        out.append(
            Violation("residue-collision", f"left tail generator residues {left}")
        )
    right = [v % k for v in vals[-k:]]
    if len(set(right)) != k:
        out.append(
            Violation("residue-collision", f"right tail generator residues {right}")
        )
    if out:
        return out

    m = _raw_diff_bound(k, lo, vals)

    seen: dict[int, int] = {}
    for n in range(lo - 2 * m - 2 * k, hi + 2 * m + 2 * k + 1):
        v = _tail_apply(k, lo, vals, n)
        if v in seen:
            out.append(
                Violation("duplicate-image", f"alpha({seen[v]}) = alpha({n}) = {v}")
            )
        seen[v] = n

    for a in range(lo - m - k, hi + m + k + 1):
        hits = [
            n
            for n in range(a - m, a + m + 1)
            if _tail_apply(k, lo, vals, n) == a
        ]
        if not hits:
            out.append(Violation("missing-preimage", f"no n with alpha(n) = {a}"))
        elif len(hits) > 1:
            out.append(
                Violation("duplicate-preimage", f"alpha({hits}) all equal {a}")
            )
    return out


# ---------------------------------------------------------------------------
# canonical form


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def _canonical_fields(
    period: int, lo: int, vals: Sequence[int]
) -> tuple[int, int, tuple[int, ...]]:
    k = period
    hi = lo + len(vals) - 1
    ev = lambda n: _tail_apply(k, lo, vals, n)

    d = k
    for cand in _divisors(k):
        right_ok = all(
            ev(n + cand) == ev(n) + cand for n in range(hi - k + 1, hi + 1)
        )
        left_ok = all(ev(n - cand) == ev(n) - cand for n in range(lo, lo + k))
        if right_ok and left_ok:
            d = cand
            break

    # deviations from pure d-periodicity; they pin the minimal window
    dev = [
        n
        for n in range(lo - d - k - 1, hi + k + 2)
        if ev(n + d) != ev(n) + d
    ]
    if not dev:
        return d, 0, tuple(ev(i) for i in range(d))
    lo_c = min(dev)
    hi_c = max(dev) + d
    return d, lo_c, tuple(ev(n) for n in range(lo_c, hi_c + 1))


def from_window(
    period: int,
    lo: int,
    vals: Sequence[int],
    *,
    canonical: bool = True,
) -> Permutation:
    """Build a Permutation from raw fields, validating and canonicalizing."""
    vals = tuple(int(v) for v in vals)
    bad = validate(period, lo, vals)
    if bad:
        raise InvalidPermutation(
            "not a bijection: " + "; ".join(f"{v.kind}: {v.detail}" for v in bad),
            bad,
        )
    if canonical:
        period, lo, vals = _canonical_fields(period, lo, vals)
    m = _raw_diff_bound(period, lo, vals)
    chi = _raw_chi(period, lo, vals, m)
    return Permutation(period, lo, vals, chi, m)


def canonicalize(p: Permutation) -> Permutation:
    """Return the canonical representative (idempotent on constructor output)."""
    return from_window(p.period, p.lo, p.vals)


# ---------------------------------------------------------------------------
# constructors


def make_from_one_line(values: Sequence[int], off: int = 1) -> Permutation:
    """Permutation acting as ``values`` on [off, off+len-1], identity elsewhere.

    >>> make_from_one_line([2, 3, 1])
    ep(k=1, lo=0; 0 2 3 1 4)
    """
    values = [int(v) for v in values]
    d = len(values)
    if sorted(values) != list(range(off, off + d)):
        raise InvalidPermutation(
            f"invalid one-line: {values} is not a rearrangement of "
            f"[{off}..{off + d - 1}]"
        )
    vals = [off - 1] + values + [off + d]
    return from_window(1, off - 1, vals)


def make_affine(window: Sequence[int], k: int) -> Permutation:
    """Fully periodic permutation with alpha(n + k) = alpha(n) + k everywhere.

    ``window`` gives alpha(0), ..., alpha(k-1) and must hit every residue
    class modulo k exactly once.
    """
    window = [int(v) for v in window]
    if len(window) != k:
        raise InvalidPermutation(
            f"affine window must hold exactly {k} values, got {len(window)}"
        )
    return from_window(k, 0, window)


def make_shift(chi: int) -> Permutation:
    """The translation n -> n - chi (shift chi, no inversions)."""
    return from_window(1, 0, (-chi,))


def identity() -> Permutation:
    return make_shift(0)


def make_sigma_set(s: Iterable[int] | ResidueClass) -> Permutation:
    """Product of disjoint adjacent transpositions (n, n+1) for n in s.

    ``s`` is either a finite set of integers with no two consecutive, or a
    ResidueClass with modulus >= 2.

    >>> make_sigma_set([1])
    ep(k=1, lo=0; 0 2 1 3)
    """
    if isinstance(s, ResidueClass):
        r, k = s.rep, s.modulus
        if k < 2:
            raise InvalidGeneratorSet(
                f"residue class modulus {k} < 2 would swap overlapping pairs"
            )
        vals = list(range(r, r + k))
        vals[0], vals[1] = vals[1], vals[0]
        return from_window(k, r, vals)
    members = sorted(set(int(n) for n in s))
    if not members:
        return identity()
    for x, y in zip(members, members[1:]):
        if y == x + 1:
            raise InvalidGeneratorSet(
                f"consecutive indices {x}, {y} give overlapping transpositions"
            )
    lo = members[0] - 1
    hi = members[-1] + 2
    vals = list(range(lo, hi + 1))
    for n in members:
        i = n - lo
        vals[i], vals[i + 1] = vals[i + 1], vals[i]
    return from_window(1, lo, vals)


def make_gamma(m: int, n: int) -> Permutation:
    """Order-preserving two-block shuffle with shift n - m - 1.

    Maps (-inf, -m-1] -> (-inf, -n], [-m, -1] -> [1, m], [0, n-1] -> [-n+1, 0]
    and [n, inf) -> [m+1, inf), each block order-preservingly.  For m = n = 0
    this degenerates to the translation n -> n + 1.
    """
    if m < 0 or n < 0:
        raise InvalidPermutation(f"block sizes must be nonnegative, got ({m}, {n})")

    def g(t: int) -> int:
        if t <= -m - 1:
            return t + m + 1 - n
        if t <= -1:
            return t + m + 1
        if t <= n - 1:
            return t - n + 1
        return t + m + 1 - n

    lo, hi = -m - 2, n + 1
    return from_window(1, lo, [g(t) for t in range(lo, hi + 1)])


# ---------------------------------------------------------------------------
# basic operations


def apply(p: Permutation, n: int) -> int:
    return _tail_apply(p.period, p.lo, p.vals, n)


def inverse(p: Permutation) -> Permutation:
    """The inverse bijection (same period after canonicalization)."""
    k, m = p.period, p.diff_bound
    lo_i = p.lo - m - k
    hi_i = p.hi + m + k
    vals = []
    for a in range(lo_i, hi_i + 1):
        pre = [n for n in range(a - m, a + m + 1) if apply(p, n) == a]
        if len(pre) != 1:
            raise InvalidPermutation(f"no unique preimage of {a}")
        vals.append(pre[0])
    return from_window(k, lo_i, vals)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The bijection n -> p(q(n))."""
    k = math.lcm(p.period, q.period)
    lo_n = min(q.lo, p.lo - q.diff_bound) - k
    hi_n = max(q.hi, p.hi + q.diff_bound) + k
    if hi_n - lo_n + 1 > _max_window:
        raise ResourceLimit(
            f"composition window of {hi_n - lo_n + 1} entries exceeds cap "
            f"{_max_window}"
        )
    vals = [apply(p, apply(q, n)) for n in range(lo_n, hi_n + 1)]
    return from_window(k, lo_n, vals)


def shift_of(p: Permutation) -> int:
    """Net number of integers carried from nonnegative to negative."""
    return p.chi


def diff_bound(p: Permutation) -> int:
    """Exact supremum of |alpha(n) - n| over all integers n."""
    return p.diff_bound


def eval_s(p: Permutation, a: int, b: int) -> int:
    """Count integers n >= b with alpha(n) < a.

    Window entries are scanned directly; each tail contributes a closed-form
    count of an arithmetic progression, so the result is exact for every
    (a, b) regardless of how far it sits from the window.

    >>> w0 = make_from_one_line([3, 2, 1])
    >>> eval_s(w0, 3, 2)
    2
    """
    k, lo, vals = p.period, p.lo, p.vals
    hi = p.hi
    count = 0
    for n in range(max(b, lo), hi + 1):
        if vals[n - lo] < a:
            count += 1
    # left tail: n = j - k*m, m >= 1, j in [lo, lo+k)
    for j in range(lo, lo + k):
        vj = vals[j - lo]
        m_hi = (j - b) // k
        m_lo = max(1, (vj - a) // k + 1)
        if m_hi >= m_lo:
            count += m_hi - m_lo + 1
    # right tail: n = j + k*m, m >= 1, j in (hi-k, hi]
    for j in range(hi - k + 1, hi + 1):
        vj = vals[j - lo]
        m_lo = max(1, -((j - b) // k))  # ceil((b - j) / k)
        m_hi = (a - vj - 1) // k
        if m_hi >= m_lo:
            count += m_hi - m_lo + 1
    return count


def delta_s(p: Permutation, a: int, b: int) -> int:
    """Mixed second difference of eval_s; equals 1 exactly when alpha(b) = a."""
    return 1 if apply(p, b) == a else 0


# ---------------------------------------------------------------------------
# inversions

def has_inversion(p: Permutation, u: int, v: int) -> bool:
    return u < v and apply(p, u) > apply(p, v)


def inversions_in(p: Permutation, u_lo: int, u_hi: int) -> list[tuple[int, int]]:
    """All inversions (u, v) with u in [u_lo, u_hi].

    Sound because an inversion satisfies v - u <= 2*diff_bound: beyond that,
    alpha(v) >= v - M > u + M >= alpha(u).
    """
    m = p.diff_bound
    out = []
    for u in range(u_lo, u_hi + 1):
        au = apply(p, u)
        for v in range(u + 1, u + 2 * m + 1):
            if au > apply(p, v):
                out.append((u, v))
    return out


def is_finitary(p: Permutation) -> bool:
    """True when the permutation has finitely many inversions.

    Equivalent to the canonical period being 1: a periodic increasing tail
    must advance by exactly 1 per step.
    """
    c = p if p.period == 1 else canonicalize(p)
    return c.period == 1


def inv_count(p: Permutation) -> int:
    """Exact number of inversions; raises for non-finitary permutations."""
    if not is_finitary(p):
        raise InfiniteInversions(
            f"{p!r} has period {canonicalize(p).period} > 1, "
            "so its inversion set is infinite"
        )
    c = canonicalize(p)
    m = c.diff_bound
    if m == 0:
        return 0
    # all inversions have v >= lo (left tail is increasing), u <= hi and
    # v - u <= 2M, so u >= lo - 2M
    return len(inversions_in(c, c.lo - 2 * m, c.hi))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
