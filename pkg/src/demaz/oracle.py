"""Brute-force reference implementations used to cross-check the engine.

Everything in this module recomputes results from first principles with plain
Python loops: literal counting for the rank function, a naive min-plus matrix
product for Demazure products of finite permutations, a fold of the one-step
recurrence for products of adjacent transpositions, and exhaustive search over
S_d for the greedy/stingy extremal characterizations.  None of it shares code
with the slipface engine; that independence is the point.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DemazError, OracleExtremum
from .perm import (
    Permutation,
    apply,
    compose,
    make_from_one_line,
    make_sigma_set,
)

__all__ = [
    "oracle_eval_s",
    "oracle_star_sd",
    "oracle_star_word",
    "oracle_greedy_max",
    "oracle_stingy_min",
    "sd_elements",
    "sd_table",
    "sd_leq",
]


def oracle_eval_s(p: Permutation, a: int, b: int, scan_radius: int = 256) -> int:
    """Count {n >= b : alpha(n) < a} by literally scanning n upward.

    The scan stops at b + scan_radius; a boundary sensitivity check verifies
    that no further n can contribute (alpha(n) >= n - diff_bound).
    """
    m = p.diff_bound
    top = b + scan_radius
    if top - m < a or top < p.hi:
        raise DemazError(
            f"scan radius {scan_radius} too small for eval at ({a}, {b}); "
            f"needs to clear both a + diff_bound and the window"
        )
    count = 0
    for n in range(b, top + 1):
        if apply(p, n) < a:
            count += 1
    return count


# ---------------------------------------------------------------------------
# finite permutations: one-line tuples over [1, d]


def _one_line(p: Permutation, d: int) -> tuple[int, ...]:
    return tuple(apply(p, i) for i in range(1, d + 1))


def _table(line: tuple[int, ...]) -> list[list[int]]:
    """Rank table t[a][b] = #{n in [b, d] : line[n] < a} on [1, d+1]^2.

    Entries outside [1, d] contribute nothing for these index ranges, since a
    finite permutation fixes everything beyond its support.
    """
    d = len(line)
    t = [[0] * (d + 2) for _ in range(d + 2)]
    for a in range(1, d + 2):
        for b in range(1, d + 2):
            c = 0
            for n in range(b, d + 1):
                if line[n - 1] < a:
                    c += 1
            t[a][b] = c
    return t


def _compose_lines(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i] - 1] for i in range(len(q)))


@lru_cache(maxsize=8)
def sd_elements(d: int) -> list[tuple[int, ...]]:
    return [tuple(w) for w in itertools.permutations(range(1, d + 1))]


@lru_cache(maxsize=8)
def _sd_tables(d: int) -> dict[tuple[int, ...], list[list[int]]]:
    return {w: _table(w) for w in sd_elements(d)}


def sd_table(line: tuple[int, ...]) -> list[list[int]]:
    return _table(line)


def sd_leq(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    """Bruhat comparison of one-line tuples via pointwise rank domination."""
    tu, tv = _table(u), _table(v)
    d = len(u)
    return all(
        tu[a][b] <= tv[a][b] for a in range(1, d + 2) for b in range(1, d + 2)
    )


@lru_cache(maxsize=8)
def _sd_leq_matrix(d: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], bool]:
    elems = sd_elements(d)
    tables = _sd_tables(d)
    out = {}
    rng = range(1, d + 2)
    for u in elems:
        tu = tables[u]
        for v in elems:
            tv = tables[v]
            out[(u, v)] = all(tu[a][b] <= tv[a][b] for a in rng for b in rng)
    return out


def oracle_star_sd(p: Permutation, q: Permutation, d: int) -> Permutation:
    """Demazure product within S_d by a naive min-plus matrix product.

    Multiplies the two rank tables tropically and reads the product
    permutation back off the mixed second difference of the result.
    """
    u, v = _one_line(p, d), _one_line(q, d)
    if sorted(u) != list(range(1, d + 1)) or sorted(v) != list(range(1, d + 1)):
        raise DemazError("inputs do not lie in the requested finite group")
    tu, tv = _table(u), _table(v)
    prod = [[0] * (d + 2) for _ in range(d + 2)]
    for a in range(1, d + 2):
        for b in range(1, d + 2):
            prod[a][b] = min(tu[a][l] + tv[l][b] for l in range(1, d + 2))
    line = []
    for b in range(1, d + 1):
        hits = [
            a
            for a in range(1, d + 1)
            if prod[a + 1][b] - prod[a][b] - prod[a + 1][b + 1] + prod[a][b + 1] == 1
        ]
        if len(hits) != 1:
            raise DemazError(f"tropical product column {b} is not a permutation")
        line.append(hits[0])
    return make_from_one_line(line)


def oracle_star_word(p: Permutation, word: list[int]) -> Permutation:
    """Fold of the one-step recurrence: absorb each adjacent transposition.

    gamma * sigma_n = gamma sigma_n when gamma(n) < gamma(n+1), else gamma.
    """
    g = p
    for n in word:
        if apply(g, n) < apply(g, n + 1):
            g = compose(g, make_sigma_set([n]))
    return g


def _downset(w: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    leq = _sd_leq_matrix(d)
    return [u for u in sd_elements(d) if leq[(u, w)]]


def _upset(w: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    leq = _sd_leq_matrix(d)
    return [u for u in sd_elements(d) if leq[(w, u)]]


def _line_inv(w: tuple[int, ...]) -> int:
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def _unique_extremum(
    cands: set[tuple[int, ...]], d: int, want_max: bool
) -> tuple[int, ...]:
    leq = _sd_leq_matrix(d)
    found = None
    # a Bruhat extremum has extreme length, so try those candidates first
    ordered = sorted(cands, key=_line_inv, reverse=want_max)
    for c in ordered:
        if want_max:
            ok = all(leq[(o, c)] for o in cands)
        else:
            ok = all(leq[(c, o)] for o in cands)
        if ok:
            found = c
            break
    if found is None:
        kind = "maximum" if want_max else "minimum"
        raise OracleExtremum(f"candidate set has no Bruhat {kind}: {sorted(cands)}")
    return found


def oracle_greedy_max(p: Permutation, q: Permutation, d: int) -> Permutation:
    """max{ p1 q1 : p1 <= p, q1 <= q } over S_d, by exhaustive enumeration."""
    if d > 6:
        raise DemazError(f"exhaustive S_{d} enumeration refused (d > 6)")
    u, v = _one_line(p, d), _one_line(q, d)
    cands = {
        _compose_lines(p1, q1)
        for p1 in _downset(u, d)
        for q1 in _downset(v, d)
    }
    return make_from_one_line(list(_unique_extremum(cands, d, want_max=True)))


def oracle_stingy_min(p: Permutation, q: Permutation, d: int) -> Permutation:
    """min{ p1 q1^-1 : p1 >= p, q1 <= q } over S_d, by exhaustive enumeration."""
    if d > 6:
        raise DemazError(f"exhaustive S_{d} enumeration refused (d > 6)")
    u, v = _one_line(p, d), _one_line(q, d)

    def inv_line(w: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(w)
        for i, x in enumerate(w):
            out[x - 1] = i + 1
        return tuple(out)

    cands = {
        _compose_lines(p1, inv_line(q1))
        for p1 in _upset(u, d)
        for q1 in _downset(v, d)
    }
    return make_from_one_line(list(_unique_extremum(cands, d, want_max=False)))
