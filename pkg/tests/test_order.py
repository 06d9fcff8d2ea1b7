"""Bruhat and weak orders: engine comparators against brute force."""

import itertools

from conftest import line_of, sd_lines, sd_perms, zoo_perm, zoo_perm_with_shift

from demaz import (
    bruhat_leq,
    bruhat_leq_witness,
    compose,
    eval_s,
    has_inversion,
    identity,
    inverse,
    leq_chi,
    make_shift,
    shift_of,
    star,
    weak_left_leq,
    weak_left_leq_witness,
    weak_right_leq,
)
from demaz.oracle import sd_leq


def test_bruhat_matches_oracle_s4():
    lines = sd_lines(4)
    perms = sd_perms(4)
    for (lu, u), (lv, v) in itertools.product(zip(lines, perms), repeat=2):
        assert bruhat_leq(u, v) == sd_leq(lu, lv), (lu, lv)


def test_bruhat_witness_is_genuine(rng):
    for _ in range(40):
        p = zoo_perm(rng)
        q = zoo_perm(rng)
        ok, wit = bruhat_leq_witness(p, q)
        assert ok == bruhat_leq(p, q)
        if not ok:
            a, b = wit
            assert eval_s(p, a, b) > eval_s(q, a, b)


def test_bruhat_shift_examples():
    e = identity()
    assert bruhat_leq(e, make_shift(1))
    assert not bruhat_leq(e, make_shift(-1))
    assert bruhat_leq(make_shift(-2), e)


def test_leq_chi_requires_equal_shift():
    e = identity()
    assert bruhat_leq(e, make_shift(1))
    assert not leq_chi(e, make_shift(1))
    assert leq_chi(e, e)


def brute_weak_left(p, q, lo=-12, hi=12):
    for u in range(lo, hi):
        for v in range(u + 1, hi + 1):
            if has_inversion(p, u, v) and not has_inversion(q, u, v):
                return False
    return True


def test_weak_left_matches_brute_s3():
    perms = sd_perms(3)
    for p in perms:
        for q in perms:
            assert weak_left_leq(p, q) == brute_weak_left(p, q)


def test_weak_left_witness(rng):
    for _ in range(40):
        p, q = zoo_perm(rng), zoo_perm_with_shift(rng, 0)
        ok, wit = weak_left_leq_witness(p, q)
        if not ok:
            u, v = wit
            assert has_inversion(p, u, v) and not has_inversion(q, u, v)


def test_weak_right_is_left_of_inverses(rng):
    for _ in range(40):
        p, q = zoo_perm(rng), zoo_perm(rng)
        assert weak_right_leq(p, q) == weak_left_leq(inverse(p), inverse(q))


def test_weak_implies_bruhat_same_shift(rng):
    # containment of inversion sets only forces Bruhat order inside a
    # shift class: a pure shift has no inversions at all
    for _ in range(50):
        p = zoo_perm(rng)
        q = zoo_perm_with_shift(rng, shift_of(p))
        if weak_left_leq(p, q):
            assert bruhat_leq(p, q)
        if weak_right_leq(p, q):
            assert bruhat_leq(p, q)


def test_prefix_of_reduced_product_is_weak_below(rng):
    # p is weak-right below p*q when the pair is reduced
    from demaz import is_reduced_pair

    for _ in range(40):
        p, q = zoo_perm(rng), zoo_perm(rng)
        if is_reduced_pair(p, q):
            assert weak_right_leq(p, compose(p, q))


def test_star_dominates_both_factors_up_to_shift(rng):
    # p <= p * q whenever chi(q) >= 0, by monotonicity from the identity
    for _ in range(40):
        p = zoo_perm(rng)
        q = zoo_perm_with_shift(rng, abs(shift_of(zoo_perm(rng))))
        assert bruhat_leq(p, star(p, q))
