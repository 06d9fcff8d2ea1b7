"""Core permutation representation: construction, evaluation, counting."""

import pytest

from conftest import line_of, rand_affine, sd_lines, zoo_perm

from demaz import (
    InfiniteInversions,
    InvalidGeneratorSet,
    InvalidPermutation,
    ResidueClass,
    apply,
    canonicalize,
    compose,
    delta_s,
    diff_bound,
    eval_s,
    from_window,
    has_inversion,
    identity,
    inv_count,
    inverse,
    inversions_in,
    is_finitary,
    make_affine,
    make_from_one_line,
    make_gamma,
    make_shift,
    make_sigma_set,
    shift_of,
    star,
    validate,
)
from demaz.oracle import oracle_eval_s


def test_identity_fixes_everything():
    e = identity()
    assert all(apply(e, n) == n for n in range(-20, 21))
    assert shift_of(e) == 0
    assert inv_count(e) == 0


def test_shift_moves_down_by_chi():
    s = make_shift(3)
    assert apply(s, 10) == 7
    assert shift_of(s) == 3
    # order preserving, so no inversions despite acting everywhere
    assert inv_count(s) == 0
    assert inverse(s) == make_shift(-3)


def test_one_line_embedding():
    p = make_from_one_line((5, 6, 2, 8, 3, 9, 7, 4, 1))
    assert apply(p, 1) == 5
    assert apply(p, 9) == 1
    assert apply(p, 10) == 10
    assert apply(p, 0) == 0
    assert shift_of(p) == 0
    assert is_finitary(p)


def test_one_line_offset():
    p = make_from_one_line((5, 6, 4), off=4)
    # acts on {4,5,6} as the 3-cycle
    assert [apply(p, n) for n in range(3, 8)] == [3, 5, 6, 4, 7]


def test_affine_periodicity():
    p = make_affine([3, -2], 2)
    for n in range(-8, 9):
        assert apply(p, n + 2) == apply(p, n) + 2


def test_compose_is_function_composition(rng):
    for _ in range(40):
        p, q = zoo_perm(rng), zoo_perm(rng)
        r = compose(p, q)
        for n in range(-12, 13):
            assert apply(r, n) == apply(p, apply(q, n))


def test_inverse_involution(rng):
    for _ in range(40):
        p = zoo_perm(rng)
        assert inverse(inverse(p)) == p
        assert compose(p, inverse(p)) == identity()


def test_inverse_of_compose(rng):
    for _ in range(30):
        p, q = zoo_perm(rng), zoo_perm(rng)
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


def test_eval_matches_brute_count(rng):
    for _ in range(12):
        p = zoo_perm(rng)
        for a in range(-6, 7, 3):
            for b in range(-6, 7, 3):
                assert eval_s(p, a, b) == oracle_eval_s(p, a, b)


def test_eval_column_recurrence(rng):
    for _ in range(12):
        p = zoo_perm(rng)
        for a in range(-5, 6):
            for b in range(-5, 6):
                step = 1 if apply(p, b) < a else 0
                assert eval_s(p, a, b) == eval_s(p, a, b + 1) + step


def test_delta_marks_the_graph(rng):
    for _ in range(12):
        p = zoo_perm(rng)
        for b in range(-5, 6):
            for a in range(-8, 9):
                assert delta_s(p, a, b) == (1 if apply(p, b) == a else 0)


def test_duality_identity(rng):
    # s_p(a,b) - s_{p^-1}(b,a) = chi + a - b
    for _ in range(15):
        p = zoo_perm(rng)
        pi = inverse(p)
        chi = shift_of(p)
        for a in range(-6, 7, 2):
            for b in range(-6, 7, 2):
                assert eval_s(p, a, b) - eval_s(pi, b, a) == chi + a - b


def test_inv_count_known_values():
    assert inv_count(make_from_one_line((4, 3, 2, 1))) == 6
    assert inv_count(make_gamma(3, 5)) == 15
    assert inv_count(make_gamma(2, 3)) == 6
    assert inv_count(make_sigma_set([1, 5])) == 2
    # brute pair scan over [1,9]^2: 4+4+1+4+1+3+2+1
    assert inv_count(make_from_one_line((5, 6, 2, 8, 3, 9, 7, 4, 1))) == 20


def test_inv_count_infinite():
    with pytest.raises(InfiniteInversions):
        inv_count(make_sigma_set(ResidueClass(0, 2)))


def test_inversions_listing(rng):
    for line in sd_lines(3):
        p = make_from_one_line(line)
        pairs = inversions_in(p, 1, 3)
        assert len(pairs) == inv_count(p)
        for u, v in pairs:
            assert u < v and apply(p, u) > apply(p, v)
            assert has_inversion(p, u, v)


def test_canonical_equality():
    assert from_window(2, 0, [0, 1]) == identity()
    assert from_window(1, 5, [5]) == identity()
    p = make_affine([3, -2], 2)
    doubled = from_window(4, 0, [3, -2, 5, 0])
    assert doubled == p
    assert canonicalize(doubled).period == 2


def test_window_translation_invariance():
    # same function described from two window starts
    a = from_window(2, 0, [1, 0])
    b = from_window(2, 2, [3, 2])
    assert a == b


def test_validate_reports_collisions():
    bad = validate(2, 0, [0, 2])
    assert bad and all(v.kind for v in bad)
    assert validate(2, 0, [1, 0]) == []


def test_bad_window_raises():
    with pytest.raises(InvalidPermutation):
        from_window(2, 0, [0, 2])
    with pytest.raises(InvalidPermutation):
        make_from_one_line((1, 1, 2))


def test_sigma_set_rejects_adjacent_overlap():
    with pytest.raises(InvalidGeneratorSet):
        make_sigma_set([1, 2])
    with pytest.raises(InvalidGeneratorSet):
        make_sigma_set(ResidueClass(0, 1))


def test_sigma_set_swaps():
    p = make_sigma_set([0, 4])
    assert apply(p, 0) == 1 and apply(p, 1) == 0
    assert apply(p, 4) == 5 and apply(p, 5) == 4
    assert apply(p, 2) == 2
    q = make_sigma_set(ResidueClass(1, 3))
    for n in (-2, 1, 4, 7):
        assert apply(q, n) == n + 1 and apply(q, n + 1) == n


def test_diff_bound_bounds_displacement(rng):
    for _ in range(25):
        p = zoo_perm(rng)
        m = diff_bound(p)
        assert all(abs(apply(p, n) - n) <= m for n in range(-15, 16))


def test_two_block_shift():
    for m in range(5):
        for n in range(5):
            assert shift_of(make_gamma(m, n)) == n - m - 1


def test_star_on_disjoint_supports_is_compose(rng):
    p = make_from_one_line((2, 1))
    q = make_from_one_line((11, 10), off=10)
    assert star(p, q) == compose(p, q)


def test_line_of_helper(rng):
    for _ in range(10):
        d = rng.randint(2, 5)
        line = tuple(rng.sample(range(1, d + 1), d))
        assert line_of(make_from_one_line(line), d) == line
    assert rand_affine(rng, 3).period in (1, 3)
