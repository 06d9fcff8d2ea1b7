"""Shared generators for the test suite.

The "zoo" samplers below draw from the families the library is built
around: finite symmetric-group embeddings, pure shifts, periodic affine
permutations of modulus 2 and 3, two-block permutations, and greedy
products thereof.  Every sampler takes an explicit random.Random so each
test is deterministic under its own seed.
"""

import itertools
import random

import pytest

from demaz import (
    compose,
    make_affine,
    make_from_one_line,
    make_gamma,
    make_shift,
    shift_of,
    star,
)


def pytest_addoption(parser):
    parser.addoption(
        "--extended",
        action="store_true",
        default=False,
        help="run the large exhaustive oracle comparisons",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "extended: large exhaustive comparisons, needs --extended"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="pass --extended to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return random.Random(0xD380AC)


def sd_lines(d):
    return list(itertools.permutations(range(1, d + 1)))


def sd_perms(d):
    return [make_from_one_line(line) for line in sd_lines(d)]


def line_of(p, d):
    """One-line window of a finitary permutation supported on 1..d."""
    from demaz import apply

    return tuple(apply(p, i) for i in range(1, d + 1))


def rand_line(rng, d):
    line = list(range(1, d + 1))
    rng.shuffle(line)
    return tuple(line)


def rand_affine(rng, k):
    res = list(range(k))
    rng.shuffle(res)
    vals = [r + k * rng.randint(-2, 2) for r in res]
    return make_affine(vals, k)


def zoo_atom(rng):
    kind = rng.randrange(4)
    if kind == 0:
        return make_from_one_line(rand_line(rng, rng.randint(2, 5)))
    if kind == 1:
        return make_shift(rng.randint(-3, 3))
    if kind == 2:
        return rand_affine(rng, rng.choice((2, 3)))
    return make_gamma(rng.randint(0, 4), rng.randint(0, 4))


def zoo_perm(rng):
    p = zoo_atom(rng)
    if rng.random() < 0.35:
        p = star(p, zoo_atom(rng))
    return p


def zoo_perm_with_shift(rng, chi):
    p = zoo_perm(rng)
    return compose(p, make_shift(chi - shift_of(p)))


def rand_sigma_fin(rng):
    """Random set of pairwise non-adjacent integers in a small window."""
    out = []
    for n in range(-6, 7):
        if rng.random() < 0.3 and (not out or out[-1] < n - 1):
            out.append(n)
    if not out:
        out = [rng.randint(-6, 6)]
    return out
