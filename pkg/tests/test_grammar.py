"""Surface syntax: parsing expressions, formatting canonical forms."""

import pytest

from conftest import zoo_perm

from demaz import (
    DemazError,
    ParseError,
    ResidueClass,
    format_perm,
    identity,
    make_affine,
    make_from_one_line,
    make_gamma,
    make_shift,
    make_sigma_set,
    parse_perm,
)


def test_parse_sym():
    assert parse_perm("sym(1; 2 3 1)") == make_from_one_line((2, 3, 1))
    assert parse_perm("sym(4; 5 6 4)") == make_from_one_line((5, 6, 4), off=4)


def test_parse_aff():
    assert parse_perm("aff(2; 3 -2)") == make_affine([3, -2], 2)


def test_parse_shift():
    assert parse_perm("shift(-2)") == make_shift(-2)
    assert parse_perm("shift(0)") == identity()


def test_parse_sigma():
    assert parse_perm("sigma(1,4)") == make_sigma_set([1, 4])
    assert parse_perm("sigma(3)") == make_sigma_set([3])


def test_parse_sigma_mod():
    assert parse_perm("sigma_mod(1,3)") == make_sigma_set(ResidueClass(1, 3))


def test_parse_gamma():
    assert parse_perm("gamma(3,5)") == make_gamma(3, 5)


def test_parse_ep():
    assert parse_perm("ep(k=2, lo=0; 3 -2)") == make_affine([3, -2], 2)
    assert parse_perm("ep(k=1, lo=0; 0)") == identity()


def test_whitespace_tolerance():
    assert parse_perm("  sym( 1 ;  2   3 1 )  ") == make_from_one_line((2, 3, 1))


def test_round_trip(rng):
    for _ in range(200):
        p = zoo_perm(rng)
        assert parse_perm(format_perm(p)) == p


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "sym()",
        "shift(x)",
        "ep(k=2; 3 -2)",
        "frob(1)",
        "sym(1; 2 3 1",
    ],
)
def test_parse_rejects_syntax(bad):
    with pytest.raises(ParseError):
        parse_perm(bad)


@pytest.mark.parametrize(
    "bad",
    [
        "sym(1; 1 1)",
        "sym(1; 2 3)",
        "aff(2; 0 2)",
        "aff(0; 1)",
        "sigma(1,2)",
        "sigma_mod(0,1)",
        "gamma(-1,2)",
        "ep(k=2, lo=0; 3)",
    ],
)
def test_parse_rejects_semantics(bad):
    # syntactically fine, semantically impossible: domain error, not parse
    with pytest.raises(DemazError) as ei:
        parse_perm(bad)
    assert not isinstance(ei.value, ParseError)


def test_error_messages_locate_problem():
    with pytest.raises(ParseError) as ei:
        parse_perm("sym(1; 2 q 1)")
    assert "q" in str(ei.value)
