"""Textual permutation expressions.

The accepted forms are

    sym(<off>; v1 v2 ... vd)        finite rearrangement of [off, off+d-1]
    aff(<k>; v0 ... v_{k-1})        fully periodic modulo k
    shift(<chi>)                    the translation n -> n - chi
    sigma(n1,n2,...)                adjacent transpositions at a finite set
    sigma_mod(<n>,<k>)              adjacent transpositions at n + kZ
    gamma(<m>,<n>)                  order-preserving two-block shuffle
    ep(k=<k>, lo=<lo>; v_lo ... v_hi)   raw window form

Integers are decimal with an optional sign.  ``format_perm`` always emits the
canonical ep(...) form, and ``parse_perm(format_perm(p)) == p``.
"""

from __future__ import annotations

from .errors import ParseError
from .perm import (
    Permutation,
    ResidueClass,
    from_window,
    make_affine,
    make_from_one_line,
    make_gamma,
    make_shift,
    make_sigma_set,
)

__all__ = ["parse_perm", "format_perm"]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def peek(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalpha() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a name")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def int_list_ws(self) -> list[int]:
        out = [self.integer()]
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and (
                self.text[self.pos].isdigit() or self.text[self.pos] in "+-"
            ):
                out.append(self.integer())
            else:
                return out

    def int_list_comma(self) -> list[int]:
        self.skip_ws()
        if self.peek(")"):
            return []
        out = [self.integer()]
        while self.peek(","):
            self.expect(",")
            out.append(self.integer())
        return out

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


def parse_perm(text: str) -> Permutation:
    """Parse one permutation expression; errors carry the failing position."""
    sc = _Scanner(text)
    head = sc.ident()
    sc.expect("(")
    if head == "sym":
        off = sc.integer()
        sc.expect(";")
        vals = sc.int_list_ws()
        sc.expect(")")
        sc.end()
        return make_from_one_line(vals, off)
    if head == "aff":
        k = sc.integer()
        sc.expect(";")
        vals = sc.int_list_ws()
        sc.expect(")")
        sc.end()
        return make_affine(vals, k)
    if head == "shift":
        chi = sc.integer()
        sc.expect(")")
        sc.end()
        return make_shift(chi)
    if head == "sigma":
        members = sc.int_list_comma()
        sc.expect(")")
        sc.end()
        return make_sigma_set(members)
    if head == "sigma_mod":
        n = sc.integer()
        sc.expect(",")
        k = sc.integer()
        sc.expect(")")
        sc.end()
        return make_sigma_set(ResidueClass(n, k))
    if head == "gamma":
        m = sc.integer()
        sc.expect(",")
        n = sc.integer()
        sc.expect(")")
        sc.end()
        return make_gamma(m, n)
    if head == "ep":
        sc.expect("k")
        sc.expect("=")
        k = sc.integer()
        sc.expect(",")
        sc.expect("lo")
        sc.expect("=")
        lo = sc.integer()
        sc.expect(";")
        vals = sc.int_list_ws()
        sc.expect(")")
        sc.end()
        return from_window(k, lo, vals)
    sc.pos = 0
    raise sc.error(f"unknown form {head!r}")


def format_perm(p: Permutation) -> str:
    """Canonical textual form; inverse of parse_perm on canonical values."""
    body = " ".join(str(v) for v in p.vals)
    return f"ep(k={p.period}, lo={p.lo}; {body})"
