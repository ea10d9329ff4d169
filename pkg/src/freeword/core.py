"""Signed generators, words over them, and redex detection.

A generator alphabet is just a set of names.  A word is a plain tuple
of :class:`SignedGenerator` items; tuples keep words immutable and
hashable, so they can be shared, compared item by item, and used as
dict keys without ceremony.

Word text format (used by the CLI and throughout the docs): tokens
separated by whitespace, a bare identifier is a positive generator and
a trailing apostrophe marks its inverse, e.g. ``a a' b c c' b'``.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError

POSITIVE = 1
NEGATIVE = -1

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\S+")


class SignedGenerator(NamedTuple):
    """A generator name with a sign, +1 for the generator itself and
    -1 for its formal inverse."""

    name: str
    sign: int

    def __str__(self) -> str:
        return self.name if self.sign == POSITIVE else self.name + "'"


Word = tuple[SignedGenerator, ...]

EMPTY: Word = ()


def signed(name: str, sign: int = POSITIVE) -> SignedGenerator:
    """Build a signed generator, validating the name and sign."""
    if not _IDENT.fullmatch(name):
        raise ParseError("not a valid generator name", token=name)
    if sign not in (POSITIVE, NEGATIVE):
        raise ValueError(f"sign must be {POSITIVE} or {NEGATIVE}, got {sign!r}")
    return SignedGenerator(name, sign)


def invert(item: SignedGenerator) -> SignedGenerator:
    """Flip the sign, keep the name.  An involution: invert(invert(s)) == s."""
    return SignedGenerator(item.name, -item.sign)


def concat(x: Word, y: Word) -> Word:
    """Join two words.  Associative, with the empty word as unit."""
    return x + y


def is_redex_at(w: Word, p: int) -> bool:
    """True iff items p and p+1 exist and cancel each other.

    Covers both orders (``a a'`` and ``a' a``).  Out-of-range positions
    are allowed and simply yield False.
    """
    return 0 <= p <= len(w) - 2 and w[p] == invert(w[p + 1])


def find_redexes(w: Word) -> list[int]:
    """All positions where a redex starts, in ascending order."""
    return [p for p in range(len(w) - 1) if w[p] == invert(w[p + 1])]


def parse_word(text: str) -> Word:
    """Parse the whitespace-separated word text format.

    The empty (or all-whitespace) string is the empty word.  Rejects
    anything that is not ``identifier`` or ``identifier'`` with a
    ParseError carrying the offending token and its byte offset.
    """
    items = []
    for match in _TOKEN.finditer(text):
        token = match.group()
        if token.endswith("'"):
            name, sign = token[:-1], NEGATIVE
        else:
            name, sign = token, POSITIVE
        if not _IDENT.fullmatch(name):
            raise ParseError("bad token in word", token=token, offset=match.start())
        items.append(SignedGenerator(name, sign))
    return tuple(items)


def render_word(w: Word) -> str:
    """Inverse of parse_word, up to whitespace normalisation."""
    return " ".join(str(item) for item in w)
