"""The free group over an alphabet, computed on normal forms.

A normal form is a word without redexes.  It is the canonical
representative of its group element, so deciding equality means
normalising and comparing tuples.
"""

from __future__ import annotations

from .core import SignedGenerator, Word, find_redexes, invert


def normal_form(w: Word) -> Word:
    """Cancel everything in one left-to-right stack pass.  Linear time,
    idempotent, and the result has no redex."""
    out: list[SignedGenerator] = []
    for item in w:
        if out and out[-1] == invert(item):
            out.pop()
        else:
            out.append(item)
    return tuple(out)


def is_normal(w: Word) -> bool:
    """True iff w contains no redex."""
    return not find_redexes(w)


def mul(u: Word, v: Word) -> Word:
    """Group product: concatenate and renormalise."""
    return normal_form(u + v)


def inv(u: Word) -> Word:
    """Group inverse: reverse the word and flip every sign.

    Sends normal forms to normal forms, no renormalisation needed: a
    redex in the output would mirror a redex in the input.
    """
    return tuple(invert(item) for item in reversed(u))


def eq(u: Word, v: Word) -> bool:
    """Do two words name the same group element?"""
    return normal_form(u) == normal_form(v)


def cons(item: SignedGenerator, w: Word) -> Word:
    """Prepend one signed generator, no cancellation.  The raw action
    whose normalised version multiplies by a length-1 word."""
    return (item,) + w


def abelianize(w: Word) -> dict[str, int]:
    """Exponent sum per generator name, zero sums dropped, keys sorted.

    Invariant under cancellation, and additive: the map of mul(u, v) is
    the pointwise sum of the maps of u and v.
    """
    sums: dict[str, int] = {}
    for item in w:
        sums[item.name] = sums.get(item.name, 0) + item.sign
    return {name: total for name, total in sorted(sums.items()) if total != 0}
