"""Reduction sequences: stepwise cancellations taking a word to empty.

A sequence stores the list of redex positions it removes.  Each
position refers to the word as it stands *after* all earlier steps, not
to the original word; that keeps every step a plain local operation.
A word of length 2k is consumed by exactly k steps, and odd-length
words admit no sequence at all.

Sequence text format: comma or whitespace separated positions, e.g.
``3,0,0``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .core import Word, is_redex_at
from .errors import IncompleteReduction, InvalidRedex, ParseError


class ReductionSequence(NamedTuple):
    """A word together with step positions reducing it to the empty word.

    Compares by value: two sequences over the same word are equal
    exactly when their position lists are.  Build instances through
    validate_sequence, or through the move and transform operations,
    which preserve validity by construction.
    """

    word: Word
    steps: tuple[int, ...]


def _pair_at(w: Word, p: int) -> tuple | None:
    if 0 <= p <= len(w) - 2:
        return (w[p], w[p + 1])
    return None


def apply_step(w: Word, p: int) -> Word:
    """Remove the cancelling pair at positions p and p+1."""
    if not is_redex_at(w, p):
        raise InvalidRedex(p, pair=_pair_at(w, p))
    return w[:p] + w[p + 2:]


def validate_sequence(w: Word, positions: Iterable[int]) -> ReductionSequence:
    """Check that the positions reduce w all the way to the empty word.

    Raises InvalidRedex (carrying the failing step index and the pair
    found there) or IncompleteReduction (carrying the leftover word).
    """
    steps = tuple(positions)
    current = w
    for k, p in enumerate(steps):
        if not is_redex_at(current, p):
            raise InvalidRedex(p, pair=_pair_at(current, p), step=k)
        current = current[:p] + current[p + 2:]
    if current:
        raise IncompleteReduction(current)
    return ReductionSequence(w, steps)


def run_sequence(r: ReductionSequence) -> list[Word]:
    """The trace of intermediate words, from r.word down to ().

    len(result) == len(r.steps) + 1 and consecutive words shrink by 2.
    """
    trace = [r.word]
    for p in r.steps:
        trace.append(apply_step(trace[-1], p))
    return trace


def word_before_step(r: ReductionSequence, i: int) -> Word:
    """The word that step i acts on (r.word after steps 0..i-1)."""
    current = r.word
    for p in r.steps[:i]:
        current = apply_step(current, p)
    return current


def step_of_index(r: ReductionSequence, index: int) -> int:
    """The step number at which item ``index`` of r.word gets removed.

    Every index of the original word is consumed by exactly one step of
    a complete sequence.  Tracks the surviving original indices through
    the steps; desk-scale words keep this cheap.
    """
    if not 0 <= index < len(r.word):
        raise IndexError(f"index {index} outside word of length {len(r.word)}")
    alive = list(range(len(r.word)))
    for k, p in enumerate(r.steps):
        if index in (alive[p], alive[p + 1]):
            return k
        del alive[p:p + 2]
    raise AssertionError("a complete sequence consumes every index")


def parse_steps(text: str) -> tuple[int, ...]:
    """Parse ``3,0,0`` (or ``3 0 0``) into a position tuple."""
    steps = []
    for part in text.replace(",", " ").split():
        if not part.isdigit():
            raise ParseError("bad step position", token=part)
        steps.append(int(part))
    return tuple(steps)


def render_steps(steps: Iterable[int]) -> str:
    return ",".join(str(p) for p in steps)
