"""Rerouting reduction sequences with move chains.

front_reduction brings the step consuming a chosen redex to the front;
transform_to connects any two sequences of the same word; the
extend_reduction / drop_redex pair inserts or removes a cancelling pair
while keeping the rest of the reduction intact.  Everything returns
explicit move chains, so each rewrite can be replayed and audited.
"""

from __future__ import annotations

from .core import SignedGenerator, Word, invert, is_redex_at
from .errors import InvalidRedex, WordMismatch
from .moves import (
    LEFT,
    OVERLAP_LEFT,
    OVERLAP_RIGHT,
    RIGHT,
    SWAP,
    Move,
    MoveChain,
    overlap_switch,
    swap,
)
from .reduction import ReductionSequence, apply_step, step_of_index


def front_reduction(r: ReductionSequence, p: int) -> tuple[MoveChain, ReductionSequence]:
    """Rewrite r so that its first step removes the redex at p.

    Returns the move chain together with the rewritten sequence;
    replaying the chain on r yields exactly that sequence.

    Let m and n be the steps of r consuming items p and p+1.  If m == n
    the consuming step is bubbled to the front with adjacent swaps
    (never blocked: a step independent of everything before it stays
    independent while moving left).  Otherwise the earlier of the two
    steps consumes its item together with a third, equal neighbour, an
    overlapping configuration; one overlap switch retargets that step
    onto the marked pair, reducing to the first case.  The chain length
    is at most one overlap switch plus steps-1 swaps.
    """
    if not is_redex_at(r.word, p):
        pair = (r.word[p], r.word[p + 1]) if 0 <= p <= len(r.word) - 2 else None
        raise InvalidRedex(p, pair=pair)
    m = step_of_index(r, p)
    n = step_of_index(r, p + 1)
    moves: list[Move] = []
    current = r
    if m > n:
        # item p+1 was cancelled rightwards first; pull step n onto (p, p+1)
        current = overlap_switch(current, n, LEFT)
        moves.append(Move(OVERLAP_LEFT, n))
        front = n
    elif m < n:
        # mirror case: item p was cancelled leftwards first
        current = overlap_switch(current, m, RIGHT)
        moves.append(Move(OVERLAP_RIGHT, m))
        front = m
    else:
        front = m
    for i in range(front - 1, -1, -1):
        current = swap(current, i)
        moves.append(Move(SWAP, i))
    assert current.steps[0] == p, "bubbled step must land on the marked redex"
    return tuple(moves), current


def transform_to(r: ReductionSequence, s: ReductionSequence) -> MoveChain:
    """A move chain rewriting r into s.

    Both sequences must reduce the same word.  Level by level: bring the
    redex s removes first to the front of r, drop the now-identical
    first steps, and continue on the remainders; moves found later apply
    past the fixed prefix, so their step indices are lifted.  The chain
    is correct, not minimal: apply_chain(r, result) == s, with length at
    most k(k+1)/2 + k for k steps.  r == s still runs the full pass and
    may return a nonempty chain that replays to r itself.
    """
    if r.word != s.word:
        raise WordMismatch(
            f"sequences reduce different words ({len(r.word)} and {len(s.word)} items)"
        )
    chain: list[Move] = []
    word = r.word
    current = r
    remaining = s.steps
    offset = 0
    while remaining:
        p = remaining[0]
        prefix, fronted = front_reduction(current, p)
        chain.extend(Move(move.kind, move.at + offset) for move in prefix)
        word = apply_step(word, p)
        current = ReductionSequence(word, fronted.steps[1:])
        remaining = remaining[1:]
        offset += 1
    return tuple(chain)


def extend_reduction(
    y: Word, item: SignedGenerator, z: Word, r: ReductionSequence
) -> ReductionSequence:
    """Insert a cancelling pair and reduce it first.

    Given r reducing y ++ z, returns the sequence over
    y ++ (item, item') ++ z whose first step removes the inserted pair
    at position len(y) and whose remaining steps are exactly r's.
    """
    if r.word != y + z:
        raise WordMismatch("sequence does not reduce the concatenation of the given parts")
    word = y + (item, invert(item)) + z
    return ReductionSequence(word, (len(y),) + r.steps)


def drop_redex(r: ReductionSequence, p: int) -> ReductionSequence:
    """Remove the redex at p from r's word and keep a reduction of the rest.

    front_reduction rewrites r so step 0 consumes exactly that pair;
    dropping the step leaves a complete reduction of the shorter word.
    Exact inverse of extend_reduction: extending y, z with a pair at
    len(y) and dropping position len(y) returns the original sequence.
    """
    _, fronted = front_reduction(r, p)
    return ReductionSequence(apply_step(r.word, p), fronted.steps[1:])
