"""Brute-force checking layer.

Enumerates every complete reduction of a small word, wires them into a
graph whose edges are single moves, and checks the properties the rest
of the package promises: the graph is connected, transform_to produces
chains that really replay, and a word is fully reducible exactly when
its normal form is empty.

Everything here is exhaustive on purpose and guarded by a length cap
(default 12): sequence counts grow quickly with word length, so raise
the cap knowingly.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .core import NEGATIVE, POSITIVE, SignedGenerator, Word, find_redexes, invert, render_word
from .errors import CapExceeded, FreewordError
from .group import normal_form
from .moves import Move, applicable_moves, apply_move
from .reduction import ReductionSequence
from .transform import transform_to

DEFAULT_CAP = 12

Steps = tuple[int, ...]


def _check_cap(w: Word, cap: int) -> None:
    if len(w) > cap:
        raise CapExceeded(len(w), cap)


@lru_cache(maxsize=None)
def _step_lists(w: Word) -> tuple[Steps, ...]:
    # recursion over subwords; the cache is shared across calls, so
    # sweeping a whole corpus only ever expands each word once
    if not w:
        return ((),)
    found = []
    for p in find_redexes(w):
        shorter = w[:p] + w[p + 2:]
        found.extend((p,) + tail for tail in _step_lists(shorter))
    return tuple(found)


def enumerate_sequences(w: Word, cap: int = DEFAULT_CAP) -> list[ReductionSequence]:
    """All complete reductions of w, duplicate-free, in lexicographic
    position order.  Empty iff the normal form of w is nonempty; the
    empty word has exactly the empty sequence."""
    _check_cap(w, cap)
    return [ReductionSequence(w, steps) for steps in _step_lists(w)]


@dataclass
class MoveGraph:
    """All reduction sequences of one word, joined by single moves.

    nodes are the step tuples in enumeration order; adjacency maps each
    node to every applicable (move, resulting node) pair.  Every edge
    comes with its reverse: swaps are self-inverse and the two overlap
    directions undo each other.
    """

    word: Word
    nodes: tuple[Steps, ...]
    adjacency: dict[Steps, tuple[tuple[Move, Steps], ...]]

    def edges(self) -> list[tuple[Steps, Steps, Move]]:
        """Canonical undirected edge list: one entry per unordered pair,
        labelled with the move applied from the smaller node."""
        return [
            (src, dst, move)
            for src in self.nodes
            for move, dst in self.adjacency[src]
            if src < dst
        ]


def build_move_graph(w: Word, cap: int = DEFAULT_CAP) -> MoveGraph:
    sequences = enumerate_sequences(w, cap)
    adjacency = {
        seq.steps: tuple((move, result.steps) for move, result in applicable_moves(seq))
        for seq in sequences
    }
    return MoveGraph(w, tuple(seq.steps for seq in sequences), adjacency)


def check_connected(graph: MoveGraph) -> bool:
    """BFS from the first node; true iff at most one component (so
    vacuously true for irreducible words)."""
    if not graph.nodes:
        return True
    seen = {graph.nodes[0]}
    queue = deque(seen)
    while queue:
        node = queue.popleft()
        for _, other in graph.adjacency[node]:
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return len(seen) == len(graph.nodes)


def check_triviality_witness(w: Word, cap: int = DEFAULT_CAP) -> bool:
    """Any two complete reductions of w are linked by single moves.

    This is the checkable core of the statement that a fully reducible
    word carries an essentially unique proof of its triviality."""
    return check_connected(build_move_graph(w, cap))


def _distances_from(graph: MoveGraph, start: Steps) -> dict[Steps, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for _, other in graph.adjacency[node]:
            if other not in dist:
                dist[other] = dist[node] + 1
                queue.append(other)
    return dist


@dataclass
class TransformFailure:
    word: Word
    start: Steps
    target: Steps
    move_index: int | None  # which move of the chain broke, if any
    reason: str


@dataclass
class TransformReport:
    word: Word
    node_count: int
    pair_count: int = 0
    max_chain_length: int = 0
    max_bfs_distance: int = 0
    failures: list[TransformFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_pairs(
    graph: MoveGraph, pair_limit: int | None, rng: random.Random
) -> TransformReport:
    word = graph.word
    nodes = graph.nodes
    report = TransformReport(word, node_count=len(nodes))
    if not nodes:
        return report
    k = len(word) // 2
    bound = k * (k + 1) // 2 + k
    if pair_limit is None or len(nodes) ** 2 <= pair_limit:
        pairs = itertools.product(nodes, nodes)
    else:
        pairs = ((rng.choice(nodes), rng.choice(nodes)) for _ in range(pair_limit))
    node_set = set(nodes)
    dist_cache: dict[Steps, dict[Steps, int]] = {}

    def fail(start, target, move_index, reason):
        report.failures.append(TransformFailure(word, start, target, move_index, reason))

    for start, target in pairs:
        report.pair_count += 1
        r = ReductionSequence(word, start)
        s = ReductionSequence(word, target)
        chain = transform_to(r, s)
        report.max_chain_length = max(report.max_chain_length, len(chain))
        if len(chain) > bound:
            fail(start, target, None, f"chain length {len(chain)} exceeds bound {bound}")
        current = r
        broke = False
        for idx, move in enumerate(chain):
            try:
                current = apply_move(current, move)
            except FreewordError as err:
                fail(start, target, idx, str(err))
                broke = True
                break
            if current.steps not in node_set:
                fail(start, target, idx, "intermediate sequence is not a known node")
                broke = True
                break
        if not broke and current.steps != target:
            fail(start, target, None, "chain does not replay to the target")
        if start not in dist_cache:
            dist_cache[start] = _distances_from(graph, start)
        distance = dist_cache[start].get(target)
        if distance is None:
            fail(start, target, None, "target unreachable by single moves")
        else:
            report.max_bfs_distance = max(report.max_bfs_distance, distance)
    return report


def check_transform_chain(
    w: Word,
    cap: int = DEFAULT_CAP,
    pair_limit: int | None = None,
    rng: random.Random | None = None,
) -> TransformReport:
    """Replay-check transform_to over ordered pairs of sequences of w.

    Exhaustive over all ordered pairs by default; pass pair_limit to
    sample that many pairs instead (seeded rng for reproducibility).
    Each pair must replay from start to target through known nodes
    within the k(k+1)/2 + k length bound, and the target must also be
    reachable by BFS, whose distance is reported alongside the chain
    length for comparison.
    """
    return _check_pairs(build_move_graph(w, cap), pair_limit, rng or random.Random(0))


def signed_alphabet(names: tuple[str, ...] | list[str]) -> tuple[SignedGenerator, ...]:
    """The 2n signed items over the given names, in name order with the
    positive item first."""
    return tuple(SignedGenerator(n, s) for n in names for s in (POSITIVE, NEGATIVE))


def all_words(names: tuple[str, ...] | list[str], length: int):
    """Every word of exactly this length, lexicographic over the signed
    alphabet.  4^length words for two names, so keep lengths small."""
    yield from itertools.product(signed_alphabet(names), repeat=length)


def random_reducible_word(
    names: tuple[str, ...] | list[str], pairs: int, rng: random.Random
) -> Word:
    """A word of length 2*pairs with empty normal form, built by
    repeatedly inserting a cancelling pair at a random position.  Every
    fully reducible word can arise this way."""
    letters = signed_alphabet(names)
    word: Word = ()
    for _ in range(pairs):
        item = rng.choice(letters)
        at = rng.randrange(len(word) + 1)
        word = word[:at] + (item, invert(item)) + word[at:]
    return word


@dataclass
class CorpusReport:
    """Aggregated results of sweeping a corpus of words."""

    words_checked: int = 0
    sequences_enumerated: int = 0
    pairs_verified: int = 0
    max_chain_length: int = 0
    max_bfs_distance: int = 0
    disconnected: list[Word] = field(default_factory=list)
    mismatched: list[Word] = field(default_factory=list)
    transform_failures: list[TransformFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.disconnected or self.mismatched or self.transform_failures)


def check_corpus(
    words,
    cap: int = DEFAULT_CAP,
    pair_threshold: int = 200,
    pair_samples: int = 50,
    seed: int = 0,
) -> CorpusReport:
    """Run the full battery over a corpus of words.

    Per word: the reducible/empty-normal-form equivalence, move-graph
    connectivity, and transform_to replay checks.  Pairs are exhaustive
    up to pair_threshold nodes and sampled (pair_samples of them)
    beyond.  Words are processed in sorted text order, so reports are
    deterministic whatever order the corpus arrives in.
    """
    rng = random.Random(seed)
    report = CorpusReport()
    for w in sorted(words, key=render_word):
        report.words_checked += 1
        sequences = enumerate_sequences(w, cap)
        report.sequences_enumerated += len(sequences)
        if bool(sequences) != (normal_form(w) == ()):
            report.mismatched.append(w)
        if not sequences:
            continue
        graph = build_move_graph(w, cap)
        if not check_connected(graph):
            report.disconnected.append(w)
        limit = None if len(graph.nodes) <= pair_threshold else pair_samples
        sub = _check_pairs(graph, limit, rng)
        report.pairs_verified += sub.pair_count
        report.max_chain_length = max(report.max_chain_length, sub.max_chain_length)
        report.max_bfs_distance = max(report.max_bfs_distance, sub.max_bfs_distance)
        report.transform_failures.extend(sub.failures)
    return report
