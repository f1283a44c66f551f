"""Exact learning of an antitone function from evaluation queries.

The target is a black box answering evaluation queries on the extended
domain (INF coordinates allowed) and is assumed to behave like the
continuation of some antitone function with a finite representation.
Queries on the finite domain alone can never pin such a function down in
general, which is exactly why the oracle works on the extended domain.

The loop keeps a hypothesis representation G, computes a point set that
would pin the hypothesis down uniquely, and queries the oracle on it.  If
the oracle agrees everywhere the hypothesis is correct; otherwise a finite
counterexample where the target drops strictly below the hypothesis exists
and gets added to G.  The hypothesis decreases strictly in every round and
antitone functions admit no infinite strictly descending chain, so the
loop terminates for honest oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable, Iterator

from .antitone import Rep
from .lattice import Lattice
from .vectors import Vec, is_finite_vec

__all__ = ["Oracle", "RoundLimitError", "learn", "oracle_from_rep", "vectors_by_weight"]


class RoundLimitError(RuntimeError):
    """The learning loop exhausted its round budget.

    Signals an oracle inconsistent with any finitely represented antitone
    function, or a limit set too low for the target at hand.
    """


@dataclass(frozen=True)
class Oracle:
    """An evaluation black box: dimension, value lattice and query function.

    ``query`` maps an extended vector to a lattice element index and must
    be consistent with the continuation of an antitone function for the
    learning loop to be guaranteed to terminate.
    """

    dim: int
    lattice: Lattice
    query: Callable[[Vec], int]


def oracle_from_rep(rep: Rep) -> Oracle:
    """Wrap a representation as an oracle answering with its continuation."""
    return Oracle(rep.dim, rep.lattice, rep.eval_ext)


def vectors_by_weight(dim: int) -> Iterator[Vec]:
    """All finite vectors, by increasing coordinate sum, then lexicographic."""
    for total in count():
        yield from _compositions(total, dim)


def _compositions(total: int, parts: int) -> Iterator[Vec]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def learn(oracle: Oracle, max_rounds: int = 10_000, history: list | None = None) -> Rep:
    """Recover a representation of the oracle's function.

    Each round queries the oracle on a point set that pins the current
    hypothesis down uniquely.  A disagreeing finite point is itself a
    counterexample; if only extended points disagree, a finite one is
    found by fair enumeration.  ``history``, when given, receives the
    (vector, value) pair added in each round.

    Raises :class:`RoundLimitError` after ``max_rounds`` rounds.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    lat, dim = oracle.lattice, oracle.dim
    answers: dict[Vec, int] = {}

    def ask(v: Vec) -> int:
        if v not in answers:
            answers[v] = lat.resolve(oracle.query(v))
        return answers[v]

    current = Rep(lat, dim, ())
    for _ in range(max_rounds):
        pinned = current.complete()
        mismatches = [(v, val) for v, val in pinned.points if ask(v) != val]
        if not mismatches:
            return current
        added = None
        for v, val in mismatches:
            if is_finite_vec(v) and lat.leq(ask(v), val):
                added = (v, ask(v))
                break
        if added is None:
            for v in vectors_by_weight(dim):
                got = ask(v)
                have = current.eval(v)
                if got != have and lat.leq(got, have):
                    added = (v, got)
                    break
        if history is not None:
            history.append(added)
        current = Rep(lat, dim, current.points + (added,))
    raise RoundLimitError(
        f"no consistent function found within {max_rounds} rounds"
    )
