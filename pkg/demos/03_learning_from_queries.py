"""Walkthrough: recovering a hidden antitone function from value queries.

The learner may evaluate the hidden function anywhere on the INF-extended
domain.  It keeps a hypothesis, computes a point set that would pin the
hypothesis down uniquely, and asks the oracle about exactly those points;
every disagreement yields a finite point where the hidden function drops
strictly below the hypothesis.
"""

import random

from commrep import Oracle, Rep, equal_fn, learn
from commrep.commutator import example

lat, hidden = example("div52")
name = lat.name

queries = []


def query(vec):
    queries.append(vec)
    return hidden.eval_ext(vec)


history = []
learned = learn(Oracle(hidden.dim, lat, query), history=history)

print("hidden points:  ", [(v, name(e)) for v, e in hidden.points])
print("learned points: ", [(v, name(e)) for v, e in learned.points])
print("same function:  ", equal_fn(learned, hidden))
print("rounds:         ", len(history))
print("oracle queries: ", len(queries))
for vec, val in history:
    print(f"  counterexample {vec} -> {name(val)}")

# The hypothesis only ever decreases: each added point lies on the hidden
# graph, so the hidden function stays below the hypothesis throughout.
partial = []
for vec, val in history:
    before = Rep(lat, hidden.dim, partial)
    print(f"  at {vec}: hypothesis {name(before.eval(vec))} dropped to {name(val)}")
    partial.append((vec, val))

# Random round trips over a small lattice.
print("\nrandom round trips on the divisor lattice of 12:")
from commrep import divisor_lattice

d12 = divisor_lattice(12)
rng = random.Random(5)
for trial in range(5):
    pts = [
        (
            (rng.randrange(4), rng.randrange(4)),
            rng.randrange(d12.m),
        )
        for _ in range(rng.randrange(5))
    ]
    target = Rep(d12, 2, pts)
    asked = []

    def count_query(vec, target=target, asked=asked):
        asked.append(vec)
        return target.eval_ext(vec)

    got = learn(Oracle(2, d12, count_query))
    print(
        f"  trial {trial}: {len(target.points)} hidden points, "
        f"{len(asked)} queries, recovered: {equal_fn(got, target)}"
    )
