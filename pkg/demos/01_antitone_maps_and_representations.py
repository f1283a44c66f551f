"""Walkthrough: representing an order-reversing map by finitely many points.

A finite point set G prescribes upper bounds; the represented function
sends x to the meet of all prescribed values below x.  This script builds
the divisor-of-52 example, evaluates the function on both the plain and
the INF-extended domain, and derives its canonical and complete
representations.
"""

from commrep import INF, ExtRep, check_complete
from commrep.commutator import example

lat, rep = example("div52")
name = lat.name

print("lattice elements:", ", ".join(lat.names))
print("prescribed points:")
for vec, val in rep.points:
    print(f"  F{vec} <= {name(val)}")

print("\nsome values:")
for x in [(0, 0), (10, 20), (30, 5), (30, 20), (12, 25)]:
    print(f"  F{x} = {name(rep.eval(x))}")

# The same meet rule evaluates the antitone continuation on vectors with
# unbounded coordinates.
print("\ncontinuation values:")
for x in [(29, INF), (INF, 19), (INF, INF), (9, INF)]:
    print(f"  F^({x}) = {name(rep.eval_ext(x))}")
    b = rep.witness(x)
    print(f"      attained at the finite point {b}: F{b} = {name(rep.eval(b))}")

# Canonical representation: for every value, the minimal vectors where it
# is attained.  It represents the same function.
print("\ncanonical representation:")
for vec, val in rep.canonical().points:
    print(f"  {vec} -> {name(val)}")

# Sublevels are upward closed, hence antichains of minimal generators.
print("\nminimal vectors with value below 26:", rep.sublevel("26").gens)
print("minimal vectors with value below 2: ", rep.sublevel("2").gens)

# A complete representation adds extended points until exactly one
# antitone function fits through them.
comp = rep.complete()
print("\ncomplete representation:")
for vec, val in comp.points:
    print(f"  {vec} -> {name(val)}")
print("accepted by the completeness check:", check_complete(rep, comp))

# Any superset of a complete point set inside the graph stays complete;
# dropping an essential point breaks uniqueness.
trimmed = ExtRep(lat, 2, [(v, e) for v, e in comp.points if v != (INF, INF)])
print("without the all-INF point still complete?", check_complete(rep, trimmed))

# This function cannot be pinned down by finite-domain points alone: along
# the first axis it never reaches the bottom element.
print("\ndetermined by finitely many plain points?", rep.finitely_determinable())
print("value at (INF, 0):", name(rep.eval_ext((INF, 0))), "(never drops to 1)")
