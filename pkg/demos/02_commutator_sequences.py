"""Walkthrough: operation sequences, bracket values and equality sets.

A symmetric operation sequence on a lattice is a function of argument
multisets, encoded as occurrence-count vectors.  The built-in examples B
and B7 live on the three element chain 0 < alpha < 1: both have binary
value alpha on (1, 1) and collapse to 0 as soon as alpha and 1 mix, but B7
additionally drops to 0 once eight or more arguments equal 1.
"""

from commrep import (
    eval_commutator,
    eval_extended,
    is_admissible,
    reduced_equalities,
    to_equalities,
    to_extended_equalities,
)
from commrep.commutator import example
from commrep.hc import admissibility_report

lat, b = example("B")
_, b7 = example("B7")
name = lat.name

print("bracket values of B:")
for args in (["1"], ["alpha"], ["1", "1"], ["1", "alpha"], ["1"] * 5):
    print(f"  [{','.join(args)}] = {name(eval_commutator(b, args))}")

print("\nbracket values of B7:")
for n in (2, 7, 8, 9):
    print(f"  [{'1,' * (n - 1)}1] = {name(eval_commutator(b7, ['1'] * n))}")

# Extended brackets allow a set of elements to be inserted any number of
# times; their value is the meet over all insertions.
print("\nextended brackets of B:")
print("  [{1}; ] =", name(eval_extended(b, ["1"], [])))
print("  [{0,alpha,1}; ] =", name(eval_extended(b, ["0", "alpha", "1"], [])))

# The canonical points translate into plain equalities; the sequence is
# the largest symmetric antitone one satisfying them.
print("\nequalities characterizing B from above:")
for eq in to_equalities(b):
    print(" ", eq.render(lat))

print("\nafter dropping the ones entailed by boundedness and monotony:")
for eq in reduced_equalities(b):
    print(" ", eq.render(lat))

print("\nsame reduction for B7:")
for eq in reduced_equalities(b7):
    print(" ", eq.render(lat))

# Extended equalities pin the sequence down uniquely.
print("\nextended equalities determining B uniquely:")
for eq in to_extended_equalities(b):
    print(" ", eq.render(lat))

# Structural properties are decided from the finite representation.
print("\nadmissible (bounded, monotone, join distributive, nested)?")
print("  B: ", is_admissible(b))
print("  B7:", is_admissible(b7))

report = admissibility_report(b)
print("\nfull report for B:")
for key in ("hc1", "hc2", "hc3", "hc4", "hc7", "hc8"):
    print(f"  {key}: {report[key]['holds']}")
