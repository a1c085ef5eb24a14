"""Classify a random point of the (2,1) family and show the basis change."""

from structalg import canonical_algebra
from structalg.registry import Params21, classify_21, family_21, transport

p = Params21(beta1="2", beta3="1/2", alpha3="-1")
r = classify_21(p)
print("parameters:", p.to_json())
print("label:", r.label)
print("basis change (columns):")
for row in r.basis_change:
    print("  ", [str(x) for x in row])
same = transport(family_21(p), r.basis_change) == canonical_algebra(r.label)
print("transported table equals canonical:", same)
