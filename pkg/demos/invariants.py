"""Derivations, functional identities and C(A) at a glance."""

from structalg import canonical_algebra
from structalg.analysis import derivation_algebra, functional_identity_space
from structalg.constructions import allison_hein
from structalg.registry import LABELS

print(f"{'label':<6}{'Der':>5}{'barDer':>8}{'FI':>5}{'Der C':>7}")
for lab in LABELS:
    a = canonical_algebra(lab)
    dc = derivation_algebra(allison_hein(a).as_algebra()).dim if a.dim == 3 else "-"
    print(f"{lab:<6}{derivation_algebra(a).dim:>5}{derivation_algebra(a, True).dim:>8}"
          f"{functional_identity_space(a).dim:>5}{dc!s:>7}")
