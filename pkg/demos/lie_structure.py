"""Build F(A) for every nontrivial algebra and print its structure report."""

from structalg import canonical_algebra
from structalg.constructions import ak_construct
from structalg.lie import analysis_report
from structalg.registry import NONTRIVIAL

for lab in NONTRIVIAL:
    rep = analysis_report(ak_construct(canonical_algebra(lab)))
    print(f"F({lab}): dim {rep['dim']:>2}  perfect={rep['perfect']!s:<5}  "
          f"radical {rep['radical_dim']:>2} (nilindex {rep['radical_nilindex']})  levi {rep['levi']}")
