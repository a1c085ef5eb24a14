"""Exact computations with 3-dimensional structurable algebras over Q(i).

Modules: ``field`` (Q(i) arithmetic), ``linalg`` (exact RREF and subspaces),
``algebra`` (algebras with involution), ``registry`` (the classified
algebras and their families), ``analysis`` (derivations, automorphisms,
identities, subalgebras), ``constructions`` (Allison-Hein and Allison-Kantor),
``lie`` (Lie structure theory), ``fixtures``, ``reproduce`` and ``cli``.
"""

from .algebra import AlgebraWithInvolution
from .field import GaussianRational, as_gr
from .lie import LieAlgebra
from .registry import LABELS, canonical_algebra

__all__ = ["AlgebraWithInvolution", "GaussianRational", "as_gr", "LieAlgebra", "LABELS",
           "canonical_algebra"]
__version__ = "0.1.0"
