"""Exact invariants of supersolvable toric arrangements.

Subpackages cover integer linear algebra, the poset of layers and fibration
chains, braid and free-group word machinery, homological root homomorphisms,
numerical braid monodromy tracing, and the derived group-theoretic and
cohomological invariants, with a command line front end.
"""

__version__ = "0.1.0"
