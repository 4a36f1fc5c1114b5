"""cubic27: exact computations on smooth cubic surfaces over finite fields.

Modules
-------
gf       finite fields GF(p^k), tower embeddings, roots of unity, poly roots
projlin  projective points, collineations, frames, rational canonical forms
cubic    cubic forms, surface catalog, singular loci, plane sections
lines    the 27 lines, intersection graph, tritangent planes, markings
picweyl  Picard lattice, root system, the Weyl group W(E6) and its classes
autiso   Galois images, automorphism groups, isomorphism witnesses
cli      command-line interface and verification suites
"""

__version__ = "0.1.0"

from .kernels import BACKEND as KERNEL_BACKEND  # noqa: F401
