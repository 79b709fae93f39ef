"""Exact GF(2) computations for polynomial algebras under Steenrod squares.

Subsystems:

- :mod:`cohitlab.f2linalg` — bit-packed exact linear algebra over GF(2);
- :mod:`cohitlab.polyspace` — monomials, weight vectors, spikes, duals;
- :mod:`cohitlab.steenrod` — Steenrod squares, hit spans, primitives;
- :mod:`cohitlab.cohit` — quotient bases, weight subquotients, halving maps;
- :mod:`cohitlab.glaction` — GL_q(F2) action, invariants, coinvariants;
- :mod:`cohitlab.lambda_algebra` — admissible words, rewriting, homology;
- :mod:`cohitlab.transferlab` — the algebraic transfer and verdict reports;
- :mod:`cohitlab.cli` — the ``cohitlab`` command-line entry point.
"""

__version__ = "0.1.0"
