"""Exact generating functions for transposition walks in symmetric-group
Cayley graphs, and the hypergeometric tau series built from them.

Subpackages by topic:

- partitions, characters: combinatorial substrate (hooks, contents,
  Murnaghan-Nakayama character tables with orthogonality validation)
- symfunc: power-sum / Schur bases of the ring of symmetric functions
- groupalg: explicit C[S_n], Jucys-Murphy elements, the brute-force walk
  oracle for all constraint families
- center, twists: the center of C[S_n] in class-sum and idempotent bases,
  content-product twist eigenvalues, connection coefficients, convolution
  coefficient families
- tauseries: double Schur / power-sum series assembly, determinant
  cross-checks, formal logarithm for connected (transitive) counts
- cli: the hurwitz-tau command line tool
- verify: the named verification suites behind `hurwitz-tau verify`
"""

__version__ = "0.1.0"
