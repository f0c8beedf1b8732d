"""Symmetric-group invariants over the rationals, the induced map between
invariant subspaces, and the monotonicity / replication checkers.

Invariants at level ``n`` are computed as the image of the averaging
projector ``(1/n!) sum_sigma act(sigma)`` -- the canonical characteristic-
zero realization of the coinvariants-to-invariants isomorphism.  The
averaging sum is accumulated from sparse action columns, so levels up to 7
stay cheap even for modules a few hundred dimensions wide.

The induced map of a set map ``f: [n] -> [n']`` between invariant subspaces
is ``(average at n') o act(f)`` restricted to the invariants at ``n``,
expressed in the reduced-echelon bases; bare set maps act through their
canonical (increasing-fiber) lifts when the module lives over N, a
convention certified harmless wherever the action descends through the
forgetful functor.

The replication checker builds the block-collapse map ``[n*m] -> [n]``
(each block of ``m`` consecutive points to one point) and asks whether the
induced map between invariant subspaces is a bijection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catcore import N, NMor, SetMap, forget, lift
from .exactla import Matrix, reduce, solve
from .repmod import permutation_action


@dataclass(frozen=True)
class InvariantBasis:
    """Basis of the fixed subspace at one level, with the averaging
    projector that produced it.  Columns are in reduced-echelon order."""
    level: int
    basis: Matrix       # dims[n] x (invariant dimension)
    projector: Matrix   # dims[n] x dims[n], idempotent

    @property
    def dim(self):
        return self.basis.cols


def _averaging_projector(V, n):
    d = V.dims[n]
    if d == 0:
        return Matrix.zeros(0, 0)
    acc = [[0] * d for _ in range(d)]
    count = 0
    for values in itertools.permutations(range(1, n + 1)):
        cols = permutation_action(V, values)
        for j, col in enumerate(cols):
            for r, c in col:
                acc[r][j] += c
        count += 1
    inv = Fraction(1, count)
    return Matrix(d, d, [[x * inv for x in row] for row in acc])


@lru_cache(maxsize=None)
def invariants_basis(V, n):
    """Invariant subspace of ``V[n]`` via the averaging projector."""
    if n < 0 or n > V.max_level:
        raise ValueError("level %d out of range" % n)
    projector = _averaging_projector(V, n)
    rref, rank, _ = reduce(projector.transpose())
    basis = Matrix.from_columns([rref.data[i] for i in range(rank)], V.dims[n])
    return InvariantBasis(n, basis, projector)


def barred_map(V, f):
    """Matrix of the induced map between invariant subspaces.

    ``f`` may be a set map or an N-morphism; it is coerced to the module's
    category (bare set maps lift canonically into N).  The result is
    expressed in the invariant bases of source and target levels.
    """
    if V.category is N and isinstance(f, SetMap):
        f = lift(f, "canonical")
    elif V.category is not N and isinstance(f, NMor):
        f = forget(f)
    src = invariants_basis(V, f.dom)
    tgt = invariants_basis(V, f.cod)
    image = tgt.projector * (V.act(f) * src.basis)
    coords = solve(tgt.basis, image)
    if coords is None:
        raise AssertionError("averaged image escaped the invariant subspace")
    return coords


@dataclass(frozen=True)
class MonotonicityReport:
    levels: tuple
    dims: tuple
    passed: bool

    def __str__(self):
        seq = " ".join(str(d) for d in self.dims)
        return "invariant dims [%s]: %s" % (seq, "nondecreasing" if self.passed else "DECREASE")


def monotonicity_check(V, n_range):
    """Dimensions of the invariant subspaces over ``n_range`` plus a
    nondecreasing verdict."""
    levels = tuple(n_range)
    if any(n < 1 or n > V.max_level for n in levels):
        raise ValueError("levels out of range 1..%d" % V.max_level)
    dims = tuple(invariants_basis(V, n).dim for n in levels)
    passed = all(a <= b for a, b in zip(dims, dims[1:]))
    return MonotonicityReport(levels, dims, passed)


def replication_map(n, m):
    """The set map ``[n*m] -> [n]`` collapsing consecutive blocks of ``m``."""
    if n < 1 or m < 1:
        raise ValueError("replication parameters must be positive")
    return SetMap(n * m, n, tuple((x - 1) // m + 1 for x in range(1, n * m + 1)))


@dataclass(frozen=True)
class ReplicationReport:
    n: int
    m: int
    source_dim: int
    target_dim: int
    matrix: Matrix
    passed: bool

    def __str__(self):
        verdict = "isomorphism" if self.passed else "NOT an isomorphism"
        return "replication (n=%d, m=%d): invariants %d -> %d, %s" % (
            self.n, self.m, self.source_dim, self.target_dim, verdict)


def replication_iso_check(V, n, m):
    """Check that block collapse induces a bijection on invariants.

    The induced map goes from the invariants at level ``n*m`` to the
    invariants at level ``n``; the report records both dimensions and the
    matrix, and passes only for a square invertible matrix.
    """
    if n * m > V.max_level:
        raise ValueError("n*m exceeds the truncation")
    f = replication_map(n, m)
    mat = barred_map(V, f)
    square = mat.rows == mat.cols
    invertible = square and reduce(mat)[1] == mat.rows
    return ReplicationReport(n, m, mat.cols, mat.rows, mat, invertible)
