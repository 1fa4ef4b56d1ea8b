"""Exact isomorphism invariants of rational specializations.

All invariants here are computed over Q after substituting rational values
for t and alpha, never over the rational-function field: exact rank
computations then reduce to fraction-free elimination over the integers.
Ranks can drop at unsampled special parameter values, so reports always
carry the sampled points alongside the verdicts.

Series computations stop at the first repeated dimension; monotonicity of
the lower central and derived series guarantees stabilization within the
dimension of the algebra.  A profile therefore either ends in 0 (nilpotent
or solvable) or repeats its final nonzero value once as the stabilization
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ValidationError
from .lie import Cochain2
from .linalg import RationalMatrix, span_basis

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

SeriesProfile = tuple[int, ...]


@dataclass(frozen=True)
class RationalAlgebra:
    """A bracket with plain rational structure constants."""

    dim: int
    table: Mapping[tuple[int, int], Vector]
    name: str = ""

    @classmethod
    def from_structure(cls, mu: Cochain2, t=None, alpha=None) -> "RationalAlgebra":
        """Specialize a symbolic bracket at rational parameter values."""
        specialized = mu
        if t is not None:
            specialized = specialized.eval_t(t)
        if alpha is not None:
            specialized = specialized.eval_alpha(alpha)
        table: dict[tuple[int, int], Vector] = {}
        for key, column in specialized.entries.items():
            values = []
            for entry in column:
                if not entry.is_constant():
                    raise ValidationError(
                        f"entry {key} still symbolic after specialization: {entry}")
                values.append(entry.constant_value())
            table[key] = tuple(values)
        return cls(mu.dim, table, mu.name)

    def bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return tuple(Fraction(0) for _ in range(self.dim))
        if i < j:
            return self.table.get((i, j), tuple(Fraction(0) for _ in range(self.dim)))
        column = self.table.get((j, i))
        if column is None:
            return tuple(Fraction(0) for _ in range(self.dim))
        return tuple(-x for x in column)

    def bracket_vec(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        for (i, j), column in self.table.items():
            coeff = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if coeff == 0:
                continue
            for k, value in enumerate(column):
                if value:
                    out[k] += coeff * value
        return tuple(out)

    def basis(self) -> list[Vector]:
        return [tuple(Fraction(1 if k == i else 0) for k in range(self.dim))
                for i in range(self.dim)]


def lower_central_series(algebra: RationalAlgebra) -> SeriesProfile:
    """Dimensions of g, [g,g], [g,[g,g]], ... until stabilization."""
    full = algebra.basis()
    dims = [algebra.dim]
    current = full
    while True:
        products = [algebra.bracket_vec(e, v) for e in full for v in current]
        current = span_basis(products)
        dims.append(len(current))
        if dims[-1] == 0 or dims[-1] == dims[-2]:
            return tuple(dims)


def derived_series(algebra: RationalAlgebra) -> SeriesProfile:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... until stabilization."""
    dims = [algebra.dim]
    current = algebra.basis()
    while True:
        products = [algebra.bracket_vec(u, v) for u, v in combinations(current, 2)]
        current = span_basis(products)
        dims.append(len(current))
        if dims[-1] == 0 or dims[-1] == dims[-2]:
            return tuple(dims)


def is_nilpotent(algebra: RationalAlgebra) -> bool:
    return lower_central_series(algebra)[-1] == 0


def is_solvable(algebra: RationalAlgebra) -> bool:
    return derived_series(algebra)[-1] == 0


def filiform_profile(dim: int) -> SeriesProfile:
    """The maximal-class profile (n, n-2, n-3, ..., 1, 0)."""
    return (dim,) + tuple(range(dim - 2, -1, -1))


def is_filiform(algebra: RationalAlgebra) -> bool:
    """True iff the algebra is nilpotent of maximal class."""
    return lower_central_series(algebra) == filiform_profile(algebra.dim)


def center_dim(algebra: RationalAlgebra) -> int:
    """Dimension of {x : [x, b_i] = 0 for all i}, by exact nullspace."""
    n = algebra.dim
    rows = []
    for i in range(1, n + 1):
        columns = [algebra.bracket(j, i) for j in range(1, n + 1)]
        for k in range(n):
            rows.append(tuple(columns[j][k] for j in range(n)))
    return len(RationalMatrix(tuple(rows)).nullspace())


def derivation_algebra(algebra: RationalAlgebra) -> tuple[int, list[Matrix]]:
    """Exact basis of {E : E[x,y] = [Ex,y] + [x,Ey]}.

    Assembles the full linear system over all basis pairs (n^2 unknowns,
    one equation per pair and component) and extracts its nullspace.
    """
    n = algebra.dim
    unknowns = n * n

    def slot(row: int, col: int) -> int:  # 1-based matrix position -> unknown
        return (row - 1) * n + (col - 1)

    rows = []
    for i, j in combinations(range(1, n + 1), 2):
        bracket_ij = algebra.bracket(i, j)
        for k in range(1, n + 1):
            coeffs = [Fraction(0)] * unknowns
            for a in range(1, n + 1):
                value = algebra.bracket(a, j)[k - 1]
                if value:
                    coeffs[slot(a, i)] += value
            for b in range(1, n + 1):
                value = algebra.bracket(i, b)[k - 1]
                if value:
                    coeffs[slot(b, j)] += value
            for m in range(1, n + 1):
                if bracket_ij[m - 1]:
                    coeffs[slot(k, m)] -= bracket_ij[m - 1]
            rows.append(tuple(coeffs))
    basis_vectors = RationalMatrix(tuple(rows)).nullspace()
    matrices = [tuple(tuple(vec[(r - 1) * n + (c - 1)] for c in range(1, n + 1))
                      for r in range(1, n + 1))
                for vec in basis_vectors]
    return len(matrices), matrices


def _matrix_commutator(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n))


def _flatten(matrix: Matrix) -> Vector:
    return tuple(x for row in matrix for x in row)


def _unflatten(vector: Sequence[Fraction], n: int) -> Matrix:
    return tuple(tuple(vector[i * n + j] for j in range(n)) for i in range(n))


def is_characteristically_nilpotent(algebra: RationalAlgebra) -> bool:
    """True iff the derivation algebra is nilpotent as a Lie algebra.

    Iterates V_1 = Der, V_{m+1} = span{[A, B] : A in Der, B in V_m} with
    matrix commutators; at most dim(Der) iterations are needed before the
    lower central series of Der must have stabilized.
    """
    n = algebra.dim
    der_dim, der_basis = derivation_algebra(algebra)
    if der_dim == 0:
        return True
    current = [_flatten(m) for m in der_basis]
    for _ in range(der_dim):
        products = [_flatten(_matrix_commutator(a, _unflatten(v, n)))
                    for a in der_basis for v in current]
        current = span_basis(products)
        if not current:
            return True
    return False


def derivation_identity_holds(algebra: RationalAlgebra, matrix: Matrix) -> bool:
    """Re-verification that one matrix satisfies the derivation identity."""
    n = algebra.dim
    for i, j in combinations(range(1, n + 1), 2):
        bracket_ij = algebra.bracket(i, j)
        lhs = tuple(sum(matrix[k][m] * bracket_ij[m] for m in range(n)) for k in range(n))
        col_i = tuple(matrix[k][i - 1] for k in range(n))
        col_j = tuple(matrix[k][j - 1] for k in range(n))
        e_i = tuple(Fraction(1 if k == i - 1 else 0) for k in range(n))
        e_j = tuple(Fraction(1 if k == j - 1 else 0) for k in range(n))
        rhs_first = algebra.bracket_vec(col_i, e_j)
        rhs_second = algebra.bracket_vec(e_i, col_j)
        if any(lhs[k] != rhs_first[k] + rhs_second[k] for k in range(n)):
            return False
    return True
