"""Structure-constant calculus: brackets, Jacobi, base change, derivations.

A bracket (or any antisymmetric bilinear map) on an n-dimensional space is
stored through its structure constants: for basis indices i < j, the column
of the value on (b_i, b_j).  Only i < j is stored and every consumer
antisymmetrizes on access, so inconsistent input is impossible by
construction.  Basis indices are 1-based throughout, matching the bundled
data files; columns are plain 0-based tuples of Scalars.

Identities such as Jacobi or the degeneration equation are bilinear or
trilinear, so checking them on basis tuples is complete; no sampling of
random vectors is ever needed for verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import DimensionMismatch, ValidationError
from .linalg import ScalarMatrix
from .scalar import ZERO, Scalar, as_scalar

Column = tuple[Scalar, ...]


def zero_column(dim: int) -> Column:
    return (ZERO,) * dim


def basis_column(dim: int, index: int) -> Column:
    """Coordinate column of the basis vector b_index (1-based)."""
    return tuple(as_scalar(1 if k == index - 1 else 0) for k in range(dim))


def add_columns(a: Column, b: Column) -> Column:
    return tuple(x + y for x, y in zip(a, b))


def scale_column(coeff: Scalar, column: Column) -> Column:
    return tuple(coeff * x for x in column)


def column_is_zero(column: Column) -> bool:
    return all(x.is_zero() for x in column)


@dataclass(frozen=True)
class SubspaceSpec:
    """Coordinate subspace spanned by the listed basis indices (1-based)."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.indices)) != len(self.indices):
            raise ValidationError("subspace indices must be distinct")
        if any(i < 1 for i in self.indices):
            raise ValidationError("subspace indices must be positive")

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class Cochain2:
    """Antisymmetric bilinear map given by columns on basis pairs i < j."""

    dim: int
    entries: Mapping[tuple[int, int], Column]
    params: frozenset[str] = frozenset()
    name: str = ""

    def __post_init__(self):
        clean: dict[tuple[int, int], Column] = {}
        for (i, j), column in self.entries.items():
            if not (1 <= i < j <= self.dim):
                raise ValidationError(f"bracket indices ({i}, {j}) out of range")
            if len(column) != self.dim:
                raise DimensionMismatch(f"column for ({i}, {j}) has wrong length")
            used = frozenset().union(*(s.symbols() for s in column))
            if not used <= self.params:
                raise ValidationError(
                    f"entry ({i}, {j}) uses undeclared parameter(s) {set(used - self.params)}")
            if not column_is_zero(column):
                clean[(i, j)] = tuple(column)
        object.__setattr__(self, "entries", clean)

    def bracket(self, i: int, j: int) -> Column:
        """Value on (b_i, b_j), antisymmetrized for any index order."""
        if i == j:
            return zero_column(self.dim)
        if i < j:
            return self.entries.get((i, j), zero_column(self.dim))
        column = self.entries.get((j, i))
        if column is None:
            return zero_column(self.dim)
        return tuple(-x for x in column)

    def bracket_eval(self, x: Column, y: Column) -> Column:
        """Bilinear evaluation on arbitrary coordinate columns."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match the bracket dimension")
        out = list(zero_column(self.dim))
        for (i, j), column in self.entries.items():
            coeff = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if coeff.is_zero():
                continue
            for k, s in enumerate(column):
                if not s.is_zero():
                    out[k] = out[k] + coeff * s
        return tuple(out)

    def pairs(self) -> Iterable[tuple[int, int]]:
        """All basis pairs i < j of the underlying space."""
        return combinations(range(1, self.dim + 1), 2)

    def map_entries(self, func, params: frozenset[str] | None = None) -> "Cochain2":
        new_entries = {key: tuple(func(s) for s in column)
                       for key, column in self.entries.items()}
        new_params = self.params if params is None else params
        return type(self)(self.dim, new_entries, new_params, self.name)

    def eval_t(self, t_value) -> "Cochain2":
        return self.map_entries(lambda s: s.eval_t(t_value),
                                self.params - {"t"})

    def eval_alpha(self, alpha_value) -> "Cochain2":
        return self.map_entries(lambda s: s.eval_alpha(alpha_value),
                                self.params - {"alpha"})

    def invert_t(self) -> "Cochain2":
        return self.map_entries(lambda s: s.invert_t())

    def add(self, other: "Cochain2") -> "Cochain2":
        if self.dim != other.dim:
            raise DimensionMismatch("dimensions differ")
        keys = set(self.entries) | set(other.entries)
        entries = {key: add_columns(self.bracket(*key), other.bracket(*key))
                   for key in keys}
        return type(self)(self.dim, entries, self.params | other.params, self.name)

    def scale(self, coeff) -> "Cochain2":
        coeff = as_scalar(coeff)
        return self.map_entries(lambda s: coeff * s,
                                self.params | coeff.symbols())

    def rename(self, name: str) -> "Cochain2":
        return type(self)(self.dim, dict(self.entries), self.params, name)


class StructureConstants(Cochain2):
    """A bracket presented by structure constants.

    Membership in the variety of Lie algebras is a checked property (see
    :func:`jacobi_check`), not an enforced invariant, so that corrupted input
    can be loaded and localized.
    """


def entries_equal(a: Cochain2, b: Cochain2) -> bool:
    """Entry-by-entry equality of two brackets (ignores names and params)."""
    if a.dim != b.dim:
        return False
    for key in set(a.entries) | set(b.entries):
        if a.bracket(*key) != b.bracket(*key):
            return False
    return True


@dataclass(frozen=True)
class JacobiReport:
    """Outcome of a Jacobi test with failing triples localized."""

    ok: bool
    failures: tuple[tuple[tuple[int, int, int], Column], ...] = ()


def jacobi_check(mu: Cochain2) -> JacobiReport:
    """Test the Jacobi identity on all basis triples, exactly.

    The residual of the triple (i, j, k) is
    [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j].
    """
    failures = []
    dim = mu.dim
    for i, j, k in combinations(range(1, dim + 1), 3):
        e_i, e_j, e_k = (basis_column(dim, a) for a in (i, j, k))
        residual = add_columns(
            add_columns(mu.bracket_eval(mu.bracket(i, j), e_k),
                        mu.bracket_eval(mu.bracket(j, k), e_i)),
            mu.bracket_eval(mu.bracket(k, i), e_j))
        if not column_is_zero(residual):
            failures.append(((i, j, k), residual))
    return JacobiReport(not failures, tuple(failures))


def lie_bracket_check(phi: Cochain2) -> bool:
    """True iff phi satisfies the Jacobi identity (antisymmetry is structural)."""
    return jacobi_check(phi).ok


def cocycle_check(mu: Cochain2, phi: Cochain2) -> bool:
    """True iff phi is a 2-cocycle of mu.

    Checked in the convention-free mixed form: for all i < j < k the sum of
    mu(phi(b_i,b_j), b_k) + phi(mu(b_i,b_j), b_k) over cyclic permutations
    vanishes.  This is exactly the t-linear coefficient of the Jacobi
    identity of mu + t*phi, so no sign convention has to be fixed.
    """
    if mu.dim != phi.dim:
        raise DimensionMismatch("dimensions differ")
    dim = mu.dim
    for i, j, k in combinations(range(1, dim + 1), 3):
        total = zero_column(dim)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            e_c = basis_column(dim, c)
            total = add_columns(total, mu.bracket_eval(phi.bracket(a, b), e_c))
            total = add_columns(total, phi.bracket_eval(mu.bracket(a, b), e_c))
        if not column_is_zero(total):
            return False
    return True


def base_change(mu: Cochain2, g: ScalarMatrix) -> StructureConstants:
    """Transport of the bracket under the basis change g.

    Returns the bracket lam with lam(x, y) = g^{-1}(mu(g x, g y)); requires
    det(g) to be a Laurent unit (raises :class:`NotAUnit` otherwise).
    """
    if g.n != mu.dim:
        raise DimensionMismatch("matrix size does not match the bracket dimension")
    g_inv = g.inverse_unit()
    params = mu.params
    for row in g.rows:
        for entry in row:
            params = params | entry.symbols()
    entries = {}
    for i, j in mu.pairs():
        column = g_inv.apply(mu.bracket_eval(g.column(i - 1), g.column(j - 1)))
        entries[(i, j)] = column
    return StructureConstants(mu.dim, entries, params, mu.name)


def is_ideal(mu: Cochain2, subspace: SubspaceSpec) -> bool:
    """True iff [g, h] lies in h coordinate-wise."""
    outside = [k for k in range(1, mu.dim + 1) if k not in subspace]
    for i in range(1, mu.dim + 1):
        for j in subspace.indices:
            column = mu.bracket(i, j)
            if any(not column[k - 1].is_zero() for k in outside):
                return False
    return True


def restrict(mu: Cochain2, subspace: SubspaceSpec) -> Cochain2:
    """Restriction to a bracket-closed coordinate subspace, reindexed 1..k."""
    order = sorted(subspace.indices)
    position = {index: pos + 1 for pos, index in enumerate(order)}
    outside = [k for k in range(1, mu.dim + 1) if k not in subspace]
    entries = {}
    for (i, j), column in mu.entries.items():
        if i in subspace and j in subspace:
            if any(not column[k - 1].is_zero() for k in outside):
                raise ValidationError(
                    f"subspace is not closed under the bracket at ({i}, {j})")
            entries[(position[i], position[j])] = tuple(column[k - 1] for k in order)
    return type(mu)(len(order), entries, mu.params, mu.name)


def is_derivation(mu: Cochain2, matrix: ScalarMatrix) -> bool:
    """True iff matrix D satisfies D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    if matrix.n != mu.dim:
        raise DimensionMismatch("matrix size does not match the bracket dimension")
    for i, j in mu.pairs():
        lhs = matrix.apply(mu.bracket(i, j))
        rhs = add_columns(
            mu.bracket_eval(matrix.column(i - 1), basis_column(mu.dim, j)),
            mu.bracket_eval(basis_column(mu.dim, i), matrix.column(j - 1)))
        if not column_is_zero(tuple(a - b for a, b in zip(lhs, rhs))):
            return False
    return True
