"""Linear deformations from ideal derivations, and certificate verification.

Given a bracket mu, a codimension-1 ideal h with a diagonal (hence
semisimple) derivation D, and a complement vector X, the cochain

    mu_D(X, z) = D(z)  for z in h,      mu_D = 0 on h x h

is a 2-cocycle of mu and itself a Lie bracket, so mu_t = mu + t*mu_D is a
linear deformation.  A degeneration certificate for that deformation is a
matrix family g_t with

    mu_1(g_t(x), g_t(y)) = g_t(mu_t(x, y))        (*)

for all x, y, where mu_1 is the deformation at t = 1.  The verifier expands
(*) on basis pairs, which is complete by bilinearity, and demands that every
residual be the identically-zero Scalar; there is no epsilon anywhere.

Some certificate families are parametrized reciprocally: the bundled family
for one algebra satisfies (*) with mu_{1/t} in place of mu_t, which realizes
the same degeneration because t -> 1/t permutes the punctured line (the
family g_{1/t} then satisfies (*) literally).  Such certificates carry the
marker ``parameter = 1/t`` in their data files and are verified against the
reciprocal deformation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (DimensionMismatch, InvalidSpec, NegativeExponent,
                     NotInvariant)
from .lie import (Cochain2, StructureConstants, SubspaceSpec, cocycle_check,
                  column_is_zero, entries_equal, is_derivation, is_ideal,
                  jacobi_check, lie_bracket_check, restrict)
from .linalg import Column, ScalarMatrix
from .scalar import ONE, T, ZERO, Scalar, UniPoly

STAGES = ("jacobi", "ideal", "derivation", "cocycle", "bracket",
          "eq1", "unit-det", "limit", "spectrum")


@dataclass(frozen=True)
class DeformationSpec:
    """The data (mu, h, X, D) defining the cocycle mu_D."""

    base: StructureConstants
    ideal: SubspaceSpec
    outside_index: int
    derivation: ScalarMatrix

    def validate(self) -> None:
        """Raise :class:`InvalidSpec` naming the first violated invariant."""
        if self.outside_index in self.ideal:
            raise InvalidSpec("the complement vector lies inside the ideal")
        if not (1 <= self.outside_index <= self.base.dim):
            raise InvalidSpec("complement index out of range")
        if len(self.ideal) != self.base.dim - 1:
            raise InvalidSpec("the ideal must have codimension 1")
        if self.derivation.n != len(self.ideal):
            raise InvalidSpec("derivation size does not match the ideal")
        if not self.derivation.is_diagonal():
            raise InvalidSpec("derivation is not diagonal (semisimplicity witness)")
        if not is_ideal(self.base, self.ideal):
            raise InvalidSpec("the chosen subspace is not an ideal")
        if not is_derivation(restrict(self.base, self.ideal), self.derivation):
            raise InvalidSpec("the matrix is not a derivation of the ideal")


def go_cocycle(spec: DeformationSpec) -> Cochain2:
    """The cochain mu_D of a validated deformation specification."""
    spec.validate()
    return _build_cocycle(spec)


def _build_cocycle(spec: DeformationSpec) -> Cochain2:
    dim = spec.base.dim
    order = sorted(spec.ideal.indices)
    x = spec.outside_index
    entries: dict[tuple[int, int], Column] = {}
    params = spec.base.params
    for row in spec.derivation.rows:
        for entry in row:
            params = params | entry.symbols()
    for col_pos, z in enumerate(order):
        image = [Scalar() for _ in range(dim)]
        for row_pos, target in enumerate(order):
            image[target - 1] = spec.derivation.rows[row_pos][col_pos]
        column = tuple(image)
        if x < z:
            entries[(x, z)] = column
        else:
            entries[(z, x)] = tuple(-s for s in column)
    return Cochain2(dim, entries, params, f"{spec.base.name}_D")


def deform(mu: StructureConstants, phi: Cochain2) -> StructureConstants:
    """The linear deformation mu + t*phi (exactly mu again at t = 0)."""
    if mu.dim != phi.dim:
        raise DimensionMismatch("cochain dimension does not match the bracket")
    entries = {}
    for key in set(mu.entries) | set(phi.entries):
        entries[key] = tuple(a + T * b for a, b in zip(mu.bracket(*key), phi.bracket(*key)))
    return StructureConstants(mu.dim, entries, mu.params | phi.params | {"t"},
                              f"{mu.name}_t" if mu.name else "mu_t")


@dataclass
class Failure:
    """A localized nonzero residual."""

    indices: tuple[int, ...]
    residual: Column | None = None
    note: str = ""


@dataclass
class StageResult:
    ok: bool
    failures: tuple[Failure, ...] = ()
    note: str = ""


@dataclass
class VerificationReport:
    """Per-stage verdicts for one algebra; passes iff every stage passes."""

    algebra: str
    stages: dict[str, StageResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(stage.ok for stage in self.stages.values())

    def failing_stages(self) -> list[str]:
        return [name for name, stage in self.stages.items() if not stage.ok]


def verify_degeneration(mu1: StructureConstants, mu_t: StructureConstants,
                        g: ScalarMatrix, reciprocal: bool = False) -> VerificationReport:
    """Check the degeneration identity (*) on all basis pairs, symbolically.

    Fills the ``eq1`` and ``unit-det`` stages of the report: every residual
    column mu_1(g e_i, g e_j) - g(mu_t(e_i, e_j)) must vanish identically in
    t (and alpha, when present), and det(g) must be a Laurent unit.  With
    ``reciprocal=True`` the right-hand side uses mu_{1/t}.
    """
    if mu1.dim != mu_t.dim or g.n != mu_t.dim:
        raise DimensionMismatch("dimensions of brackets and matrix differ")
    if not entries_equal(mu_t.eval_t(1), mu1):
        raise InvalidSpec("mu1 must be the t = 1 specialization of mu_t")
    family = mu_t.invert_t() if reciprocal else mu_t
    report = VerificationReport(mu_t.name)
    failures = []
    for i, j in mu_t.pairs():
        lhs = mu1.bracket_eval(g.column(i - 1), g.column(j - 1))
        rhs = g.apply(family.bracket(i, j))
        residual = tuple(a - b for a, b in zip(lhs, rhs))
        if not column_is_zero(residual):
            failures.append(Failure((i, j), residual))
    note = "certificate parametrized by 1/t" if reciprocal else ""
    report.stages["eq1"] = StageResult(not failures, tuple(failures), note)
    det = g.det()
    if det.is_unit_monomial():
        report.stages["unit-det"] = StageResult(True, note=f"det = {det}")
    else:
        report.stages["unit-det"] = StageResult(
            False, (Failure((), None, f"det = {det}"),),
            "determinant is not a single term c*t^k")
    return report


def limit_check(mu_t: StructureConstants, mu: StructureConstants) -> bool:
    """True iff the t -> 0 limit of mu_t is exactly mu.

    Raises :class:`NegativeExponent` when an entry of mu_t has a t-pole.
    """
    if mu_t.dim != mu.dim:
        raise DimensionMismatch("dimensions differ")
    for key, column in mu_t.entries.items():
        for entry in column:
            if entry.has_negative_t_exponent():
                raise NegativeExponent(
                    f"entry {key} of the family has a pole at t = 0: {entry}")
    return entries_equal(mu_t.eval_t(0), mu)


def block_spectrum_check(g: ScalarMatrix, ideal: SubspaceSpec,
                         derivation: ScalarMatrix) -> bool:
    """Check that g acts on the ideal block with eigenvalues t^(d_i).

    The ideal's coordinate subspace must be invariant under g (otherwise
    :class:`NotInvariant`); the characteristic polynomial of the restricted
    block is then compared, as an exact polynomial identity, against
    prod_i (x - t^(d_i)) with d_i the diagonal entries of the derivation.
    """
    if not derivation.is_diagonal():
        raise InvalidSpec("derivation is not diagonal")
    inside = [k - 1 for k in sorted(ideal.indices)]
    outside = [k for k in range(g.n) if k + 1 not in ideal]
    for c in inside:
        for r in outside:
            if not g.rows[r][c].is_zero():
                raise NotInvariant(
                    f"entry ({r + 1}, {c + 1}) maps the ideal outside itself")
    block = g.submatrix(inside, inside)
    actual = block.char_poly()
    exponents = [derivation.rows[k][k] for k in range(derivation.n)]
    roots = []
    for entry in exponents:
        value = entry.constant_value()
        if value.denominator != 1:
            raise InvalidSpec("derivation eigenvalues must be integers")
        roots.append(Scalar.t_power(int(value)))
    expected = UniPoly.from_roots(roots)
    return actual == expected


def run_certificate_checks(name: str, mu: StructureConstants,
                           ideal: SubspaceSpec, outside_index: int,
                           derivation: ScalarMatrix, g: ScalarMatrix,
                           reciprocal: bool = False) -> VerificationReport:
    """Run the full verification pipeline for one algebra.

    Stage order: jacobi (mu, and the family mu_t once built), ideal,
    derivation, cocycle, bracket, eq1, unit-det, limit, spectrum.  Failures
    are collected, never raised, so a corrupted table yields a localized
    report rather than an exception.
    """
    report = VerificationReport(name)

    jac_mu = jacobi_check(mu)
    jacobi_failures = [Failure(triple, residual, "bracket of the algebra")
                       for triple, residual in jac_mu.failures]

    ideal_ok = is_ideal(mu, ideal) and outside_index not in ideal
    report.stages["ideal"] = StageResult(
        ideal_ok, () if ideal_ok else (Failure(tuple(ideal.indices), None,
                                               "subspace is not a codimension-1 ideal"),))

    spec = DeformationSpec(mu, ideal, outside_index, derivation)
    if ideal_ok:
        derivation_ok = (derivation.is_diagonal()
                         and is_derivation(restrict(mu, ideal), derivation))
        report.stages["derivation"] = StageResult(
            derivation_ok,
            () if derivation_ok else (Failure((), None, "not a derivation of the ideal"),))
    else:
        derivation_ok = False
        report.stages["derivation"] = StageResult(False, note="skipped: ideal stage failed")

    phi = _build_cocycle(spec)
    cocycle_ok = cocycle_check(mu, phi)
    report.stages["cocycle"] = StageResult(cocycle_ok)
    bracket_ok = lie_bracket_check(phi)
    report.stages["bracket"] = StageResult(bracket_ok)

    mu_t = deform(mu, phi)
    jac_family = jacobi_check(mu_t)
    jacobi_failures.extend(Failure(triple, residual, "bracket of the deformed family")
                           for triple, residual in jac_family.failures)
    report.stages["jacobi"] = StageResult(not jacobi_failures, tuple(jacobi_failures))

    mu1 = mu_t.eval_t(1)
    eq1_report = verify_degeneration(mu1, mu_t, g, reciprocal=reciprocal)
    report.stages["eq1"] = eq1_report.stages["eq1"]
    report.stages["unit-det"] = eq1_report.stages["unit-det"]

    report.stages["limit"] = StageResult(limit_check(mu_t, mu))

    try:
        spectrum_ok = block_spectrum_check(g, ideal, derivation)
        report.stages["spectrum"] = StageResult(spectrum_ok)
    except NotInvariant as exc:
        report.stages["spectrum"] = StageResult(False, (Failure((), None, str(exc)),))

    ordered = {stage: report.stages[stage] for stage in STAGES if stage in report.stages}
    report.stages = ordered
    return report


def reciprocal_certificate(g: ScalarMatrix) -> ScalarMatrix:
    """The family t -> g(1/t), which satisfies (*) literally whenever g
    satisfies it in the reciprocal parametrization."""
    return g.map_entries(lambda s: s.invert_t())


def solve_certificate_cell(mu: StructureConstants, ideal: SubspaceSpec,
                           outside_index: int, derivation: ScalarMatrix,
                           g: ScalarMatrix, cell: tuple[int, int],
                           reciprocal: bool = False) -> Scalar:
    """Derive one certificate entry from the residual equations.

    Treats the entry at ``cell`` (1-based) as an unknown and every other
    entry as correct.  Each residual component of (*) is affine in the
    unknown, so two evaluations determine every equation; the unique common
    solution is returned, found by exact division.  Raises
    :class:`InvalidSpec` if the equations are inconsistent or leave the cell
    unconstrained, i.e. if a single-cell correction cannot exist.
    """
    spec = DeformationSpec(mu, ideal, outside_index, derivation)
    phi = _build_cocycle(spec)
    mu_t = deform(mu, phi)
    mu1 = mu_t.eval_t(1)
    family = mu_t.invert_t() if reciprocal else mu_t
    row, col = cell

    def residuals(value: Scalar) -> dict[tuple[int, int, int], Scalar]:
        rows = [list(r) for r in g.rows]
        rows[row - 1][col - 1] = value
        candidate = ScalarMatrix(tuple(tuple(r) for r in rows))
        out = {}
        for i, j in mu_t.pairs():
            lhs = mu1.bracket_eval(candidate.column(i - 1), candidate.column(j - 1))
            rhs = candidate.apply(family.bracket(i, j))
            for k in range(mu.dim):
                out[(i, j, k + 1)] = lhs[k] - rhs[k]
        return out

    offsets = residuals(ZERO)
    slopes = residuals(ONE)
    solution = None
    for key, offset in offsets.items():
        slope = slopes[key] - offset
        if slope.is_zero():
            if not offset.is_zero():
                raise InvalidSpec(
                    f"residual at {key} does not involve cell {cell}; "
                    "no single-cell correction exists")
            continue
        try:
            candidate = (-offset).exact_div(slope)
        except ValueError as exc:
            raise InvalidSpec(f"residual at {key} has no Laurent solution") from exc
        if solution is None:
            solution = candidate
        elif solution != candidate:
            raise InvalidSpec("residual equations are inconsistent; "
                              "no single-cell correction exists")
    if solution is None:
        raise InvalidSpec(f"cell {cell} is unconstrained by the residual equations")
    return solution


def counterexample_spec(mu: StructureConstants) -> DeformationSpec:
    """The deformation with derivation diag(0, 1, ..., 1) on the standard
    codimension-1 ideal; a valid linear deformation for which no certificate
    is bundled."""
    dim = mu.dim
    ideal = SubspaceSpec(tuple(range(2, dim + 1)))
    diagonal = ScalarMatrix.diagonal([0] + [1] * (dim - 2))
    return DeformationSpec(mu, ideal, 1, diagonal)
