"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from filicert import AlgebraFile, Scalar, ScalarMatrix
from filicert.dataio import DeformationBlock, Erratum
from filicert.scalar import ZERO


def rand_fraction(rng: random.Random, span: int = 8, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, span: int = 8, max_den: int = 6) -> Fraction:
    while True:
        value = rand_fraction(rng, span, max_den)
        if value:
            return value


def rand_scalar(rng: random.Random, max_terms: int = 4, min_t: int = -3,
                max_t: int = 5, max_alpha: int = 2, allow_alpha: bool = True,
                allow_negative_t: bool = True) -> Scalar:
    terms = {}
    low_t = min_t if allow_negative_t else 0
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(low_t, max_t),
               rng.randint(0, max_alpha) if allow_alpha else 0)
        terms[key] = rand_fraction(rng)
    return Scalar(terms)


def rand_scalar_matrix(rng: random.Random, n: int, **kwargs) -> ScalarMatrix:
    return ScalarMatrix(tuple(tuple(rand_scalar(rng, **kwargs) for _ in range(n))
                              for _ in range(n)))


def rand_unit_triangular(rng: random.Random, n: int) -> ScalarMatrix:
    """Random lower-triangular matrix with monomial diagonal (unit det)."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j < i:
                row.append(rand_scalar(rng, max_terms=2, min_t=0, max_t=3,
                                       max_alpha=1))
            elif j == i:
                row.append(Scalar.term(rand_nonzero_fraction(rng),
                                       rng.randint(-2, 3)))
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return ScalarMatrix(tuple(rows))


def monomial_diagonal(rng: random.Random, n: int) -> ScalarMatrix:
    return ScalarMatrix.diagonal(
        [Scalar.term(rand_nonzero_fraction(rng), rng.randint(-2, 3))
         for _ in range(n)])


def laplace_det(matrix: ScalarMatrix) -> Scalar:
    """Cofactor-expansion determinant: the independent determinant oracle."""
    rows = matrix.rows
    n = len(rows)

    def det_of(idx_rows: tuple[int, ...], idx_cols: tuple[int, ...]) -> Scalar:
        if len(idx_rows) == 1:
            return rows[idx_rows[0]][idx_cols[0]]
        total = ZERO
        top = idx_rows[0]
        rest = idx_rows[1:]
        for position, col in enumerate(idx_cols):
            entry = rows[top][col]
            if entry.is_zero():
                continue
            minor_cols = idx_cols[:position] + idx_cols[position + 1:]
            term = entry * det_of(rest, minor_cols)
            total = total + term if position % 2 == 0 else total - term
        return total

    return det_of(tuple(range(n)), tuple(range(n)))


def random_algebra_file(rng: random.Random) -> AlgebraFile:
    """A structurally valid (not necessarily Lie) random algebra file."""
    dim = rng.randint(2, 6)
    params = ("alpha",) if rng.random() < 0.5 else ()
    name = f"rand{rng.randrange(10**6):06d}"

    def file_scalar() -> Scalar:
        # certificate entries may use t; brackets may use declared params only
        return rand_scalar(rng, max_terms=3, min_t=0, max_t=4,
                           max_alpha=2 if params else 0, allow_negative_t=False)

    def bracket_scalar() -> Scalar:
        terms = {}
        for _ in range(rng.randint(1, 2)):
            alpha_exp = rng.randint(0, 2) if params else 0
            terms[(0, alpha_exp)] = rand_fraction(rng)
        return Scalar(terms)

    basis_change = None
    if rng.random() < 0.6:
        basis_change = {}
        for i in range(1, dim + 1):
            if rng.random() < 0.8:
                basis_change[i] = tuple(rand_fraction(rng) for _ in range(dim))

    brackets = None
    if rng.random() < 0.9:
        brackets = {}
        for i in range(1, dim + 1):
            for j in range(i + 1, dim + 1):
                if rng.random() < 0.5:
                    column = [ZERO] * dim
                    for _ in range(rng.randint(1, 2)):
                        column[rng.randrange(dim)] = bracket_scalar()
                    if any(not s.is_zero() for s in column):
                        brackets[(i, j)] = tuple(column)

    deformation = None
    if brackets is not None and rng.random() < 0.6:
        outside = rng.randint(1, dim)
        ideal = tuple(k for k in range(1, dim + 1) if k != outside)
        deformation = DeformationBlock(
            ideal, outside, tuple(rand_fraction(rng) for _ in ideal))

    certificate = None
    parameter = "t"
    if rng.random() < 0.6:
        certificate = {}
        for i in range(1, dim + 1):
            certificate[(i, i)] = Scalar.t_power(rng.randint(-2, 4))
            for j in range(1, dim + 1):
                if i != j and rng.random() < 0.3:
                    value = file_scalar()
                    if not value.is_zero():
                        certificate[(i, j)] = value
        if rng.random() < 0.3:
            parameter = "1/t"

    derivation_meta = None
    if brackets is None or rng.random() < 0.2:
        derivation_meta = {}
        for i in range(1, dim + 1):
            derivation_meta[(i, i)] = rand_fraction(rng)

    errata = []
    if certificate is not None and rng.random() < 0.3:
        i, j = rng.choice(sorted(certificate))
        errata.append(Erratum(f"g {i} {j}", original=str(certificate[(i, j)]),
                              corrected=str(file_scalar()),
                              note="randomized correction entry"))

    return AlgebraFile(name=name, dim=dim, params=params,
                       basis_change=basis_change, brackets=brackets,
                       deformation=deformation, certificate=certificate,
                       certificate_parameter=parameter,
                       derivation_meta=derivation_meta, errata=tuple(errata))
