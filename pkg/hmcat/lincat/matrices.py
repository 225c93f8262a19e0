"""Exact sparse linear algebra on sympy ``DomainMatrix``.

Vectors are sparse ``dict[int, Scalar]`` maps with no stored zeros. Matrices
are ``DomainMatrix`` objects in sparse (SDM) format; a matrix is switched to
dense format for elimination when it has at most ``dense_threshold`` entries.

Coordinates for subspaces and quotients come from reduced row echelon forms,
so every kernel basis has a 1 at its free index and every quotient basis is
a set of kept coordinates. Both make left inverses plain row selections.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from sympy.polys.matrices import DomainMatrix

from .scalars import Field, Scalar

Vector = dict[int, Scalar]

DEFAULT_DENSE_THRESHOLD = 4096


def add_scaled(acc: Vector, vec: Mapping[int, Scalar], coeff: Scalar) -> Vector:
    """acc += coeff * vec, in place."""
    if not coeff:
        return acc
    for i, v in vec.items():
        value = acc.get(i)
        value = v * coeff if value is None else value + v * coeff
        if value:
            acc[i] = value
        else:
            acc.pop(i, None)
    return acc


def tensor_expand(factors: Sequence[Mapping[int, Scalar]], one: Scalar) -> dict[tuple[int, ...], Scalar]:
    """Expand a tensor of sparse vectors into basis tuples with coefficients."""
    result: dict[tuple[int, ...], Scalar] = {}
    if any(not f for f in factors):
        return result
    items = [list(f.items()) for f in factors]
    for combo in product(*items):
        coeff = one
        for _, c in combo:
            coeff = coeff * c
        if coeff:
            key = tuple(i for i, _ in combo)
            value = result.get(key)
            value = coeff if value is None else value + coeff
            if value:
                result[key] = value
            else:
                result.pop(key, None)
    return result


def from_dod(dod: Mapping[int, Mapping[int, Scalar]], shape: tuple[int, int], field: Field) -> DomainMatrix:
    clean = {}
    for i, row in dod.items():
        kept = {j: v for j, v in row.items() if v}
        if kept:
            clean[i] = kept
    return DomainMatrix.from_dod(clean, shape, field.domain)


def from_columns(columns: Sequence[Mapping[int, Scalar]], nrows: int, field: Field) -> DomainMatrix:
    """Matrix whose j-th column is the sparse vector ``columns[j]``."""
    dod: dict[int, dict[int, Scalar]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                dod.setdefault(i, {})[j] = v
    return DomainMatrix.from_dod(dod, (nrows, len(columns)), field.domain)


def zeros(shape: tuple[int, int], field: Field) -> DomainMatrix:
    return DomainMatrix.zeros(shape, field.domain)


def identity(n: int, field: Field) -> DomainMatrix:
    return DomainMatrix.eye(n, field.domain).to_sparse()


def sparse(matrix: DomainMatrix) -> DomainMatrix:
    return matrix.to_sparse()


def matmul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return a.to_sparse().matmul(b.to_sparse())


def subtract(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return a.to_sparse().sub(b.to_sparse())


def is_zero(matrix: DomainMatrix) -> bool:
    if 0 in matrix.shape:
        return True
    return matrix.to_sparse().is_zero_matrix


def matrices_equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    if a.shape != b.shape:
        return False
    return is_zero(subtract(a, b))


def is_identity(matrix: DomainMatrix) -> bool:
    rows, cols = matrix.shape
    return rows == cols and matrices_equal(matrix, DomainMatrix.eye(rows, matrix.domain))


def columns(matrix: DomainMatrix) -> dict[int, Vector]:
    """Nonzero columns of a matrix as sparse vectors keyed by column index."""
    return {j: dict(col) for j, col in matrix.to_sparse().transpose().to_dod().items()}


def apply(matrix: DomainMatrix, vec: Mapping[int, Scalar]) -> Vector:
    """Matrix-vector product on sparse vectors."""
    out: Vector = {}
    if not vec:
        return out
    for i, row in matrix.to_sparse().to_dod().items():
        total = None
        for j, v in row.items():
            x = vec.get(j)
            if x:
                total = v * x if total is None else total + v * x
        if total:
            out[i] = total
    return out


def select_rows(matrix: DomainMatrix, rows: Sequence[int]) -> DomainMatrix:
    return matrix.to_sparse().extract(list(rows), list(range(matrix.shape[1])))


def select_columns(matrix: DomainMatrix, cols: Sequence[int]) -> DomainMatrix:
    return matrix.to_sparse().extract(list(range(matrix.shape[0])), list(cols))


def vstack(blocks: Sequence[DomainMatrix], ncols: int, field: Field) -> DomainMatrix:
    # DomainMatrix.vstack unifies to dense format
    dod: dict[int, dict[int, Scalar]] = {}
    offset = 0
    for block in blocks:
        for i, row in block.to_sparse().to_dod().items():
            dod[offset + i] = dict(row)
        offset += block.shape[0]
    return DomainMatrix.from_dod(dod, (offset, ncols), field.domain)


def rref(matrix: DomainMatrix, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> tuple[dict[int, Vector], tuple[int, ...]]:
    """Reduced row echelon form as ({row: sparse row}, pivots).

    Row i of the result has its leading 1 in column ``pivots[i]``.
    """
    rows, cols = matrix.shape
    if rows == 0 or cols == 0 or is_zero(matrix):
        return {}, ()
    work = matrix.to_dense() if rows * cols <= dense_threshold else matrix.to_sparse()
    reduced, pivots = work.rref(method="GJ")
    dod = reduced.to_sparse().to_dod()
    return {i: dict(dod.get(i, {})) for i in range(len(pivots))}, tuple(pivots)


def rank(matrix: DomainMatrix, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> int:
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0
    if rows > cols:
        matrix = matrix.to_sparse().transpose()
    return len(rref(matrix, dense_threshold)[1])


@dataclass(frozen=True)
class Kernel:
    """Kernel basis as matrix columns; ``free[j]`` is where column j has its 1."""

    basis: DomainMatrix
    free: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.free)

    def coordinates(self, matrix: DomainMatrix) -> DomainMatrix:
        """Coordinates of kernel vectors (matrix columns) in this basis."""
        return select_rows(matrix, self.free)


def kernel(matrix: DomainMatrix, field: Field, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> Kernel:
    """Exact null space {v : Mv = 0}."""
    n = matrix.shape[1]
    reduced, pivots = rref(matrix, dense_threshold)
    pivot_set = set(pivots)
    free = tuple(j for j in range(n) if j not in pivot_set)
    position = {j: k for k, j in enumerate(free)}
    dod: dict[int, dict[int, Scalar]] = {}
    for j in free:
        dod.setdefault(j, {})[position[j]] = field.one
    for r, p in enumerate(pivots):
        for j, v in reduced[r].items():
            if j in position:
                dod.setdefault(p, {})[position[j]] = -v
    return Kernel(from_dod(dod, (n, len(free)), field), free)


def intersect_kernels(matrices: Iterable[DomainMatrix], n: int, field: Field, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> Kernel:
    return kernel(vstack(list(matrices), n, field), field, dense_threshold)


@dataclass(frozen=True)
class Quotient:
    """V / span(relations) with coordinates on the kept (non-pivot) indices.

    ``projection`` maps V onto the quotient; ``section`` sends each quotient
    basis vector to the V basis vector at its kept index.
    """

    projection: DomainMatrix
    section: DomainMatrix
    kept: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.kept)


def quotient(relations: DomainMatrix, n: int, field: Field, dense_threshold: int = DEFAULT_DENSE_THRESHOLD) -> Quotient:
    """Quotient of k^n by the row space of ``relations`` (shape r × n)."""
    reduced, pivots = rref(relations, dense_threshold)
    pivot_set = set(pivots)
    kept = tuple(j for j in range(n) if j not in pivot_set)
    position = {j: k for k, j in enumerate(kept)}
    proj: dict[int, dict[int, Scalar]] = {}
    for j in kept:
        proj.setdefault(position[j], {})[j] = field.one
    for r, p in enumerate(pivots):
        for j, v in reduced[r].items():
            if j in position:
                proj.setdefault(position[j], {})[p] = -v
    section = {j: {position[j]: field.one} for j in kept}
    return Quotient(
        projection=from_dod(proj, (len(kept), n), field),
        section=from_dod(section, (n, len(kept)), field),
        kept=kept,
    )


def inverse(matrix: DomainMatrix) -> DomainMatrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    rows, cols = matrix.shape
    if rows != cols:
        raise ValueError(f"Cannot invert a {rows}x{cols} matrix")
    if rows == 0:
        return matrix
    try:
        return matrix.to_dense().inv().to_sparse()
    except Exception as e:
        raise ValueError(f"Matrix is singular: {e}") from e
