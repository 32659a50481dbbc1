"""Dense linear algebra over an arbitrary exact field.

Vectors are tuples of scalars and matrices are tuples of row vectors.  Every
function takes the scalar field ``F`` explicitly; ``F`` must provide ``zero``,
``one``, ``add``, ``sub``, ``mul``, ``neg``, ``inv`` and ``is_zero``, and its
scalars must support ``+``, ``-`` and ``*`` natively (prime fields additionally
expose ``mod`` so results can be reduced).  This lets
the same elimination code run over GF(p) (ints), Q (Fractions) and subfields of
a finite field whose scalars are themselves field elements.
"""

from __future__ import annotations

from typing import Sequence

Vector = tuple
Matrix = tuple


def _mod(F):
    # Prime fields expose ``mod``; other scalars (Fraction, FieldElement) reduce themselves.
    return getattr(F, "mod", None)


def _axpy(F, alpha, x, y):
    # y - alpha * x
    m = _mod(F)
    if m:
        return tuple((yi - alpha * xi) % m for xi, yi in zip(x, y))
    return tuple(yi - alpha * xi for xi, yi in zip(x, y))


def _scale(F, alpha, x):
    m = _mod(F)
    if m:
        return tuple(alpha * xi % m for xi in x)
    return tuple(alpha * xi for xi in x)


def rref(rows: Sequence[Vector], F) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped.

    Returns ``(rows, pivots)``; ``pivots[i]`` is the pivot column of row ``i``
    and pivots are strictly increasing, so the result is canonical for the
    row space.
    """
    work = [tuple(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if not F.is_zero(work[i][c]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        work[r] = _scale(F, F.inv(work[r][c]), work[r])
        for i in range(len(work)):
            if i != r and not F.is_zero(work[i][c]):
                work[i] = _axpy(F, work[i][c], work[r], work[i])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(work[:r]), tuple(pivots)


def rank(rows: Sequence[Vector], F) -> int:
    return len(rref(rows, F)[0])


def reduce_vector(v: Vector, echelon: Matrix, pivots: Sequence[int], F) -> Vector:
    """Residual of ``v`` after clearing the pivot columns of an RREF basis.

    The map is linear, and the residual is zero exactly when ``v`` lies in the
    row space.
    """
    v = tuple(v)
    for row, c in zip(echelon, pivots):
        if not F.is_zero(v[c]):
            v = _axpy(F, v[c], row, v)
    return v


def in_span(v: Vector, echelon: Matrix, pivots: Sequence[int], F) -> bool:
    return all(F.is_zero(x) for x in reduce_vector(v, echelon, pivots, F))


def kernel(matrix: Sequence[Vector], ncols: int, F) -> Matrix:
    """Basis of ``{x : matrix @ x = 0}``, one vector per free column.

    The basis vector for free column ``j`` has a one in position ``j`` and zeros
    in the other free positions, which makes the result canonical.
    """
    echelon, pivots = rref(matrix, F) if matrix else ((), ())
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        x = [F.zero] * ncols
        x[j] = F.one
        for row, c in zip(echelon, pivots):
            x[c] = F.neg(row[j])
        basis.append(tuple(x))
    return tuple(basis)


def transpose(matrix: Sequence[Vector]) -> Matrix:
    return tuple(zip(*matrix))


def matvec(matrix: Sequence[Vector], x: Vector, F) -> Vector:
    m = _mod(F)
    if m:
        return tuple(sum(a * b for a, b in zip(row, x)) % m for row in matrix)
    out = []
    for row in matrix:
        acc = F.zero
        for a, b in zip(row, x):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def combine(coeffs: Sequence, vectors: Sequence[Vector], F) -> Vector:
    """Linear combination ``sum(c * v)``; ``vectors`` must be nonempty."""
    acc = [F.zero] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if F.is_zero(c):
            continue
        for k, vk in enumerate(v):
            acc[k] = F.add(acc[k], F.mul(c, vk))
    return tuple(acc)


def inverse(matrix: Sequence[Vector], F) -> Matrix:
    """Inverse of a square matrix; raises ZeroDivisionError when singular."""
    n = len(matrix)
    aug = [tuple(row) + tuple(F.one if i == j else F.zero for j in range(n))
           for i, row in enumerate(matrix)]
    echelon, pivots = rref(aug, F)
    if len(echelon) < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return tuple(row[n:] for row in echelon)
