from collections.abc import Sequence

import numpy as np

from . import Scalar, current_tolerance, exact, is_exact

Vector3 = tuple[Scalar, Scalar, Scalar]
Matrix3 = tuple[Vector3, Vector3, Vector3]


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total: Scalar = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return dot(m[0], cross(m[1], m[2]))


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix3:
    return (
        (m[0][0], m[1][0], m[2][0]),
        (m[0][1], m[1][1], m[2][1]),
        (m[0][2], m[1][2], m[2][2]),
    )


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix3:
    bt = transpose(b)
    return (
        (dot(a[0], bt[0]), dot(a[0], bt[1]), dot(a[0], bt[2])),
        (dot(a[1], bt[0]), dot(a[1], bt[1]), dot(a[1], bt[2])),
        (dot(a[2], bt[0]), dot(a[2], bt[1]), dot(a[2], bt[2])),
    )


def matvec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector3:
    return (dot(m[0], v), dot(m[1], v), dot(m[2], v))


def adjugate(m: Sequence[Sequence[Scalar]]) -> Matrix3:
    """Adjugate matrix: m @ adjugate(m) == det(m) * I, inverse up to scale."""
    c0, c1, c2 = transpose(m)
    return (cross(c1, c2), cross(c2, c0), cross(c0, c1))


def null_space(rows: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    """Basis of the right null space.

    Exact tiers use Gauss-Jordan elimination; floats use the SVD and drop singular
    values below eps * (largest singular value).
    """
    work = [[exact(x) for x in row] for row in rows]
    n_cols = len(work[0]) if work else 0
    if not is_exact(*(x for row in work for x in row)):
        return _float_null_space(work, n_cols)

    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r >= len(work):
            break
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][col]
        work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1

    basis: list[list[Scalar]] = []
    for free in (c for c in range(n_cols) if c not in pivots):
        vec: list[Scalar] = [exact(0)] * n_cols
        vec[free] = exact(1)
        for row_idx, col in enumerate(pivots):
            vec[col] = -work[row_idx][free]
        basis.append(vec)
    return basis


def _float_null_space(rows: list[list[Scalar]], n_cols: int) -> list[list[Scalar]]:
    a = np.array([[float(x) for x in row] for row in rows], dtype=np.float64).reshape(-1, n_cols)
    _, s, vt = np.linalg.svd(a)
    cutoff = current_tolerance().eps * (float(s[0]) if s.size else 1.0)
    rank = int(np.count_nonzero(s > cutoff))
    return [[float(x) for x in v] for v in vt[rank:]]
