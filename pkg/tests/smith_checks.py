import numpy as np

from homology.lattice import SmithForm, as_object, eye


def det(M: np.ndarray) -> int:
    """Exact determinant by fraction-free elimination."""
    A = [[int(v) for v in row] for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def assert_smith_form(M, snf: SmithForm):
    M = as_object(M)
    rows, cols = M.shape
    assert snf.D.shape == M.shape
    assert (snf.U.dot(M).dot(snf.V) == snf.D).all()
    assert (snf.U.dot(snf.U_inv) == eye(rows)).all()
    assert (snf.V.dot(snf.V_inv) == eye(cols)).all()
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    off = snf.D.copy()
    for i in range(min(off.shape)):
        off[i, i] = 0
    assert not off.any()
    d = snf.diagonal
    assert all(v > 0 for v in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
