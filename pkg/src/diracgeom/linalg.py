"""Small fixed-size complex linear algebra.

Everything here works on plain numpy arrays of dimension 2, 3 or 4. Matrices
returned from public functions are fresh arrays; callers may mutate them.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import NoConvergenceError, NonUnitAxisError, NotHermitianError

IDENTITY_TOL = 1e-12
EIGEN_TOL = 1e-10
PHASE_CUTOFF = 1e-9
DEGENERACY_TOL = 1e-9
MAX_SWEEPS = 100

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def as_vector(v, dim: int | None = None, dtype=float) -> np.ndarray:
    arr = np.asarray(v, dtype=dtype).reshape(-1)
    if dim is not None and arr.shape != (dim,):
        raise ValueError(f"expected a {dim}-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return arr


def check_unit_axis(axis, tol: float = IDENTITY_TOL) -> np.ndarray:
    """Return ``axis`` as a float 3-vector, raising if it is not unit length."""
    n = as_vector(axis, 3)
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise NonUnitAxisError(f"axis {n} has norm {np.linalg.norm(n)!r}, expected 1")
    return n


def normalized(v) -> np.ndarray:
    v = as_vector(v, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / norm


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first non-negligible component is real and >= 0."""
    v = np.asarray(v, dtype=complex)
    for k, c in enumerate(v):
        if abs(c) > PHASE_CUTOFF:
            v = v * (abs(c) / c)
            v[k] = abs(c)
            break
    # drop signed zeros so rendered output is stable
    return v + 0.0


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def max_abs(m) -> float:
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = a[i, j] * b
    return out


def kron_state(u, v) -> np.ndarray:
    """Product state with component ``len(v)*i + j`` equal to ``u[i] * v[j]``."""
    u = as_vector(u, dtype=complex)
    v = as_vector(v, dtype=complex)
    return (u[:, None] * v[None, :]).reshape(-1)


def is_hermitian(m, tol: float = IDENTITY_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and max_abs(m - dagger(m)) <= tol


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi_rotation(a: np.ndarray, p: int, q: int) -> np.ndarray:
    """Unitary that annihilates the (p, q) element of Hermitian ``a``.

    The complex phase of a[p, q] is first removed with a diagonal unitary,
    then a real Jacobi rotation (the Numerical Recipes stable form) finishes.
    """
    n = a.shape[0]
    b = a[p, q]
    mag = abs(b)
    phase = b / mag
    theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    u = np.eye(n, dtype=complex)
    u[p, p] = c
    u[p, q] = s
    u[q, p] = -s * np.conj(phase)
    u[q, q] = c * np.conj(phase)
    return u


def hermitian_eigensystem(m, tol: float = IDENTITY_TOL) -> list[tuple[float, np.ndarray]]:
    """Eigenpairs of a small Hermitian matrix by cyclic complex Jacobi sweeps.

    Returns ``[(eigenvalue, eigenvector), ...]`` sorted by ascending
    eigenvalue. Each eigenvector is unit length with the package phase
    convention applied. Inside a degenerate cluster the basis is arbitrary,
    so compare projectors there rather than individual vectors.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 3, 4):
        raise ValueError(f"expected a 2x2, 3x3 or 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    asym = max_abs(a - dagger(a))
    if asym > tol:
        raise NotHermitianError(f"max |M - M^dagger| = {asym:.3e} exceeds {tol:.1e}")
    a = 0.5 * (a + dagger(a))
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))

    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= 1e-16 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= 1e-300:
                    continue
                u = _jacobi_rotation(a, p, q)
                a = dagger(u) @ a @ u
                a[p, q] = a[q, p] = 0.0
                v = v @ u
    else:
        if _off_norm(a) > 1e-16 * scale:
            raise NoConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")

    values = np.diag(a).real
    order = np.argsort(values, kind="stable")
    return [(float(values[k]), fix_phase(v[:, k])) for k in order]


def eigenprojector(pairs, select) -> np.ndarray:
    """Sum of |v><v| over eigenpairs whose eigenvalue satisfies ``select``."""
    dim = len(pairs[0][1])
    proj = np.zeros((dim, dim), dtype=complex)
    for value, vec in pairs:
        if select(value):
            proj += np.outer(vec, np.conj(vec))
    return proj


def pauli_dot(n) -> np.ndarray:
    n = as_vector(n, 3)
    return n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z


def su2_exponential(axis, angle: float) -> np.ndarray:
    """exp(-i angle (axis . sigma) / 2) in closed form."""
    n = check_unit_axis(axis)
    half = 0.5 * angle
    return math.cos(half) * I2 - 1j * math.sin(half) * pauli_dot(n)


def rodrigues_rotation(axis, angle: float) -> np.ndarray:
    """Proper 3x3 rotation by ``angle`` (right-handed) about a unit ``axis``."""
    n = check_unit_axis(axis)
    k = np.array([
        [0.0, -n[2], n[1]],
        [n[2], 0.0, -n[0]],
        [-n[1], n[0], 0.0],
    ])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


def _inf_norm(a: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(a), axis=1)))


def matrix_exponential(m, max_terms: int = 60) -> np.ndarray:
    """Matrix exponential by scaling and squaring a truncated Taylor series.

    The argument is halved until its infinity norm is at most 1/2; the series
    is then summed until the next term falls below 1e-18 of the partial sum,
    which keeps the truncation error far under the 1e-12 budget.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix_exponential needs a square matrix")
    n = a.shape[0]
    norm = _inf_norm(a)
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
        a = a / (2.0 ** squarings)

    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, max_terms + 1):
        term = term @ a / k
        result = result + term
        if _inf_norm(term) <= 1e-18 * _inf_norm(result):
            break
    for _ in range(squarings):
        result = result @ result
    return result
