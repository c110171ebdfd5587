"""Input validation helpers shared across the package."""

import numpy as np

__all__ = [
    "as_matrix",
    "as_vector",
    "check_square",
    "check_symmetric",
    "check_order",
]


def as_matrix(value, name="matrix", shape=None):
    """Coerce to a 2-D float array, optionally enforcing a shape."""
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if shape is not None and arr.shape != tuple(shape):
        raise ValueError(f"{name} must have shape {tuple(shape)}, got {arr.shape}")
    return arr


def as_vector(value, name="vector", length=None):
    """Coerce to a 1-D float array, optionally enforcing a length."""
    arr = np.atleast_1d(np.asarray(value, dtype=float))
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got ndim={arr.ndim}")
    if length is not None and arr.size != length:
        raise ValueError(f"{name} must have length {length}, got {arr.size}")
    return arr


def check_square(a, name="matrix"):
    a = as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def check_symmetric(a, name="matrix", tol=1e-10):
    a = check_square(a, name)
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if np.abs(a - a.T).max(initial=0.0) > tol * scale:
        raise ValueError(f"{name} must be symmetric")
    return 0.5 * (a + a.T)


def check_order(n, n_max, name="order"):
    n = int(n)
    if not 1 <= n <= n_max:
        raise ValueError(f"{name} must satisfy 1 <= {name} <= {n_max}, got {n}")
    return n
