"""Parameter-dependent state-space models and their interconnections.

The central objects are :class:`LpvModel` (state-space matrices that depend
affinely on a scheduling vector ``rho``) and :class:`LtiStateSpace` (a plain
frozen realization).  :func:`to_lft` pulls the parameter dependence out into
a diagonal feedback block, :func:`difference` builds the error system between
two models, and :func:`generalized_plant` / :func:`lower_lft` recast model
approximation as a feedback-design problem.
"""

from dataclasses import dataclass, field
import itertools
import json

import numpy as np

from .errors import (
    DimensionError,
    ParameterRangeError,
    RationalDependenceError,
    WellPosednessError,
)

__all__ = [
    "ParameterBox",
    "AffineMatrix",
    "LpvModel",
    "LtiStateSpace",
    "LftModel",
    "GeneralizedPlant",
    "freeze",
    "freeze_unchecked",
    "to_lft",
    "eval_lft",
    "difference",
    "generalized_plant",
    "lower_lft",
    "lower_lft_lti",
    "model_to_dict",
    "model_from_dict",
    "save_model",
    "load_model",
]

# Singular values below this fraction of the largest one are treated as zero
# when factorizing coefficient blocks in to_lft.
_RANK_RTOL = 1e-10


def _frozen(arr):
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class ParameterBox:
    """Closed box of admissible scheduling-parameter values.

    ``bounds`` has shape ``(n_rho, 2)`` with columns ``[lo, hi]``.  An empty
    box (``n_rho = 0``) describes a parameter-free (LTI) model.
    """

    bounds: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bounds, dtype=float).reshape(-1, 2)
        if b.size and np.any(b[:, 0] > b[:, 1]):
            raise ValueError("each bound must satisfy lo <= hi")
        object.__setattr__(self, "bounds", _frozen(b))

    @classmethod
    def unit(cls, n_rho):
        """The box [-1, 1]^n_rho."""
        return cls(np.column_stack([-np.ones(n_rho), np.ones(n_rho)]))

    @property
    def n_rho(self):
        return self.bounds.shape[0]

    @property
    def center(self):
        return 0.5 * (self.bounds[:, 0] + self.bounds[:, 1])

    @property
    def halfwidth(self):
        return 0.5 * (self.bounds[:, 1] - self.bounds[:, 0])

    def contains(self, rho, tol=0.0):
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        if rho.size != self.n_rho:
            raise DimensionError(
                f"rho has length {rho.size}, expected {self.n_rho}"
            )
        lo = self.bounds[:, 0] - tol
        hi = self.bounds[:, 1] + tol
        return bool(np.all(rho >= lo) and np.all(rho <= hi))

    def normalize(self, rho):
        """Map a point of the box onto the unit box [-1, 1]^n_rho.

        Degenerate directions (lo == hi) map to 0.
        """
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        if rho.size != self.n_rho:
            raise DimensionError(
                f"rho has length {rho.size}, expected {self.n_rho}"
            )
        hw = self.halfwidth
        out = np.zeros(self.n_rho)
        nz = hw > 0
        out[nz] = (rho[nz] - self.center[nz]) / hw[nz]
        return out

    def vertices(self):
        """All 2^n_rho corner points (a single empty vertex when n_rho=0)."""
        if self.n_rho == 0:
            return [np.zeros(0)]
        corners = itertools.product(*(tuple(row) for row in self.bounds))
        return [np.array(c) for c in corners]

    def грid(self, points_per_axis):  # pragma: no cover - guard against typos
        raise AttributeError

    def grid(self, points_per_axis=5):
        """Uniform tensor grid over the box, ``points_per_axis`` per direction."""
        if self.n_rho == 0:
            return [np.zeros(0)]
        axes = [np.linspace(lo, hi, points_per_axis) for lo, hi in self.bounds]
        return [np.array(c) for c in itertools.product(*axes)]


@dataclass(frozen=True)
class AffineMatrix:
    """Matrix-valued affine function ``M(rho) = M0 + sum_i rho_i * Mi``.

    Stored as one stacked array ``terms`` of shape ``(1 + n_rho, rows, cols)``
    with the constant part first.  Instances are immutable; the arithmetic
    operators implement exact affine algebra and reject products that would
    create quadratic parameter dependence.
    """

    terms: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.terms, dtype=float)
        if t.ndim != 3:
            raise DimensionError("terms must be a (1+n_rho, rows, cols) stack")
        object.__setattr__(self, "terms", _frozen(t))

    @classmethod
    def from_parts(cls, constant, coeffs=()):
        constant = np.atleast_2d(np.asarray(constant, dtype=float))
        coeffs = [np.atleast_2d(np.asarray(c, dtype=float)) for c in coeffs]
        for c in coeffs:
            if c.shape != constant.shape:
                raise DimensionError(
                    f"coefficient shape {c.shape} != constant shape {constant.shape}"
                )
        return cls(np.stack([constant, *coeffs]) if coeffs else constant[None])

    @classmethod
    def constant_like(cls, value, n_rho):
        value = np.atleast_2d(np.asarray(value, dtype=float))
        return cls.from_parts(value, [np.zeros_like(value)] * n_rho)

    @classmethod
    def zeros(cls, rows, cols, n_rho):
        return cls(np.zeros((1 + n_rho, rows, cols)))

    @property
    def constant(self):
        return self.terms[0]

    @property
    def coeffs(self):
        return self.terms[1:]

    @property
    def n_rho(self):
        return self.terms.shape[0] - 1

    @property
    def shape(self):
        return self.terms.shape[1:]

    @property
    def is_constant(self):
        return self.n_rho == 0 or not np.any(self.terms[1:])

    def __call__(self, rho):
        rho = np.atleast_1d(np.asarray(rho, dtype=float))
        if rho.size != self.n_rho:
            raise DimensionError(
                f"rho has length {rho.size}, expected {self.n_rho}"
            )
        scale = np.concatenate([[1.0], rho])
        return np.tensordot(scale, self.terms, axes=1)

    def _binary_check(self, other):
        if not isinstance(other, AffineMatrix):
            raise TypeError("expected an AffineMatrix")
        if other.n_rho != self.n_rho:
            raise DimensionError("operands must share the parameter count")

    def __add__(self, other):
        self._binary_check(other)
        if other.shape != self.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return AffineMatrix(self.terms + other.terms)

    def __sub__(self, other):
        self._binary_check(other)
        if other.shape != self.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return AffineMatrix(self.terms - other.terms)

    def __neg__(self):
        return AffineMatrix(-self.terms)

    def __matmul__(self, other):
        """Affine product; both factors parameter-dependent is rejected
        unless every cross term is exactly zero."""
        self._binary_check(other)
        if self.shape[1] != other.shape[0]:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        left_dep = [i for i in range(self.n_rho) if np.any(self.coeffs[i])]
        right_dep = [j for j in range(other.n_rho) if np.any(other.coeffs[j])]
        for i in left_dep:
            for j in right_dep:
                if np.any(self.coeffs[i] @ other.coeffs[j]):
                    raise RationalDependenceError(
                        "product of two parameter-dependent factors is not affine"
                    )
        terms = np.empty((1 + self.n_rho, self.shape[0], other.shape[1]))
        terms[0] = self.constant @ other.constant
        for k in range(self.n_rho):
            terms[1 + k] = self.coeffs[k] @ other.constant + self.constant @ other.coeffs[k]
        return AffineMatrix(terms)

    def scaled(self, factor):
        return AffineMatrix(factor * self.terms)


def _aff_hstack(blocks):
    return AffineMatrix(np.concatenate([b.terms for b in blocks], axis=2))


def _aff_vstack(blocks):
    return AffineMatrix(np.concatenate([b.terms for b in blocks], axis=1))


def _aff_block(rows):
    return _aff_vstack([_aff_hstack(row) for row in rows])


def _aff_blockdiag(a, b):
    z_ab = AffineMatrix.zeros(a.shape[0], b.shape[1], a.n_rho)
    z_ba = AffineMatrix.zeros(b.shape[0], a.shape[1], a.n_rho)
    return _aff_block([[a, z_ab], [z_ba, b]])


def _aff_inv(m):
    """Inverse of an affine matrix; only the parameter-free case is exact."""
    if not m.is_constant:
        raise RationalDependenceError(
            "inverting a parameter-dependent matrix leaves the affine class"
        )
    return AffineMatrix.constant_like(np.linalg.inv(m.constant), m.n_rho)


@dataclass(frozen=True)
class LtiStateSpace:
    """Frozen state-space realization ``(A, B, C, D)``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.a, dtype=float))
        b = np.atleast_2d(np.asarray(self.b, dtype=float))
        c = np.atleast_2d(np.asarray(self.c, dtype=float))
        d = np.atleast_2d(np.asarray(self.d, dtype=float))
        n = a.shape[0]
        if a.shape != (n, n):
            raise DimensionError("A must be square")
        if b.shape[0] != n or c.shape[1] != n or d.shape != (c.shape[0], b.shape[1]):
            raise DimensionError(
                f"inconsistent dimensions A{a.shape} B{b.shape} C{c.shape} D{d.shape}"
            )
        for name, m in (("a", a), ("b", b), ("c", c), ("d", d)):
            object.__setattr__(self, name, _frozen(m))

    @property
    def n_x(self):
        return self.a.shape[0]

    @property
    def n_u(self):
        return self.b.shape[1]

    @property
    def n_y(self):
        return self.c.shape[0]

    def transfer_at(self, s):
        """Transfer matrix ``C (sI - A)^-1 B + D`` at a complex frequency."""
        if self.n_x == 0:
            return self.d.astype(complex)
        mat = s * np.eye(self.n_x) - self.a
        try:
            x = np.linalg.solve(mat, self.b)
        except np.linalg.LinAlgError as exc:
            raise WellPosednessError(f"frequency {s} is a pole of the realization") from exc
        return self.c @ x + self.d

    def dc_gain(self):
        return self.transfer_at(0.0).real


@dataclass(frozen=True)
class LpvModel:
    """State-space model whose matrices depend affinely on ``rho``."""

    a: AffineMatrix
    b: AffineMatrix
    c: AffineMatrix
    d: AffineMatrix
    params: ParameterBox

    def __post_init__(self):
        n = self.a.shape[0]
        if self.a.shape != (n, n):
            raise DimensionError("A must be square")
        if self.b.shape[0] != n:
            raise DimensionError("B row count must match the state dimension")
        if self.c.shape[1] != n:
            raise DimensionError("C column count must match the state dimension")
        if self.d.shape != (self.c.shape[0], self.b.shape[1]):
            raise DimensionError("D must be n_y x n_u")
        for m in (self.a, self.b, self.c, self.d):
            if m.n_rho != self.params.n_rho:
                raise DimensionError(
                    "every matrix must carry one coefficient per scheduling parameter"
                )

    @classmethod
    def from_arrays(cls, a_terms, b_terms, c_terms, d_terms, bounds):
        return cls(
            AffineMatrix(np.asarray(a_terms, dtype=float)),
            AffineMatrix(np.asarray(b_terms, dtype=float)),
            AffineMatrix(np.asarray(c_terms, dtype=float)),
            AffineMatrix(np.asarray(d_terms, dtype=float)),
            ParameterBox(bounds),
        )

    @classmethod
    def from_lti(cls, sys, params=None):
        """Wrap a frozen realization as a parameter-independent model."""
        box = params if params is not None else ParameterBox(np.zeros((0, 2)))
        k = box.n_rho
        return cls(
            AffineMatrix.constant_like(sys.a, k),
            AffineMatrix.constant_like(sys.b, k),
            AffineMatrix.constant_like(sys.c, k),
            AffineMatrix.constant_like(sys.d, k),
            box,
        )

    @property
    def n_x(self):
        return self.a.shape[0]

    @property
    def n_u(self):
        return self.b.shape[1]

    @property
    def n_y(self):
        return self.c.shape[0]

    @property
    def n_rho(self):
        return self.params.n_rho


def freeze(model, rho):
    """Evaluate all matrices at a fixed ``rho`` inside the parameter box."""
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    if not model.params.contains(rho):
        raise ParameterRangeError(
            f"rho={rho.tolist()} lies outside the admissible box"
        )
    return freeze_unchecked(model, rho)


def freeze_unchecked(model, rho):
    """Like :func:`freeze` but without the box check (deliberate extrapolation)."""
    return LtiStateSpace(model.a(rho), model.b(rho), model.c(rho), model.d(rho))


@dataclass(frozen=True)
class LftModel:
    """Constant-matrix realization with the parameter pulled into a diagonal
    feedback block.

    The loop signals satisfy ``w = Delta v`` with
    ``Delta = blockdiag(delta_i * I_{r_i})`` following ``delta_structure``,
    a list of ``(parameter_index, repetition)`` pairs.  ``delta`` lives in the
    unit box; :meth:`normalize` maps points of the original box onto it.
    """

    a: np.ndarray
    b_w: np.ndarray
    b_u: np.ndarray
    c_v: np.ndarray
    d_vw: np.ndarray
    d_vu: np.ndarray
    c_y: np.ndarray
    d_yw: np.ndarray
    d_yu: np.ndarray
    delta_structure: tuple
    params: ParameterBox

    def __post_init__(self):
        for name in ("a", "b_w", "b_u", "c_v", "d_vw", "d_vu", "c_y", "d_yw", "d_yu"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        object.__setattr__(
            self, "delta_structure", tuple((int(i), int(r)) for i, r in self.delta_structure)
        )
        q = sum(r for _, r in self.delta_structure)
        if self.b_w.shape[1] != q or self.c_v.shape[0] != q or self.d_vw.shape != (q, q):
            raise DimensionError("loop-channel dimensions must equal the Delta size")

    @property
    def q(self):
        return sum(r for _, r in self.delta_structure)

    def normalize(self, rho):
        return self.params.normalize(rho)

    def delta_diagonal(self, delta):
        delta = np.atleast_1d(np.asarray(delta, dtype=float))
        if delta.size != self.params.n_rho:
            raise DimensionError(
                f"delta has length {delta.size}, expected {self.params.n_rho}"
            )
        if self.q == 0:
            return np.zeros(0)
        return np.concatenate(
            [np.full(r, delta[i]) for i, r in self.delta_structure]
        )


def to_lft(model):
    """Pull the affine parameter dependence of a model into an LFT loop.

    The box is first mapped onto the unit box so the loop block satisfies
    ``||Delta|| <= 1``; each normalized coefficient block is then factorized
    at numerical rank (threshold ``1e-10`` relative), which fixes the number
    of loop channels per parameter.
    """
    n_x, n_u, n_y = model.n_x, model.n_u, model.n_y
    center, hw = model.params.center, model.params.halfwidth

    stack = lambda m: np.block if False else None  # noqa: E731 - kept out of use

    def stacked(i):
        return np.block(
            [
                [model.a.coeffs[i], model.b.coeffs[i]],
                [model.c.coeffs[i], model.d.coeffs[i]],
            ]
        )

    # Centering folds rho = center + hw * delta into the constant part.
    a0 = model.a(center)
    b0 = model.b(center)
    c0 = model.c(center)
    d0 = model.d(center)

    left_blocks, right_blocks, structure = [], [], []
    for i in range(model.n_rho):
        block = hw[i] * stacked(i)
        if not np.any(block):
            continue
        u, s, vt = np.linalg.svd(block, full_matrices=False)
        rank = int(np.sum(s > _RANK_RTOL * s[0]))
        if rank == 0:
            continue
        root = np.sqrt(s[:rank])
        left_blocks.append(u[:, :rank] * root)
        right_blocks.append(root[:, None] * vt[:rank])
        structure.append((i, rank))

    q = sum(r for _, r in structure)
    left = np.hstack(left_blocks) if q else np.zeros((n_x + n_y, 0))
    right = np.vstack(right_blocks) if q else np.zeros((0, n_x + n_u))

    return LftModel(
        a=a0,
        b_w=left[:n_x],
        b_u=b0,
        c_v=right[:, :n_x],
        d_vw=np.zeros((q, q)),
        d_vu=right[:, n_x:],
        c_y=c0,
        d_yw=left[n_x:],
        d_yu=d0,
        delta_structure=tuple(structure),
        params=model.params,
    )


def eval_lft(lft, delta):
    """Close the parameter loop at a unit-box point ``delta``.

    Raises :class:`WellPosednessError` when ``I - D_vw * Delta`` is singular.
    """
    delta = np.atleast_1d(np.asarray(delta, dtype=float))
    if np.any(np.abs(delta) > 1.0 + 1e-12):
        raise ParameterRangeError("delta must lie in the unit box")
    diag = lft.delta_diagonal(delta)
    if diag.size == 0:
        return LtiStateSpace(lft.a, lft.b_u, lft.c_y, lft.d_yu)
    loop = np.eye(diag.size) - lft.d_vw * diag[None, :]
    # phi = Delta (I - D_vw Delta)^-1, applied from the left of C_v / D_vu
    cond = np.linalg.cond(loop)
    if not np.isfinite(cond) or cond > 1e12:
        raise WellPosednessError("parameter loop is singular for this delta")
    phi = diag[:, None] * np.linalg.inv(loop)
    a = lft.a + lft.b_w @ phi @ lft.c_v
    b = lft.b_u + lft.b_w @ phi @ lft.d_vu
    c = lft.c_y + lft.d_yw @ phi @ lft.c_v
    d = lft.d_yu + lft.d_yw @ phi @ lft.d_vu
    return LtiStateSpace(a, b, c, d)


def _check_same_io(g, h):
    if g.n_u != h.n_u or g.n_y != h.n_y:
        raise DimensionError("models must share input and output dimensions")
    if g.n_rho != h.n_rho or not np.array_equal(g.params.bounds, h.params.bounds):
        raise DimensionError("models must share the scheduling-parameter box")


def difference(g, g_red):
    """Error system ``g - g_red`` as one model of order ``n_x + n``."""
    _check_same_io(g, g_red)
    return LpvModel(
        a=_aff_blockdiag(g.a, g_red.a),
        b=_aff_vstack([g.b, g_red.b]),
        c=_aff_hstack([g.c, -g_red.c]),
        d=g.d - g_red.d,
        params=g.params,
    )


@dataclass(frozen=True)
class GeneralizedPlant:
    """An :class:`LpvModel` with trailing channels reserved for a controller.

    Inputs are ``[w; u]`` and outputs ``[z; y]`` where the last ``n_ctrl``
    inputs and ``n_meas`` outputs close against the controller.
    """

    model: LpvModel
    n_meas: int
    n_ctrl: int

    def __post_init__(self):
        if not 0 < self.n_meas <= self.model.n_y:
            raise DimensionError("n_meas must be a valid trailing output count")
        if not 0 < self.n_ctrl <= self.model.n_u:
            raise DimensionError("n_ctrl must be a valid trailing input count")

    @property
    def n_w(self):
        return self.model.n_u - self.n_ctrl

    @property
    def n_z(self):
        return self.model.n_y - self.n_meas


def generalized_plant(g):
    """Augmented plant whose controller closure equals ``g - controller``.

    The external channel ``w`` repeats the model input, the performance
    channel ``z`` carries the output mismatch, and the controller sees ``w``
    directly: closing the loop with any candidate of matching dimensions
    reproduces :func:`difference` up to state ordering.
    """
    k = g.n_rho
    n_u, n_y = g.n_u, g.n_y
    b = _aff_hstack([g.b, AffineMatrix.zeros(g.n_x, n_y, k)])
    c = _aff_vstack([g.c, AffineMatrix.zeros(n_u, g.n_x, k)])
    d = _aff_block(
        [
            [g.d, AffineMatrix.constant_like(-np.eye(n_y), k)],
            [
                AffineMatrix.constant_like(np.eye(n_u), k),
                AffineMatrix.zeros(n_u, n_y, k),
            ],
        ]
    )
    model = LpvModel(a=g.a, b=b, c=c, d=d, params=g.params)
    return GeneralizedPlant(model=model, n_meas=n_u, n_ctrl=n_y)


def _split_plant(plant):
    m = plant.model
    n_w, n_z = plant.n_w, plant.n_z
    b1 = AffineMatrix(m.b.terms[:, :, :n_w])
    b2 = AffineMatrix(m.b.terms[:, :, n_w:])
    c1 = AffineMatrix(m.c.terms[:, :n_z, :])
    c2 = AffineMatrix(m.c.terms[:, n_z:, :])
    d11 = AffineMatrix(m.d.terms[:, :n_z, :n_w])
    d12 = AffineMatrix(m.d.terms[:, :n_z, n_w:])
    d21 = AffineMatrix(m.d.terms[:, n_z:, :n_w])
    d22 = AffineMatrix(m.d.terms[:, n_z:, n_w:])
    return b1, b2, c1, c2, d11, d12, d21, d22


def lower_lft(plant, k):
    """Close the trailing channels of ``plant`` with the controller ``k``.

    Both systems must share the parameter box.  The algebraic loop
    ``I - D_k D_22`` has to be parameter-independent and nonsingular; a
    parameter-dependent loop would leave the affine model class and raises
    :class:`RationalDependenceError`.
    """
    m = plant.model
    if k.n_u != plant.n_meas or k.n_y != plant.n_ctrl:
        raise DimensionError(
            f"controller must map {plant.n_meas} measurements to {plant.n_ctrl} inputs"
        )
    if not np.array_equal(m.params.bounds, k.params.bounds):
        raise DimensionError("plant and controller must share the parameter box")
    b1, b2, c1, c2, d11, d12, d21, d22 = _split_plant(plant)

    loop = AffineMatrix.constant_like(np.eye(k.n_y), k.n_rho) - (k.d @ d22)
    if not loop.is_constant:
        raise RationalDependenceError(
            "parameter-dependent algebraic loop D_k * D_22 is unsupported"
        )
    if np.linalg.cond(loop.constant) > 1e12:
        raise WellPosednessError("algebraic loop I - D_k D_22 is singular")
    gain = _aff_inv(loop)

    kd = gain @ k.d
    kc = gain @ k.c
    a_cl = _aff_block(
        [
            [m.a + b2 @ kd @ c2, b2 @ kc],
            [k.b @ (c2 + d22 @ kd @ c2), k.a + k.b @ d22 @ kc],
        ]
    )
    b_cl = _aff_vstack([b1 + b2 @ kd @ d21, k.b @ (d21 + d22 @ kd @ d21)])
    c_cl = _aff_hstack([c1 + d12 @ kd @ c2, d12 @ kc])
    d_cl = d11 + d12 @ kd @ d21
    return LpvModel(a=a_cl, b=b_cl, c=c_cl, d=d_cl, params=m.params)


def lower_lft_lti(plant_sys, n_meas, n_ctrl, k_sys):
    """Frozen-matrix version of :func:`lower_lft` used in per-grid loops."""
    n_w = plant_sys.n_u - n_ctrl
    n_z = plant_sys.n_y - n_meas
    a, b, c, d = plant_sys.a, plant_sys.b, plant_sys.c, plant_sys.d
    b1, b2 = b[:, :n_w], b[:, n_w:]
    c1, c2 = c[:n_z], c[n_z:]
    d11, d12 = d[:n_z, :n_w], d[:n_z, n_w:]
    d21, d22 = d[n_z:, :n_w], d[n_z:, n_w:]

    loop = np.eye(k_sys.n_y) - k_sys.d @ d22
    if np.linalg.cond(loop) > 1e12:
        raise WellPosednessError("algebraic loop I - D_k D_22 is singular")
    gain = np.linalg.inv(loop)
    kd = gain @ k_sys.d
    kc = gain @ k_sys.c

    a_cl = np.block(
        [
            [a + b2 @ kd @ c2, b2 @ kc],
            [k_sys.b @ (c2 + d22 @ kd @ c2), k_sys.a + k_sys.b @ d22 @ kc],
        ]
    )
    b_cl = np.vstack([b1 + b2 @ kd @ d21, k_sys.b @ (d21 + d22 @ kd @ d21)])
    c_cl = np.hstack([c1 + d12 @ kd @ c2, d12 @ kc])
    d_cl = d11 + d12 @ kd @ d21
    return LtiStateSpace(a_cl, b_cl, c_cl, d_cl)


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------

def _matrix_to_dict(m):
    return {
        "const": m.constant.tolist(),
        "coeffs": [c.tolist() for c in m.coeffs],
    }


def _matrix_from_dict(payload, n_rho):
    const = np.asarray(payload["const"], dtype=float)
    coeffs = [np.asarray(c, dtype=float) for c in payload.get("coeffs", [])]
    if len(coeffs) != n_rho:
        raise DimensionError(
            f"matrix payload carries {len(coeffs)} coefficients, expected {n_rho}"
        )
    return AffineMatrix.from_parts(const, coeffs)


def model_to_dict(model):
    return {
        "n_rho": model.n_rho,
        "bounds": model.params.bounds.tolist(),
        "A": _matrix_to_dict(model.a),
        "B": _matrix_to_dict(model.b),
        "C": _matrix_to_dict(model.c),
        "D": _matrix_to_dict(model.d),
    }


def model_from_dict(payload):
    n_rho = int(payload["n_rho"])
    bounds = np.asarray(payload["bounds"], dtype=float).reshape(-1, 2)
    if bounds.shape[0] != n_rho:
        raise DimensionError("bounds count must equal n_rho")
    return LpvModel(
        a=_matrix_from_dict(payload["A"], n_rho),
        b=_matrix_from_dict(payload["B"], n_rho),
        c=_matrix_from_dict(payload["C"], n_rho),
        d=_matrix_from_dict(payload["D"], n_rho),
        params=ParameterBox(bounds),
    )


def save_model(model, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2)
        fh.write("\n")


def load_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))
