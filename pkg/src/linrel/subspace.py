"""Orthonormal-basis subspaces of K^n and the elementary operations on them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, GeneratorError

DEFAULT_TOL = 1e-10

FIELDS = ("real", "complex")


def field_dtype(field):
    if field not in FIELDS:
        raise DimensionError(f"unknown field {field!r}")
    return np.float64 if field == "real" else np.complex128


def field_of(*arrays):
    return "complex" if any(np.iscomplexobj(a) for a in arrays) else "real"


def _as_field(a, field):
    a = np.asarray(a)
    if field == "real":
        if np.iscomplexobj(a):
            if np.any(np.abs(a.imag) > 0):
                raise DimensionError("complex entries in a real-field computation")
            a = a.real
        return a.astype(np.float64)
    return a.astype(np.complex128)


def range_basis(A, tol=DEFAULT_TOL, relative=False):
    """Orthonormal basis of the column space of ``A``.

    A singular value counts toward the rank when it exceeds
    ``tol * sigma_max`` (``relative=True``) or ``tol * max(1, sigma_max)``.
    """
    A = np.asarray(A)
    rows = A.shape[0]
    if A.shape[1] == 0:
        return np.zeros((rows, 0), dtype=A.dtype)
    U, s, _ = np.linalg.svd(A, full_matrices=False)
    smax = s[0] if s.size else 0.0
    cut = tol * smax if relative else tol * max(1.0, smax)
    r = int(np.sum(s > cut)) if smax > 0 else 0
    return U[:, :r].copy()


def null_basis(A, tol=DEFAULT_TOL):
    """Orthonormal basis of the null space of ``A`` (absolute-floor threshold)."""
    A = np.asarray(A)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=A.dtype)
    _, s, Vh = np.linalg.svd(A, full_matrices=True)
    smax = s[0] if s.size else 0.0
    r = int(np.sum(s > tol * max(1.0, smax)))
    return Vh[r:].conj().T.copy()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of K^ambient_dim held as an orthonormal column basis.

    Two instances describe the same subspace when each basis is contained in
    the other; compare with :meth:`equals`, never entrywise.
    """

    ambient_dim: int
    basis: np.ndarray
    tol: float = DEFAULT_TOL
    field: str = "complex"

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise DimensionError("ambient_dim must be nonnegative")
        b = _as_field(self.basis, self.field)
        if self.ambient_dim == 0:
            b = np.zeros((0, 0), b.dtype)
        else:
            b = b.reshape(self.ambient_dim, -1)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self):
        return self.basis.shape[1]

    @classmethod
    def zero(cls, ambient_dim, tol=DEFAULT_TOL, field="complex"):
        return cls(ambient_dim, np.zeros((ambient_dim, 0)), tol, field)

    @classmethod
    def full(cls, ambient_dim, tol=DEFAULT_TOL, field="complex"):
        return cls(ambient_dim, np.eye(ambient_dim), tol, field)

    @classmethod
    def from_columns(cls, A, tol=DEFAULT_TOL, field=None, relative=False):
        A = np.atleast_2d(np.asarray(A))
        field = field or field_of(A)
        A = _as_field(A, field)
        return cls(A.shape[0], range_basis(A, tol, relative), tol, field)

    def projector(self):
        return self.basis @ self.basis.conj().T

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def _vec(self, v):
        v = np.asarray(v)
        if v.ndim != 1 or v.shape[0] != self.ambient_dim:
            raise DimensionError(
                f"vector of shape {v.shape} does not live in K^{self.ambient_dim}"
            )
        return v

    def residual(self, other):
        """Largest mutual projection residual between two subspaces."""
        self._check(other)
        if self.dim != other.dim:
            # no containment in one direction; 1.0 is the largest possible residual
            return 1.0
        r1 = np.linalg.norm(other.basis - project_many(self, other.basis), 2) if other.dim else 0.0
        r2 = np.linalg.norm(self.basis - project_many(other, self.basis), 2) if self.dim else 0.0
        return float(max(r1, r2))

    def equals(self, other, tol=None):
        tol = self.tol if tol is None else tol
        return self.residual(other) <= tol

    def contains_subspace(self, other, tol=None):
        self._check(other)
        tol = self.tol if tol is None else tol
        if other.dim == 0:
            return True
        r = np.linalg.norm(other.basis - project_many(self, other.basis), 2)
        return r <= tol

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, field={self.field})"


def span(vectors, ambient_dim, tol=DEFAULT_TOL, field=None):
    """Orthonormalized span of ``vectors``; rank decided by ``s > tol * s_max``."""
    vectors = [np.asarray(v) for v in vectors]
    for v in vectors:
        if v.ndim != 1 or v.shape[0] != ambient_dim:
            raise DimensionError(f"vector of shape {v.shape} does not live in K^{ambient_dim}")
    field = field or field_of(*vectors)
    if not vectors:
        return Subspace.zero(ambient_dim, tol, field)
    A = _as_field(np.column_stack(vectors), field)
    return Subspace(ambient_dim, range_basis(A, tol, relative=True), tol, field)


def contains(E, v):
    v = E._vec(v)
    r = np.linalg.norm(v - project(E, v))
    return bool(r <= E.tol * max(1.0, np.linalg.norm(v)))


def project(E, v):
    v = E._vec(v)
    B = E.basis
    return B @ (B.conj().T @ v)


def project_many(E, V):
    B = E.basis
    return B @ (B.conj().T @ V)


def distance(E, v):
    v = E._vec(v)
    return float(np.linalg.norm(v - project(E, v)))


def _common_field(E, F):
    return "complex" if "complex" in (E.field, F.field) else "real"


def intersect(E, F):
    """E ∩ F from the null space of ``[B_E, -B_F]`` mapped through ``B_E``."""
    E._check(F)
    field = _common_field(E, F)
    if E.dim == 0 or F.dim == 0:
        return Subspace.zero(E.ambient_dim, E.tol, field)
    N = null_basis(np.hstack([E.basis, -F.basis]), E.tol)
    if N.shape[1] == 0:
        return Subspace.zero(E.ambient_dim, E.tol, field)
    W = E.basis @ N[: E.dim]
    # each null vector splits evenly between the two blocks, so W has
    # singular values ~1/sqrt(2)
    return Subspace(E.ambient_dim, range_basis(W, E.tol), E.tol, field)


def subspace_sum(E, F):
    E._check(F)
    field = _common_field(E, F)
    W = np.hstack([_as_field(E.basis, field), _as_field(F.basis, field)])
    return Subspace(E.ambient_dim, range_basis(W, E.tol), E.tol, field)


def complement(E):
    """Orthogonal complement; its dimension is exactly ``ambient_dim - dim``."""
    n, d = E.ambient_dim, E.dim
    if d == 0:
        return Subspace.full(n, E.tol, E.field)
    U, _, _ = np.linalg.svd(E.basis, full_matrices=True)
    return Subspace(n, U[:, d:].copy(), E.tol, E.field)


def random_subspace(rng, ambient_dim, dim, field="complex", within=None, containing=None):
    """Uniformly oriented random subspace, optionally nested between two others."""
    tol = DEFAULT_TOL
    lo = containing.dim if containing is not None else 0
    hi = within.dim if within is not None else ambient_dim
    if not lo <= dim <= hi:
        raise GeneratorError(f"cannot place a {dim}-dimensional subspace between dims {lo} and {hi}")
    base = containing.basis if containing is not None else np.zeros((ambient_dim, 0))
    extra = dim - base.shape[1]
    if extra == 0:
        return Subspace(ambient_dim, base, tol, field)
    host = within.basis if within is not None else np.eye(ambient_dim)
    # random directions inside the host, orthogonal to what must be contained
    C = host @ random_matrix(rng, host.shape[1], extra, field)
    if base.shape[1]:
        C = C - base @ (base.conj().T @ C)
    Q, _ = np.linalg.qr(C)
    return Subspace(ambient_dim, np.hstack([base, Q]), tol, field)


def random_matrix(rng, rows, cols, field="complex"):
    A = rng.standard_normal((rows, cols))
    if field == "complex":
        A = A + 1j * rng.standard_normal((rows, cols))
    return A
