"""Linear relations (multivalued linear operators) between K^n and K^m.

A relation is stored as its graph, a :class:`Subspace` of K^(n+m) whose first
``n`` coordinates are the x-block and last ``m`` the y-block.  All operations
return new relations; nothing is mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DimensionError, DomainError, PreconditionError
from .subspace import (
    DEFAULT_TOL,
    Subspace,
    _as_field,
    contains,
    field_of,
    intersect,
    null_basis,
    range_basis,
    span,
    subspace_sum,
)


@dataclass(frozen=True, eq=False)
class LinearRelation:
    n: int
    m: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != self.n + self.m:
            raise DimensionError(
                f"graph lives in K^{self.graph.ambient_dim}, expected K^{self.n + self.m}"
            )

    @property
    def tol(self):
        return self.graph.tol

    @property
    def field(self):
        return self.graph.field

    @property
    def X(self):
        return self.graph.basis[: self.n]

    @property
    def Y(self):
        return self.graph.basis[self.n :]

    @cached_property
    def _split(self):
        # one SVD of the x-block fixes D(T) and T(0) together, so
        # dim graph = dim D(T) + dim T(0) holds exactly
        X, d = self.X, self.graph.dim
        if d == 0:
            return (np.zeros((self.n, 0), self.X.dtype), np.zeros(0),
                    np.zeros((0, 0), self.X.dtype), np.zeros((0, 0), self.X.dtype))
        U, s, Vh = np.linalg.svd(X, full_matrices=True)
        V = Vh.conj().T
        r = int(np.sum(s > self.tol * max(1.0, s[0] if s.size else 0.0)))
        return U[:, :r], s[:r], V[:, :r], V[:, r:]

    @cached_property
    def domain(self):
        return Subspace(self.n, self._split[0], self.tol, self.field)

    @cached_property
    def mulpart(self):
        N = self._split[3]
        return Subspace(self.m, range_basis(self.Y @ N, self.tol), self.tol, self.field)

    @cached_property
    def range(self):
        return Subspace.from_columns(self.Y, self.tol, self.field) if self.graph.dim else Subspace.zero(self.m, self.tol, self.field)

    @cached_property
    def nullspace(self):
        return inverse(self).mulpart

    @cached_property
    def hat_matrix(self):
        """Matrix of the operator part in orthonormal coordinates of D(T)."""
        _, s, Vr, _ = self._split
        A = (self.Y @ Vr) / s if s.size else np.zeros((self.m, 0), self.Y.dtype)
        M = self.mulpart.basis
        return A - M @ (M.conj().T @ A)

    @property
    def is_single_valued(self):
        return self.mulpart.dim == 0

    def __repr__(self):
        return (f"LinearRelation(n={self.n}, m={self.m}, dim_graph={self.graph.dim}, "
                f"dim_domain={self.domain.dim}, dim_mulpart={self.mulpart.dim}, field={self.field})")


def _relation(n, m, W, tol, field, relative=False):
    W = _as_field(W, field)
    return LinearRelation(n, m, Subspace(n + m, range_basis(W, tol, relative), tol, field))


def make_relation(generators, n, m, tol=DEFAULT_TOL, field=None):
    """Relation spanned by ``(x, y)`` generator pairs."""
    cols = []
    for x, y in generators:
        x, y = np.asarray(x), np.asarray(y)
        if x.shape != (n,) or y.shape != (m,):
            raise DimensionError(f"generator of shapes {x.shape}, {y.shape} does not fit K^{n} x K^{m}")
        cols.append(np.concatenate([x, y]))
    field = field or field_of(*cols)
    return LinearRelation(n, m, span(cols, n + m, tol, field))


def graph_of(A, domain_basis=None, tol=DEFAULT_TOL, field=None):
    """Graph of the matrix ``A`` (m x n), restricted to ``domain_basis`` if given."""
    A = np.atleast_2d(np.asarray(A))
    m, n = A.shape
    D = np.eye(n) if domain_basis is None else np.asarray(domain_basis).reshape(n, -1)
    field = field or field_of(A, D)
    return _relation(n, m, np.vstack([D, A @ D]), tol, field)


def from_parts(domain_basis, map_matrix, mulpart_basis, tol=DEFAULT_TOL, field=None):
    """Relation {(D c, A c + t) : t in span(M)} with D an n x d basis of D(T)."""
    D = np.asarray(domain_basis)
    A = np.asarray(map_matrix)
    M = np.asarray(mulpart_basis)
    n, m = D.shape[0], A.shape[0]
    M = M.reshape(m, -1)
    field = field or field_of(D, A, M)
    W = np.hstack([np.vstack([D, A]), np.vstack([np.zeros((n, M.shape[1])), M])])
    return _relation(n, m, W, tol, field)


def zero_relation(n, m, tol=DEFAULT_TOL, field="complex"):
    return LinearRelation(n, m, Subspace.zero(n + m, tol, field))


def equal(T, S, tol=None):
    if (T.n, T.m) != (S.n, S.m):
        return False
    return T.graph.equals(S.graph, tol)


def domain(T):
    return T.domain


def range_space(T):
    return T.range


def mulpart(T):
    return T.mulpart


def nullspace(T):
    return T.nullspace


def _domain_vec(T, x):
    x = np.asarray(x)
    if x.shape != (T.n,):
        raise DimensionError(f"x of shape {x.shape} is not in K^{T.n}")
    if not contains(T.domain, x):
        raise DomainError("x is not in D(T)")
    return x


def image_of(T, x):
    """Return ``(y0, T(0))`` with ``T(x) = y0 + T(0)`` and ``y0`` orthogonal to T(0)."""
    x = _domain_vec(T, x)
    c = T.domain.basis.conj().T @ x
    return T.hat_matrix @ c, T.mulpart


def representative(T, x, mulpart_coeffs=None):
    """Some y in T(x), built from graph coefficients rather than the operator part.

    ``mulpart_coeffs`` (length dim T(0)) shifts the result along T(0).
    """
    x = _domain_vec(T, x)
    U, s, Vr, N = T._split
    c = Vr @ ((U.conj().T @ x) / s) if s.size else np.zeros(T.graph.dim, T.Y.dtype)
    if mulpart_coeffs is not None and N.shape[1]:
        c = c + N @ np.asarray(mulpart_coeffs)
    return T.Y @ c


def inverse(T):
    B = T.graph.basis
    return LinearRelation(T.m, T.n, Subspace(T.n + T.m, np.vstack([B[T.n:], B[: T.n]]), T.tol, T.field))


def scalar_mul(alpha, T):
    field = T.field if np.isrealobj(alpha) else "complex"
    if T.graph.dim == 0:
        return zero_relation(T.n, T.m, T.tol, field)
    return _relation(T.n, T.m, np.vstack([T.X, alpha * T.Y]), T.tol, field)


def _joint_field(T, S):
    return "complex" if "complex" in (T.field, S.field) else "real"


def relation_sum(T, S):
    """T + S = {(x, y + z) : (x, y) in T, (x, z) in S}."""
    if (T.n, T.m) != (S.n, S.m):
        raise DimensionError("relation_sum needs relations between the same spaces")
    field = _joint_field(T, S)
    N = null_basis(np.hstack([T.X, -S.X]), T.tol)
    a, b = N[: T.graph.dim], N[T.graph.dim :]
    return _relation(T.n, T.m, np.vstack([T.X @ a, T.Y @ a + S.Y @ b]), T.tol, field)


def relation_diff(T, S):
    """T - S, i.e. T + (-1) S."""
    return relation_sum(T, scalar_mul(-1.0, S))


def product(S, T):
    """ST = {(x, z) : (x, y) in T and (y, z) in S for some y}."""
    if T.m != S.n:
        raise DimensionError(f"cannot compose: T maps into K^{T.m}, S starts from K^{S.n}")
    field = _joint_field(T, S)
    N = null_basis(np.hstack([T.Y, -S.X]), T.tol)
    a, b = N[: T.graph.dim], N[T.graph.dim :]
    return _relation(T.n, S.m, np.vstack([T.X @ a, S.Y @ b]), T.tol, field)


def dotted_sum(T, S):
    """Direct sum of graphs; requires T ∩ S = {(0, 0)}."""
    if (T.n, T.m) != (S.n, S.m):
        raise DimensionError("dotted_sum needs relations between the same spaces")
    if intersect(T.graph, S.graph).dim:
        raise PreconditionError("graphs intersect nontrivially; the direct sum is undefined")
    return LinearRelation(T.n, T.m, subspace_sum(T.graph, S.graph))


def orthogonality_residual(T, S):
    if T.graph.dim == 0 or S.graph.dim == 0:
        return 0.0
    return float(np.max(np.abs(T.graph.basis.conj().T @ S.graph.basis)))


def is_orthogonal(T, S):
    if (T.n, T.m) != (S.n, S.m):
        raise DimensionError("orthogonality compares relations between the same spaces")
    return orthogonality_residual(T, S) <= T.tol


def arens_decompose(T):
    """Split T into its operator part T_s and pure multivalued part {0} x T(0)."""
    M = T.mulpart.basis
    inf_basis = np.vstack([np.zeros((T.n, M.shape[1]), M.dtype), M])
    T_inf = LinearRelation(T.n, T.m, Subspace(T.n + T.m, inf_basis, T.tol, T.field))
    B = T.graph.basis
    if M.shape[1] == 0:
        return T, T_inf
    C = null_basis(inf_basis.conj().T @ B, T.tol)
    T_s = LinearRelation(T.n, T.m, Subspace(T.n + T.m, range_basis(B @ C, T.tol), T.tol, T.field))
    return T_s, T_inf


@dataclass(frozen=True, eq=False)
class InducedOperator:
    """Single-valued operator induced by a relation, in coordinates of D(T).

    ``map_matrix @ c`` is the image of ``domain_basis @ c``.  For the quotient
    (``"tilde"``) variant the same columns are read as the representatives of
    the classes in Y/T(0) that lie in T(0)^perp.
    """

    domain_basis: np.ndarray
    map_matrix: np.ndarray
    mulpart_basis: np.ndarray
    tag: str
    tol: float = DEFAULT_TOL

    @property
    def n(self):
        return self.domain_basis.shape[0]

    @property
    def m(self):
        return self.map_matrix.shape[0]

    @property
    def compression(self):
        """D^H A; only meaningful when n == m."""
        return self.domain_basis.conj().T @ self.map_matrix

    def apply(self, x):
        c = self.domain_basis.conj().T @ np.asarray(x)
        return self.map_matrix @ c

    def norm(self):
        if self.map_matrix.shape[1] == 0:
            return 0.0
        return float(np.linalg.norm(self.map_matrix, 2))

    def as_relation(self):
        field = field_of(self.domain_basis, self.map_matrix)
        return graph_of_parts(self.domain_basis, self.map_matrix, self.tol, field)


def graph_of_parts(D, A, tol=DEFAULT_TOL, field=None):
    n, m = D.shape[0], A.shape[0]
    field = field or field_of(D, A)
    if D.shape[1] == 0:
        return zero_relation(n, m, tol, field)
    return _relation(n, m, np.vstack([D, A]), tol, field)


def induced_hat(T):
    """Operator part obtained by projecting T(x) onto T(0)^perp."""
    return InducedOperator(T.domain.basis, T.hat_matrix, T.mulpart.basis, "hat", T.tol)


def induced_tilde(T):
    """Quotient-valued operator x -> [y], carried onto T(0)^perp isometrically."""
    return InducedOperator(T.domain.basis, T.hat_matrix, T.mulpart.basis, "tilde", T.tol)


def induced_arens(T):
    """Arens operator part T_s, built from its own graph."""
    T_s, _ = arens_decompose(T)
    return InducedOperator(T_s.domain.basis, T_s.hat_matrix, T.mulpart.basis, "arens", T.tol)


def compress_to_domain(T):
    """Relation on K^d x K^d, d = dim D(T), given by the compression D^H T_s D.

    This treats D(T) as the whole space: the part of T(x) leaving D(T) is
    dropped along with T(0).
    """
    D = T.domain.basis
    d = D.shape[1]
    if d == 0:
        return zero_relation(0, 0, T.tol, T.field)
    return graph_of(D.conj().T @ T.hat_matrix, tol=T.tol, field=T.field)


def quotient_rep(T, y):
    """The element of T(0)^perp representing the class [y] in Y/T(0)."""
    M = T.mulpart.basis
    y = np.asarray(y)
    return y - M @ (M.conj().T @ y)
