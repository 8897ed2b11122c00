"""Norms, Hermitian bounds, numerical radius and relative bounds of relations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionError, DomainError, PreconditionError
from .relation import (
    LinearRelation,
    _domain_vec,
    arens_decompose,
    induced_arens,
    induced_hat,
    induced_tilde,
    quotient_rep,
    relation_sum,
)
from .subspace import distance

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def _inner(u, v):
    # linear in the first argument
    return np.vdot(v, u)


# --- point and relation norms ---------------------------------------------

def point_norm(T, x):
    """||T(x)||, computed as the length of the operator-part image of x."""
    x = _domain_vec(T, x)
    return float(np.linalg.norm(T.hat_matrix @ (T.domain.basis.conj().T @ x)))


def quotient_norm(T, y):
    """||[y]|| in Y/T(0), i.e. the distance from y to T(0)."""
    return distance(T.mulpart, y)


@dataclass
class NormReport:
    relation_norm: float
    achieved_at: np.ndarray
    sigma_values: np.ndarray
    empty_domain: bool = False

    def to_dict(self):
        return {
            "relation_norm": self.relation_norm,
            "sigma_values": [float(s) for s in self.sigma_values],
            "empty_domain": self.empty_domain,
        }


def relation_norm(T):
    """sup of ||T(x)|| over unit x in D(T); 0 (flagged) when D(T) = {0}."""
    A = T.hat_matrix
    D = T.domain.basis
    if A.shape[1] == 0:
        return NormReport(0.0, np.zeros(T.n, D.dtype), np.zeros(0), empty_domain=True)
    _, s, Vh = np.linalg.svd(A)
    return NormReport(float(s[0]), D @ Vh[0].conj(), s)


def graph_norm(T, x):
    x = _domain_vec(T, x)
    return float(np.linalg.norm(x)) + point_norm(T, x)


def graph_inner(T, x1, x2):
    """<x1, x2> + <[y1], [y2]> with the quotient inner product."""
    x1, x2 = _domain_vec(T, x1), _domain_vec(T, x2)
    D, A = T.domain.basis, T.hat_matrix
    t1, t2 = A @ (D.conj().T @ x1), A @ (D.conj().T @ x2)
    return complex(_inner(x1, x2) + _inner(t1, t2))


def graph_inner_from_reps(T, x1, y1, x2, y2):
    """Same quantity from arbitrary representatives y1 in T(x1), y2 in T(x2)."""
    return complex(_inner(x1, x2) + _inner(quotient_rep(T, y1), quotient_rep(T, y2)))


# --- Hermitian relations ----------------------------------------------------

def _square(T):
    if T.n != T.m:
        raise DimensionError(f"relation is not in X^2 (n={T.n}, m={T.m})")


def hermitian_residual(T):
    """max |<y_j, x_i> - <x_j, y_i>| over graph basis pairs, scaled to unit size."""
    _square(T)
    if T.graph.dim == 0:
        return 0.0
    G = T.X.conj().T @ T.Y
    return float(np.max(np.abs(G - G.conj().T)) / max(1.0, np.linalg.norm(G, 2)))


def is_hermitian(T):
    return hermitian_residual(T) <= T.tol


CLASSES = ("positive", "negative", "nonneg", "nonpos", "indefinite", "none")


def classify(eigs, band):
    """Definiteness class; eigenvalues within ``band`` of 0 count as boundary."""
    if len(eigs) == 0:
        return "none"
    lo, hi = float(np.min(eigs)), float(np.max(eigs))
    if lo > band:
        return "positive"
    if hi < -band:
        return "negative"
    if lo >= -band:
        return "nonneg"
    if hi <= band:
        return "nonpos"
    return "indefinite"


@dataclass
class HermitianReport:
    is_hermitian: bool
    lower_bound: float
    upper_bound: float
    klass: str
    compression_eigs: list
    empty_domain: bool = False

    def to_dict(self):
        return {
            "is_hermitian": self.is_hermitian,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "class": self.klass,
            "compression_eigs": list(self.compression_eigs),
            "empty_domain": self.empty_domain,
        }


def compression(T, route="hat"):
    """Matrix of x -> <T_s x, x> style forms in coordinates of D(T).

    ``route`` picks which induced operator feeds the form: the projected
    operator part ("hat"), the quotient operator paired with [x] ("tilde"),
    or the Arens part built from its own graph ("arens").
    """
    _square(T)
    if route == "hat":
        op = induced_hat(T)
        return op.domain_basis.conj().T @ op.map_matrix
    if route == "tilde":
        op = induced_tilde(T)
        # <T~x, [x]> = <P x, rep>, with [x] carried to T(0)^perp as P x
        Px = quotient_rep(T, op.domain_basis)
        return Px.conj().T @ op.map_matrix
    if route == "arens":
        op = induced_arens(T)
        # express in the domain coordinates of T itself
        D = T.domain.basis
        W = op.domain_basis.conj().T @ D
        return D.conj().T @ op.map_matrix @ W
    raise ValueError(f"unknown route {route!r}")


def hermitian_report(T, route="hat"):
    if not is_hermitian(T):
        raise PreconditionError("relation is not Hermitian")
    M = compression(T, route)
    if M.shape[0] == 0:
        return HermitianReport(True, 0.0, 0.0, "none", [], empty_domain=True)
    H = (M + M.conj().T) / 2
    eigs = np.linalg.eigvalsh(H)
    band = T.tol * max(1.0, float(np.linalg.norm(M, 2)))
    return HermitianReport(True, float(eigs[0]), float(eigs[-1]), classify(eigs, band),
                           [float(e) for e in eigs])


# --- numerical radius -------------------------------------------------------

def _lam_max(M, theta):
    z = np.exp(1j * theta)
    return float(np.linalg.eigvalsh((z * M + np.conj(z) * M.conj().T) / 2)[-1])


def numerical_radius(M, grid=64, xtol=1e-10, refine=4):
    """w(M) = max over theta of lambda_max(Re(e^{i theta} M)).

    A uniform theta grid locates candidate peaks, each then polished by
    golden-section search on its bracketing grid cell.
    """
    M = np.asarray(M, dtype=np.complex128)
    if M.size == 0:
        return 0.0
    thetas = 2 * np.pi * np.arange(grid) / grid
    vals = np.array([_lam_max(M, t) for t in thetas])
    peaks = [k for k in range(grid) if vals[k] >= vals[k - 1] and vals[k] >= vals[(k + 1) % grid]]
    peaks = sorted(peaks, key=lambda k: -vals[k])[:refine]
    best = float(vals.max())
    h = 2 * np.pi / grid
    f = lambda t: _lam_max(M, t)
    for k in peaks:
        a, b = thetas[k] - h, thetas[k] + h
        c, d = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
        fc, fd = f(c), f(d)
        while b - a > xtol:
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - GOLDEN * (b - a)
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + GOLDEN * (b - a)
                fd = f(d)
        best = max(best, fc, fd)
    return best


def c_constant(T, route="hat"):
    """sup |<x, T_s x>| over unit x in D(T), via the numerical radius.

    Real relations are treated as complex ones.
    """
    return numerical_radius(compression(T, route))


# --- relative bounds --------------------------------------------------------

def _restricted_ops(T, S):
    """Matrices B, C with ||S(x)|| = |B c|, ||T(x)|| = |C c| for x = D_T c."""
    if T.n != S.n:
        raise DimensionError("T and S must share the space X")
    if not S.domain.contains_subspace(T.domain):
        raise PreconditionError("D(T) is not contained in D(S)")
    DT = T.domain.basis
    B = S.hat_matrix @ (S.domain.basis.conj().T @ DT)
    return B, T.hat_matrix, DT


def _unit_rows(Z):
    nrm = np.linalg.norm(Z, axis=-1, keepdims=True)
    return Z / np.where(nrm > 0, nrm, 1.0)


def _sphere_samples(rng, count, d, complex_):
    Z = rng.standard_normal((count, d))
    if complex_:
        Z = Z + 1j * rng.standard_normal((count, d))
    return _unit_rows(Z)


def _objective(B, C, bs, Z):
    """h_k(z) = |B z| - b_k |C z| for every b_k and every row z of Z; shape (len(bs), rows)."""
    nb = np.linalg.norm(Z @ B.T, axis=-1)
    nc = np.linalg.norm(Z @ C.T, axis=-1)
    return nb[None, :] - np.asarray(bs)[:, None] * nc[None, :]


def _rownorm(W):
    return np.sqrt(np.sum((W * W.conj()).real, axis=-1))


def _ascend(B, C, bs, Z0, iters=400):
    """Projected gradient ascent of h_b on the unit sphere, batched over (b, start)."""
    Z = Z0.copy()
    Bc, Cc = B.conj(), C.conj()
    bcol = bs[:, None]
    ZB, ZC = Z @ B.T, Z @ C.T
    nb, nc = _rownorm(ZB), _rownorm(ZC)
    f = nb - bcol * nc
    step = np.full(f.shape, 0.5)
    stall = 0
    for _ in range(iters):
        # gradient of |Bz| - b|Cz| with the radial component removed
        g = (ZB @ Bc) / np.where(nb > 1e-300, nb, np.inf)[..., None]
        g = g - bs[:, None, None] * (ZC @ Cc) / np.where(nc > 1e-300, nc, np.inf)[..., None]
        g = g - np.sum(Z.conj() * g, axis=-1, keepdims=True).real * Z
        Zn = Z + step[..., None] * g
        Zn = Zn / _rownorm(Zn)[..., None]
        ZBn, ZCn = Zn @ B.T, Zn @ C.T
        nbn, ncn = _rownorm(ZBn), _rownorm(ZCn)
        fn = nbn - bcol * ncn
        ok = fn > f
        gain = float(np.max(np.where(ok, fn - f, 0.0)))
        stall = stall + 1 if gain < 1e-14 else 0
        k = ok[..., None]
        Z, ZB, ZC = np.where(k, Zn, Z), np.where(k, ZBn, ZB), np.where(k, ZCn, ZC)
        nb, nc, f = np.where(ok, nbn, nb), np.where(ok, ncn, nc), np.where(ok, fn, f)
        step = np.where(ok, np.minimum(step * 1.5, 4.0), step * 0.5)
        if stall >= 25 or np.all(step < 1e-14):
            break
    return Z, f


def _candidates(B, C, d, dtype):
    """Deterministic structured starts: singular vectors and null(C) maximizers."""
    cands = []
    for Mtx in (B, C):
        if Mtx.shape[0]:
            _, _, Vh = np.linalg.svd(Mtx)
            cands.extend(Vh.conj())
    if C.shape[0]:
        _, s, Vh = np.linalg.svd(C, full_matrices=True)
        r = int(np.sum(s > 1e-12 * max(1.0, s[0] if s.size else 0.0)))
        N = Vh[r:].conj().T
        if N.shape[1] and B.shape[0]:
            _, _, Wh = np.linalg.svd(B @ N)
            cands.append(N @ Wh[0].conj())
    if not cands:
        return np.zeros((0, d), dtype)
    return _unit_rows(np.array(cands, dtype=dtype))


def _maximize(B, C, bs, seed=0, samples=2000, starts=20, complex_=True):
    """Approximate max over the unit sphere of |Bz| - b|Cz| for each b in ``bs``.

    Every b is finally evaluated on the union of all points found, so the
    returned maxima are non-increasing in b whenever ``bs`` is increasing.
    """
    d = B.shape[1]
    bs = np.atleast_1d(np.asarray(bs, dtype=float))
    if d == 0:
        return np.zeros(len(bs)), np.zeros((len(bs), 0))
    dtype = np.complex128 if complex_ else np.float64
    rng = np.random.default_rng(seed)
    P = _sphere_samples(rng, samples, d, complex_)
    P = np.vstack([P, _candidates(B, C, d, dtype)])
    vals = _objective(B, C, bs, P)
    k = min(starts, P.shape[0])
    top = np.argsort(-vals, axis=1)[:, :k]
    Z0 = P[top]
    extra = _candidates(B, C, d, dtype)
    if extra.shape[0]:
        Z0 = np.concatenate([Z0, np.broadcast_to(extra, (len(bs),) + extra.shape)], axis=1)
    Z, _ = _ascend(B, C, bs, Z0)
    pool = np.vstack([P, Z.reshape(-1, d)])
    allv = _objective(B, C, bs, pool)
    idx = np.argmax(allv, axis=1)
    return allv[np.arange(len(bs)), idx], pool[idx]


def _complex_pair(T, S):
    return T.field == "complex" or S.field == "complex"


def t_bound_verdicts(T, S, ab_pairs, seed=0, atol=1e-9):
    """Verdicts for several (a, b) pairs from one batched maximization.

    Each entry is ``(feasible, witness_x, worst)`` where ``worst`` is the
    largest found value of ||S(x)|| - a - b||T(x)|| over unit x in D(T).
    """
    for a, b in ab_pairs:
        if a < 0 or b < 0:
            raise PreconditionError("a and b must be nonnegative")
    B, C, DT = _restricted_ops(T, S)
    bs = sorted({float(b) for _, b in ab_pairs})
    vals, Z = _maximize(B, C, bs, seed, complex_=_complex_pair(T, S))
    normB = float(np.linalg.norm(B, 2)) if B.size else 0.0
    out = []
    for a, b in ab_pairs:
        k = bs.index(float(b))
        worst = float(vals[k] - a)
        witness = DT @ Z[k] if Z.shape[1] else np.zeros(T.n, DT.dtype)
        out.append((worst <= atol * max(1.0, normB, a), witness, worst))
    return out


def t_bound_feasible(T, S, a, b, seed=0, atol=1e-9):
    """Whether ||S(x)|| <= a||x|| + b||T(x)|| on D(T); returns (verdict, witness x, worst)."""
    return t_bound_verdicts(T, S, [(a, b)], seed, atol)[0]


@dataclass
class RelBoundReport:
    feasible_pairs: list
    b_grid: list
    min_a_given_b: list
    t_bound_estimate: float
    certificate: list
    certified_a: float
    s_norm: float
    induced_pair_agrees: Optional[bool] = None
    empty_domain: bool = False

    def to_dict(self):
        return {
            "b_grid": self.b_grid,
            "min_a_given_b": self.min_a_given_b,
            "t_bound_estimate": self.t_bound_estimate,
            "certified_a": self.certified_a,
            "s_norm": self.s_norm,
            "feasible_pairs": [[a, b, v] for a, b, v in self.feasible_pairs],
            "induced_pair_agrees": self.induced_pair_agrees,
            "empty_domain": self.empty_domain,
        }


B_GRID = [round(0.1 * k, 1) for k in range(21)]


def min_a_curve(T, S, b_grid=B_GRID, seed=0):
    """Smallest admissible a for each b (heuristic from below, clipped at 0)."""
    B, C, DT = _restricted_ops(T, S)
    vals, Z = _maximize(B, C, b_grid, seed, complex_=_complex_pair(T, S))
    a = np.maximum(vals, 0.0)
    wit = [DT @ z for z in Z] if Z.shape[1] else [np.zeros(T.n) for _ in b_grid]
    return a, wit, B


def probe_pairs(a_curve, b_grid, certified):
    """(a, b) pairs on both sides of the sampled curve, plus the certified bound."""
    pairs = [(certified, 0.0)]
    for a, b in zip(a_curve, b_grid):
        pairs.append((float(a) * 1.01 + 1e-6, float(b)))
        if a > 1e-6:
            pairs.append((float(a) * 0.9, float(b)))
    return pairs


def rel_bound_report(T, S, b_grid=B_GRID, seed=0, check_induced=True):
    a_curve, wit, B = min_a_curve(T, S, b_grid, seed)
    certified = float(np.linalg.norm(B, 2)) if B.size else 0.0
    pairs = probe_pairs(a_curve, b_grid, certified)
    verdicts = t_bound_verdicts(T, S, pairs, seed)
    agrees = None
    if check_induced:
        agrees = induced_verdicts_agree(T, S, pairs, seed, verdicts)
    finite = [b for b, a in zip(b_grid, a_curve) if np.isfinite(a)]
    return RelBoundReport(
        feasible_pairs=[(a, b, v[0]) for (a, b), v in zip(pairs, verdicts)],
        b_grid=list(b_grid),
        min_a_given_b=[float(a) for a in a_curve],
        t_bound_estimate=float(min(finite)) if finite else float("inf"),
        certificate=wit,
        certified_a=certified,
        s_norm=relation_norm(S).relation_norm,
        induced_pair_agrees=agrees,
        empty_domain=T.domain.dim == 0,
    )


def induced_verdicts_agree(T, S, ab_pairs, seed=0, verdicts=None):
    """Compare (a, b) verdicts for (T, S) and for the graphs of their operator parts."""
    That = induced_hat(T).as_relation()
    Shat = induced_hat(S).as_relation()
    if verdicts is None:
        verdicts = t_bound_verdicts(T, S, ab_pairs, seed)
    other = t_bound_verdicts(That, Shat, ab_pairs, seed)
    return all(v[0] == w[0] for v, w in zip(verdicts, other))


@dataclass
class SumInequalityReport:
    a: float
    b: float
    worst_sum_upper: float
    worst_sum_lower: float
    mulpart_residual: float
    samples: int
    witness: np.ndarray = field(repr=False, default=None)

    @property
    def worst(self):
        return max(self.worst_sum_upper, self.worst_sum_lower, self.mulpart_residual)

    def to_dict(self):
        return {"a": self.a, "b": self.b, "worst_sum_upper": self.worst_sum_upper, "worst_sum_lower": self.worst_sum_lower,
                "mulpart_residual": self.mulpart_residual, "samples": self.samples}


def verify_sum_inequalities(T, S, a=None, b=None, samples=500, seed=0):
    """Check the perturbation inequalities for T + S on sampled unit x in D(T).

    Residuals are positive when violated and scaled by ``max(1, a + (1+b)||T||)``.
    """
    if not S.domain.contains_subspace(T.domain):
        raise PreconditionError("D(T) is not contained in D(S)")
    if not T.mulpart.contains_subspace(S.mulpart):
        raise PreconditionError("S(0) is not contained in T(0)")
    if b is None:
        b = 0.5
    if not 0 <= b < 1:
        raise PreconditionError("relative bound b must satisfy 0 <= b < 1")
    if a is None:
        a_curve, _, _ = min_a_curve(T, S, [b], seed)
        a = float(a_curve[0]) * (1 + 1e-9) + 1e-12
    else:
        ok, _, _ = t_bound_feasible(T, S, a, b, seed)
        if not ok:
            raise PreconditionError(f"(a, b) = ({a}, {b}) is not a relative bound of S")
    U = relation_sum(T, S)
    DT = T.domain.basis
    rng = np.random.default_rng(seed)
    d = DT.shape[1]
    Z = _sphere_samples(rng, samples, d, T.field == "complex") if d else np.zeros((0, 0))
    AT = T.hat_matrix
    # coordinates of D(T) inside D(T + S) (equal subspaces, different bases)
    AU = U.hat_matrix @ (U.domain.basis.conj().T @ DT)
    nT = np.linalg.norm(Z @ AT.T, axis=1) if d else np.zeros(0)
    nU = np.linalg.norm(Z @ AU.T, axis=1) if d else np.zeros(0)
    scale = max(1.0, a + (1 + b) * relation_norm(T).relation_norm)
    r_upper = (nU - (a + (b + 1) * nT)) / scale
    r_lower = (nT - (a + nU) / (1 - b)) / scale
    worst_upper = float(r_upper.max()) if d else 0.0
    worst_lower = float(r_lower.max()) if d else 0.0
    wit = DT @ Z[int(np.argmax(np.maximum(r_upper, r_lower)))] if d else np.zeros(T.n)
    return SumInequalityReport(
        a=float(a), b=float(b), worst_sum_upper=worst_upper, worst_sum_lower=worst_lower,
        mulpart_residual=U.mulpart.residual(T.mulpart),
        samples=samples, witness=wit,
    )
