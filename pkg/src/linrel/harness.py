"""Random relation generators and the property verification suites.

Each suite is a pair of functions: ``make`` draws a random case (relations
plus parameters) from a per-trial generator, and ``check`` turns a case into
a signed residual, positive when a statement is violated.  Cases are plain
data, so a failing one can be serialized and replayed through ``check``.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import asdict, dataclass
from dataclasses import field as dc_field

import numpy as np

from . import io as rio
from .errors import GeneratorError, LinRelError, PreconditionError
from .norms import (
    c_constant,
    hermitian_report,
    induced_verdicts_agree,
    is_hermitian,
    min_a_curve,
    point_norm,
    probe_pairs,
    quotient_norm,
    rel_bound_report,
    relation_norm,
    t_bound_feasible,
    t_bound_verdicts,
    verify_sum_inequalities,
)
from .relation import (
    arens_decompose,
    dotted_sum,
    from_parts,
    graph_of,
    induced_hat,
    induced_tilde,
    orthogonality_residual,
    quotient_rep,
    relation_diff,
    relation_sum,
    representative,
    scalar_mul,
)
from .subspace import (
    DEFAULT_TOL,
    Subspace,
    complement,
    distance,
    intersect,
    project_many,
    random_matrix,
    random_subspace,
)

MAX_DIM = 8


# --- generators -------------------------------------------------------------

def _pick(rng, lo, hi, what):
    if lo > hi:
        raise GeneratorError(f"no feasible {what}: need {lo} <= dim <= {hi}")
    return int(rng.integers(lo, hi + 1))


def gen_relation(rng, n, m, field="complex", *, dim_graph=None, dim_domain=None,
                 dim_mulpart=None, hermitian=False, range_in_domain=False,
                 full_domain=False, domain_within=None, domain_contains=None,
                 mulpart_within=None, mulpart_contains=None, tol=DEFAULT_TOL):
    """Random relation in K^n x K^m meeting every requested constraint by construction.

    Hermitian relations take a domain D, a multivalued part inside D^perp and
    a map whose D-compression is Hermitian.  ``range_in_domain`` additionally
    keeps the operator part inside D.
    """
    if n < 0 or m < 0:
        raise GeneratorError("dimensions must be nonnegative")
    if dim_mulpart is not None and dim_mulpart > m:
        raise GeneratorError(f"dim T(0) = {dim_mulpart} exceeds m = {m}")
    if dim_domain is not None and dim_domain > n:
        raise GeneratorError(f"dim D(T) = {dim_domain} exceeds n = {n}")
    if dim_graph is not None and not 0 <= dim_graph <= n + m:
        raise GeneratorError(f"dim graph = {dim_graph} is outside [0, {n + m}]")
    if hermitian and n != m:
        raise GeneratorError("Hermitian relations need n == m")
    if hermitian and (mulpart_within is not None or mulpart_contains is not None):
        raise GeneratorError("Hermitian generation does not take multivalued-part constraints")
    if full_domain:
        dim_domain = n

    d_lo = domain_contains.dim if domain_contains is not None else 0
    d_hi = domain_within.dim if domain_within is not None else n
    p_lo = mulpart_contains.dim if mulpart_contains is not None else 0
    p_hi = mulpart_within.dim if mulpart_within is not None else m

    if dim_graph is not None:
        if dim_domain is None and dim_mulpart is None:
            lo = max(d_lo, dim_graph - p_hi)
            hi = min(d_hi, dim_graph - p_lo)
            if hermitian:
                hi = min(hi, dim_graph, n - 0)
                # dim D + dim T(0) <= n since T(0) lies in D^perp
                if dim_graph > n:
                    raise GeneratorError("a Hermitian graph has dimension at most n")
            dim_domain = _pick(rng, lo, hi, "domain dimension")
        if dim_domain is None:
            dim_domain = dim_graph - dim_mulpart
        if dim_mulpart is None:
            dim_mulpart = dim_graph - dim_domain
        if dim_domain + dim_mulpart != dim_graph or dim_domain < 0 or dim_mulpart < 0:
            raise GeneratorError("dim_graph must equal dim_domain + dim_mulpart")
    if dim_domain is None:
        if hermitian and dim_mulpart is not None:
            # T(0) sits in D^perp, so leave room for it
            d_hi = min(d_hi, n - dim_mulpart)
        dim_domain = _pick(rng, d_lo, d_hi, "domain dimension")
    if not d_lo <= dim_domain <= d_hi:
        raise GeneratorError(f"dim D(T) = {dim_domain} violates the domain constraints")
    if hermitian:
        p_hi = min(p_hi, n - dim_domain)
    if dim_mulpart is None:
        dim_mulpart = _pick(rng, p_lo, p_hi, "multivalued-part dimension")
    if not p_lo <= dim_mulpart <= p_hi:
        raise GeneratorError(f"dim T(0) = {dim_mulpart} violates the constraints")

    D = random_subspace(rng, n, dim_domain, field, within=domain_within, containing=domain_contains)
    if hermitian:
        M = random_subspace(rng, m, dim_mulpart, field, within=complement(D))
        H = random_matrix(rng, dim_domain, dim_domain, field)
        H = (H + H.conj().T) / 2
        A = D.basis @ H
        if not range_in_domain:
            W = random_matrix(rng, m, dim_domain, field)
            W = W - project_many(D, W)
            A = A + W
    else:
        M = random_subspace(rng, m, dim_mulpart, field, within=mulpart_within, containing=mulpart_contains)
        A = random_matrix(rng, m, n, field) @ D.basis
    return from_parts(D.basis, A, M.basis, tol, field)


def nilpotent_shift(n=2, field="complex"):
    """Graph of e2 -> e1 on K^n: numerical radius 1/2, norm 1."""
    J = np.zeros((n, n))
    J[0, 1] = 1.0
    return graph_of(J, field=field)


# --- helpers ----------------------------------------------------------------

def _unit_in(rng, E, field):
    if E.dim == 0:
        return np.zeros(E.ambient_dim, E.basis.dtype)
    c = random_matrix(rng, E.dim, 1, field)[:, 0]
    return E.basis @ (c / np.linalg.norm(c))


def _field_scalar(rng, field, zero_prob=0.1):
    if rng.random() < zero_prob:
        return 0.0
    z = rng.standard_normal() * 2
    if field == "complex":
        z = complex(z, rng.standard_normal() * 2)
    return z


def _square_dims(n, m):
    return n, n


def _subspace_gap(E, F):
    return E.residual(F)


def _ip(u, v):
    return np.vdot(v, u)


def _scale(*vals):
    return max(1.0, *[abs(v) for v in vals])


# --- suites -----------------------------------------------------------------

def _make_single(rng, n, m, field):
    return {"relations": {"T": gen_relation(rng, n, m, field)},
            "params": {"check_seed": int(rng.integers(2**32))}}


def check_arens(case):
    T = case["relations"]["T"]
    T_s, T_inf = arens_decompose(T)
    try:
        recon = dotted_sum(T_s, T_inf).graph.residual(T.graph)
    except PreconditionError:
        recon = 1.0
    M = T.mulpart.basis
    R = T_s.range.basis
    range_perp = float(np.max(np.abs(M.conj().T @ R))) if M.size and R.size else 0.0
    parts = {
        "reconstruction": recon,
        "orthogonality": orthogonality_residual(T_s, T_inf),
        "domain": T_s.domain.residual(T.domain),
        "range_perp_mulpart": range_perp,
        "single_valued": float(T_s.mulpart.dim),
        "pure_part": max(T_inf.mulpart.residual(T.mulpart), float(T_inf.domain.dim)),
    }
    return max(parts.values()), parts


def check_induced_parts(case):
    T = case["relations"]["T"]
    rng = np.random.default_rng(case["params"]["check_seed"])
    hat, tilde = induced_hat(T), induced_tilde(T)
    T_s, _ = arens_decompose(T)
    G = hat.as_relation()
    norm_T = relation_norm(T).relation_norm
    scale = _scale(norm_T)
    parts = {
        # operator part equals the Arens part; it lies inside T
        "hat_equals_arens": G.graph.residual(T_s.graph),
        "hat_inside_T": float(np.linalg.norm(G.graph.basis - project_many(T.graph, G.graph.basis), 2)) if G.graph.dim else 0.0,
        "tilde_equals_hat": float(np.max(np.abs(tilde.map_matrix - hat.map_matrix))) if hat.map_matrix.size else 0.0,
        "norm_arens": abs(relation_norm(T_s).relation_norm - norm_T) / scale,
        "norm_hat": abs(relation_norm(G).relation_norm - norm_T) / scale,
    }
    worst = 0.0
    for _ in range(10):
        x = _unit_in(rng, T.domain, T.field)
        if T.domain.dim == 0:
            break
        coeffs = random_matrix(rng, T.mulpart.dim, 1, T.field)[:, 0] * 5
        y = representative(T, x, coeffs)
        # quotient distance of an arbitrary representative vs matrix action
        worst = max(worst, abs(quotient_norm(T, y) - point_norm(T, x)) / scale,
                    abs(point_norm(T_s, x) - point_norm(T, x)) / scale)
    parts["point_norms"] = worst
    return max(parts.values()), parts


def _make_norm_laws(rng, n, m, field):
    T = gen_relation(rng, n, m, field)
    common = random_subspace(rng, n, _pick(rng, min(1, T.domain.dim), T.domain.dim, "common"), field, within=T.domain)
    S = gen_relation(rng, n, m, field, domain_contains=common)
    return {"relations": {"T": T, "S": S},
            "params": {"check_seed": int(rng.integers(2**32)),
                       "alpha": _field_scalar(rng, field)}}


def _alpha(params):
    a = params["alpha"]
    return complex(*a) if isinstance(a, list) else a


def check_norm_laws(case):
    T, S = case["relations"]["T"], case["relations"]["S"]
    rng = np.random.default_rng(case["params"]["check_seed"])
    alpha = _alpha(case["params"])
    nT, nS = relation_norm(T), relation_norm(S)
    scale = _scale(nT.relation_norm + nS.relation_norm, abs(alpha) * nT.relation_norm)
    aT = scalar_mul(alpha, T)
    ST = relation_sum(S, T)
    parts = dict.fromkeys(["representative_distance", "scalar_point_norm", "sum_point_norm", "norm_is_supremum", "point_below_norm", "scalar_norm", "sum_norm"], 0.0)
    common = intersect(S.domain, T.domain)
    for _ in range(10):
        if T.domain.dim:
            x = _unit_in(rng, T.domain, T.field) * rng.uniform(0.5, 3)
            pn = point_norm(T, x)
            y0 = T.hat_matrix @ (T.domain.basis.conj().T @ x)
            for _ in range(10):
                coeffs = random_matrix(rng, T.mulpart.dim, 1, T.field)[:, 0] * rng.uniform(0, 10)
                y = representative(T, x, coeffs)
                # d(y, T(0)) = d(0, T(x)) = d(T(0), T(x)) = ||T(x)||
                parts["representative_distance"] = max(parts["representative_distance"], abs(distance(T.mulpart, y) - pn) / scale)
            parts["representative_distance"] = max(parts["representative_distance"], abs(np.linalg.norm(y0) - pn) / scale)
            parts["scalar_point_norm"] = max(parts["scalar_point_norm"], abs(point_norm(aT, x) - abs(alpha) * pn) / scale)
            parts["point_below_norm"] = max(parts["point_below_norm"], (pn - nT.relation_norm * np.linalg.norm(x)) / scale)
        if common.dim:
            x = _unit_in(rng, common, T.field)
            parts["sum_point_norm"] = max(parts["sum_point_norm"],
                                  (point_norm(ST, x) - point_norm(S, x) - point_norm(T, x)) / scale)
    if T.domain.dim:
        # brute-force supremum over sampled unit vectors, through quotient distances
        Z = random_matrix(rng, T.domain.dim, 2000, T.field)
        Z = T.domain.basis @ (Z / np.linalg.norm(Z, axis=0))
        reps = np.column_stack([representative(T, z) for z in Z.T])
        dists = np.linalg.norm(reps - project_many(T.mulpart, reps), axis=0)
        at = quotient_norm(T, representative(T, nT.achieved_at))
        parts["norm_is_supremum"] = max((dists.max() - nT.relation_norm) / scale,
                            abs(at - nT.relation_norm) / scale)
    parts["scalar_norm"] = abs(relation_norm(aT).relation_norm - abs(alpha) * nT.relation_norm) / scale
    parts["sum_norm"] = (relation_norm(ST).relation_norm - nS.relation_norm - nT.relation_norm) / scale
    return max(parts.values()), parts


BROKEN_PAIR_SEPARATION = 1e-6


def _make_difference_sum(rng, n, m, field, trial=0):
    # hypothesis-satisfying pair
    T = gen_relation(rng, n, m, field)
    S = gen_relation(rng, n, m, field, domain_within=T.domain, mulpart_contains=T.mulpart)
    # pair with exactly one hypothesis broken
    kind = "domain" if (trial % 2 == 0 and n > 0) or m == 0 else "mulpart"
    if kind == "domain":
        Tb = gen_relation(rng, n, m, field, dim_domain=_pick(rng, 0, n - 1, "domain"))
        Dout = random_subspace(rng, n, _pick(rng, 1, n, "domain"), field)
        Sb = gen_relation(rng, n, m, field, domain_contains=Dout, mulpart_contains=Tb.mulpart)
    else:
        Tb = gen_relation(rng, n, m, field, dim_mulpart=_pick(rng, 1, m, "mulpart"))
        Sb = gen_relation(rng, n, m, field, domain_within=Tb.domain,
                          dim_mulpart=_pick(rng, 0, m - 1, "mulpart"))
    return {"relations": {"T": T, "S": S, "T_broken": Tb, "S_broken": Sb},
            "params": {"broken": kind}}


def _difference_sum_gap(S, T):
    return relation_sum(relation_diff(S, T), T).graph.residual(S.graph)


def check_difference_sum(case):
    R = case["relations"]
    pos = _difference_sum_gap(R["S"], R["T"])
    neg = _difference_sum_gap(R["S_broken"], R["T_broken"])
    parts = {"positive_gap": pos, "negative_gap": neg,
             "negative_violation": BROKEN_PAIR_SEPARATION - neg}
    return max(pos, BROKEN_PAIR_SEPARATION - neg), parts


def _make_difference_pair(rng, n, m, field):
    T = gen_relation(rng, n, m, field)
    S = gen_relation(rng, n, m, field, domain_within=T.domain, mulpart_contains=T.mulpart)
    return {"relations": {"T": T, "S": S}, "params": {"check_seed": int(rng.integers(2**32))}}


def check_difference_norms(case):
    T, S = case["relations"]["T"], case["relations"]["S"]
    rng = np.random.default_rng(case["params"]["check_seed"])
    D = relation_diff(S, T)
    nS, nT, nD = (relation_norm(R).relation_norm for R in (S, T, D))
    scale = _scale(nS + nT)
    parts = {"difference_point_norm": 0.0, "difference_norm": (nS - nT - nD) / scale, "distance_chain": 0.0}
    for _ in range(20):
        if S.domain.dim == 0:
            break
        x = _unit_in(rng, S.domain, S.field) * rng.uniform(0.5, 3)
        pS, pT, pD = point_norm(S, x), point_norm(T, x), point_norm(D, x)
        parts["difference_point_norm"] = max(parts["difference_point_norm"], (pS - pT - pD) / scale)
        y1 = representative(S, x, random_matrix(rng, S.mulpart.dim, 1, S.field)[:, 0] * 3)
        y2 = representative(T, x, random_matrix(rng, T.mulpart.dim, 1, T.field)[:, 0] * 3)
        l1 = distance(D.mulpart, y1 - y2)
        l2 = distance(S.mulpart, y1 - y2)
        l3 = distance(S.mulpart, y1) - distance(S.mulpart, y2)
        l4 = distance(S.mulpart, y1) - distance(T.mulpart, y2)
        chain = max(abs(pD - l1), abs(l1 - l2), l3 - l2, l4 - l3, abs(l4 - (pS - pT)))
        parts["distance_chain"] = max(parts["distance_chain"], chain / scale)
    return max(parts.values()), parts


def _make_hermitian(rng, n, m, field, range_in_domain=False):
    n, _ = _square_dims(n, m)
    T = gen_relation(rng, n, n, field, hermitian=True, range_in_domain=range_in_domain)
    return {"relations": {"T": T}, "params": {"check_seed": int(rng.integers(2**32))}}


def _graph_pairs(rng, T, count):
    B = T.graph.basis
    C = random_matrix(rng, B.shape[1], count, T.field)
    P = B @ C
    return P[: T.n].T, P[T.n :].T


def check_hermitian_structure(case):
    T = case["relations"]["T"]
    rng = np.random.default_rng(case["params"]["check_seed"])
    scale = _scale(relation_norm(T).relation_norm)
    D, M = T.domain.basis, T.mulpart.basis
    hat = induced_hat(T)
    parts = {
        "hermitian": 0.0 if is_hermitian(T) else 1.0,
        "domain_perp_mulpart": float(np.max(np.abs(M.conj().T @ D))) if M.size and D.size else 0.0,
        "form_symmetry_reps": 0.0,
        "form_symmetry_hat": 0.0,
    }
    if T.graph.dim:
        xs, ys = _graph_pairs(rng, T, 12)
        nrm = max(1.0, float(np.max(np.linalg.norm(xs, axis=1))), float(np.max(np.linalg.norm(ys, axis=1))))
        for i in range(len(xs) - 1):
            x1, y1, x2, y2 = xs[i], ys[i], xs[i + 1], ys[i + 1]
            hx1, hx2 = hat.apply(x1), hat.apply(x2)
            a = _ip(hx2, x1)
            b = _ip(y2, x1)
            c = _ip(quotient_rep(T, y2), quotient_rep(T, x1))
            parts["form_symmetry_reps"] = max(parts["form_symmetry_reps"], abs(a - b) / (scale * nrm**2), abs(c - a) / (scale * nrm**2))
            parts["form_symmetry_hat"] = max(parts["form_symmetry_hat"], abs(a - _ip(x2, hx1)) / (scale * nrm**2))
    ch, ct, ca = c_constant(T, "hat"), c_constant(T, "tilde"), c_constant(T, "arens")
    parts["c_hat_vs_tilde"] = abs(ch - ct) / scale
    parts["c_hat_vs_arens"] = abs(ch - ca) / scale
    return max(parts.values()), parts


def _make_radius(rng, n, m, field, trial=0):
    n, _ = _square_dims(n, m)
    if trial == 0 and n >= 2:
        T = nilpotent_shift(n, "complex")
        return {"relations": {"T": T}, "params": {"fixture": True}}
    T = gen_relation(rng, n, n, "complex", full_domain=True)
    return {"relations": {"T": T}, "params": {"fixture": False}}


def check_radius_bound(case):
    T = case["relations"]["T"]
    nT = relation_norm(T).relation_norm
    C = c_constant(T)
    gap = (nT - 2 * C) / _scale(nT)
    parts = {"norm": nT, "c_constant": C, "gap": gap}
    if case["params"].get("fixture"):
        return abs(gap), parts
    return gap, parts


def check_hermitian_bounds(case):
    T = case["relations"]["T"]
    rng = np.random.default_rng(case["params"]["check_seed"])
    rep = hermitian_report(T)
    scale = _scale(rep.lower_bound, rep.upper_bound)
    reports = {
        "tilde": hermitian_report(T, "tilde"),
        "arens": hermitian_report(T, "arens"),
        "hat_graph": hermitian_report(induced_hat(T).as_relation()),
        "arens_graph": hermitian_report(arens_decompose(T)[0]),
    }
    parts = {}
    for k, r in reports.items():
        parts[k] = max(abs(r.lower_bound - rep.lower_bound), abs(r.upper_bound - rep.upper_bound)) / scale
        if r.klass != rep.klass:
            parts[k] = 1.0
    # brute force on T itself: <y, x> over representatives stays within the bounds
    worst, lo_seen, hi_seen = 0.0, np.inf, -np.inf
    if T.domain.dim:
        for _ in range(200):
            x = _unit_in(rng, T.domain, T.field)
            y = representative(T, x, random_matrix(rng, T.mulpart.dim, 1, T.field)[:, 0] * 3)
            v = _ip(y, x)
            lo_seen, hi_seen = min(lo_seen, v.real), max(hi_seen, v.real)
            worst = max(worst, abs(v.imag) / scale, (rep.lower_bound - v.real) / scale,
                        (v.real - rep.upper_bound) / scale)
        # bounds are attained at extremal eigenvectors of the compression
        M = T.domain.basis.conj().T @ T.hat_matrix
        w, V = np.linalg.eigh((M + M.conj().T) / 2)
        for k, target in ((0, rep.lower_bound), (-1, rep.upper_bound)):
            x = T.domain.basis @ V[:, k]
            v = _ip(representative(T, x, random_matrix(rng, T.mulpart.dim, 1, T.field)[:, 0]), x)
            worst = max(worst, abs(v.real - target) / scale)
    parts["brute_force"] = worst
    return max(parts.values()), parts


def _make_hermitian_norm(rng, n, m, field):
    n, _ = _square_dims(n, m)
    T = gen_relation(rng, n, n, field, hermitian=True, range_in_domain=True)
    G = gen_relation(rng, n, n, field, hermitian=True)
    return {"relations": {"T": T, "T_general": G}, "params": {}}


def check_hermitian_norm(case):
    T, G = case["relations"]["T"], case["relations"]["T_general"]
    rT, rG = hermitian_report(T), hermitian_report(G)
    nT, nG = relation_norm(T).relation_norm, relation_norm(G).relation_norm
    eT = max(abs(rT.lower_bound), abs(rT.upper_bound))
    eG = max(abs(rG.lower_bound), abs(rG.upper_bound))
    parts = {"equality": abs(nT - eT) / _scale(nT), "bounded_implies_semibounded": (eG - nG) / _scale(nG)}
    return max(parts.values()), parts


def _make_rel(rng, n, m, field):
    T = gen_relation(rng, n, m, field)
    S = gen_relation(rng, n, m, field, domain_contains=T.domain)
    return {"relations": {"T": T, "S": S}, "params": {"seed": int(rng.integers(2**32))}}


def check_induced_verdicts(case):
    T, S = case["relations"]["T"], case["relations"]["S"]
    seed = case["params"]["seed"]
    a_curve, _, B = min_a_curve(T, S, [0.0, 0.5, 1.0, 2.0], seed)
    certified = float(np.linalg.norm(B, 2)) if B.size else 0.0
    pairs = probe_pairs(a_curve, [0.0, 0.5, 1.0, 2.0], certified)
    v_rel = t_bound_verdicts(T, S, pairs, seed)
    hat_ok = induced_verdicts_agree(T, S, pairs, seed, v_rel)
    Ts, Ss = arens_decompose(T)[0], arens_decompose(S)[0]
    v_arens = t_bound_verdicts(Ts, Ss, pairs, seed)
    arens_ok = all(v[0] == w[0] for v, w in zip(v_rel, v_arens))
    parts = {"hat_pair": 0.0 if hat_ok else 1.0, "arens_pair": 0.0 if arens_ok else 1.0,
             "pairs_checked": float(len(pairs))}
    return max(parts["hat_pair"], parts["arens_pair"]), parts


def check_bounded_perturbation(case):
    T, S = case["relations"]["T"], case["relations"]["S"]
    seed = case["params"]["seed"]
    rep = rel_bound_report(T, S, seed=seed, check_induced=False)
    s_norm = rep.s_norm
    ok, _, worst = t_bound_feasible(T, S, s_norm, 0.0, seed)
    ok2, _, _ = t_bound_feasible(T, S, s_norm, 0.1, seed)
    scale = _scale(s_norm)
    curve = np.array(rep.min_a_given_b)
    parts = {
        "t_bound": rep.t_bound_estimate,
        "norm_pair_feasible": 0.0 if ok and ok2 else max(worst / scale, 1e-3),
        "a_at_b0": abs(curve[0] - rep.certified_a) / scale,
        "monotone": float(np.max(np.diff(curve))) / scale if len(curve) > 1 else 0.0,
    }
    return max(parts.values()), parts


def _make_sum_pair(rng, n, m, field):
    T = gen_relation(rng, n, m, field)
    S = gen_relation(rng, n, m, field, domain_contains=T.domain, mulpart_within=T.mulpart)
    return {"relations": {"T": T, "S": S},
            "params": {"seed": int(rng.integers(2**32)), "b": float(rng.uniform(0, 0.9))}}


def check_sum_pair(case):
    T, S = case["relations"]["T"], case["relations"]["S"]
    rep = verify_sum_inequalities(T, S, b=case["params"]["b"], seed=case["params"]["seed"])
    return rep.worst, rep.to_dict()


def _make_truncation(rng, n, m, field):
    return {"relations": {}, "params": {"N": max(2, n)}}


def check_truncation(case):
    N = case["params"]["N"]
    row = remark24_demo(N)
    expected = (N, 0.0, 1.0, 0.0, N - 1.0)
    diffs = [abs(a - b) for a, b in zip(row, expected)]
    return max(diffs), {"row": list(row)}


SUITES = {
    "arens": (_make_single, check_arens),
    "thm2.4": (_make_single, check_induced_parts),
    "lemma2.5/2.6": (_make_norm_laws, check_norm_laws),
    "prop2.1": (_make_difference_sum, check_difference_sum),
    "thm2.3": (_make_difference_pair, check_difference_norms),
    "prop3.1-3.4": (_make_hermitian, check_hermitian_structure),
    "thm3.1": (_make_radius, check_radius_bound),
    "thm3.2-3.4": (_make_hermitian, check_hermitian_bounds),
    "thm3.5": (_make_hermitian_norm, check_hermitian_norm),
    "thm3.6": (_make_rel, check_induced_verdicts),
    "thm6.1": (_make_rel, check_bounded_perturbation),
    "thm6.3-ineq": (_make_sum_pair, check_sum_pair),
    "remark2.4": (_make_truncation, check_truncation),
}

ALIASES = {k.replace("-", "–"): k for k in SUITES if "-" in k}

_TAKES_TRIAL = {"prop2.1", "thm3.1"}


def resolve_suite(name):
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return name


# --- truncation demo -----------------------------------------------------------

def remark24_demo(N):
    """Norms of the order-N truncations: (||T||, ||S1||, ||S2||, ||S1-T||, ||S2-T||)."""
    if N < 2:
        raise ValueError("truncation order must be at least 2")
    I = np.eye(N)
    T = graph_of(np.diag(np.arange(1.0, N + 1)), field="real")
    S1 = from_parts(I, np.zeros((N, N)), I, field="real")
    S2 = from_parts(I, I, I[:, :1], field="real")
    norms = [relation_norm(R).relation_norm for R in (T, S1, S2, relation_diff(S1, T), relation_diff(S2, T))]
    return tuple(norms)


# --- running ----------------------------------------------------------------

@dataclass
class TrialConfig:
    seed: int = 0
    trials: int = 100
    dims: list = dc_field(default_factory=lambda: [(4, 4)])
    field: str = "complex"
    tol: float = 1e-8
    suites: list = dc_field(default_factory=lambda: list(SUITES))

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError("trials must be positive")
        self.dims = [tuple(int(v) for v in d) for d in self.dims]
        for n, m in self.dims:
            if not (1 <= n <= MAX_DIM and 1 <= m <= MAX_DIM):
                raise ValueError(f"dims must lie in 1..{MAX_DIM}, got {(n, m)}")
        if self.field not in ("real", "complex"):
            raise ValueError(f"unknown field {self.field!r}")
        self.suites = [resolve_suite(s) for s in self.suites]

    def to_dict(self):
        d = asdict(self)
        d["dims"] = [list(t) for t in self.dims]
        return d


def trial_rng(seed, suite_id, dims_index, trial):
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF, zlib.crc32(suite_id.encode()), dims_index, trial]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def make_case(suite_id, seed, dims_index, n, m, field, trial):
    make, _ = SUITES[suite_id]
    rng = trial_rng(seed, suite_id, dims_index, trial)
    if suite_id in _TAKES_TRIAL:
        return make(rng, n, m, field, trial=trial)
    return make(rng, n, m, field)


def check_case(suite_id, case):
    _, check = SUITES[suite_id]
    try:
        return check(case)
    except LinRelError as exc:
        return float("inf"), {"error": f"{type(exc).__name__}: {exc}"}


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if np.isfinite(v) else str(v)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return rio.encode_vector(obj.ravel())
    return obj


def run_suite(suite_id, config):
    """Run ``config.trials`` cases per dims entry; returns a JSON-ready dict."""
    suite_id = resolve_suite(suite_id)
    trials = passes = 0
    worst = -np.inf
    counterexample = None
    for di, (n, m) in enumerate(config.dims):
        for t in range(config.trials):
            case = make_case(suite_id, config.seed, di, n, m, config.field, t)
            residual, detail = check_case(suite_id, case)
            trials += 1
            worst = max(worst, residual)
            if residual <= config.tol:
                passes += 1
            elif counterexample is None:
                counterexample = {
                    "suite": suite_id,
                    "dims": [n, m],
                    "trial": t,
                    "residual": _clean(residual),
                    "detail": _clean(detail),
                    "case": _clean(rio.encode_case(case)),
                }
    return {
        "trials": trials,
        "passes": passes,
        "failures": trials - passes,
        "worst_residual": _clean(worst),
        "counterexample": counterexample,
    }


def replay(counterexample, tol=1e-8):
    """Re-run an embedded counterexample; returns (residual, passed)."""
    case = rio.decode_case(counterexample["case"])
    residual, _ = check_case(counterexample["suite"], case)
    return residual, residual <= tol


def run_all(config):
    """Run every configured suite; the report separates timing from results."""
    results, timing = {}, {}
    t0 = time.perf_counter()
    for sid in config.suites:
        t = time.perf_counter()
        results[sid] = run_suite(sid, config)
        timing[sid] = time.perf_counter() - t
    timing["total"] = time.perf_counter() - t0
    return {
        "schema_version": rio.SCHEMA_VERSION,
        "config": config.to_dict(),
        "suites": results,
        "all_passed": all(r["failures"] == 0 for r in results.values()),
        "timing": timing,
    }
