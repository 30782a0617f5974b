"""Construction and verification of secure network codes.

The central condition: a coset code with parity check H (k x n, k = n - mu)
stays perfectly secret on a network iff rank [H; C_W] = k + |W| for every
full-rank observation C_W of at most mu edges.  `verify_secrecy_condition`
checks this exhaustively; `secure_lif` constructs codes satisfying it by
extending the Linear Information Flow greedy algorithm with security
invariants; the remaining functions cover alphabet bounds, the combination
network direct construction, the Cai-Yeung equivalence, and the Byzantine
cascade condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from math import comb

from .coset import CosetCode, rs_parity_check
from .exceptions import (
    BudgetExceedsCut,
    ComplexityCapExceeded,
    DimensionMismatch,
    FieldTooSmall,
    InsufficientCut,
    SingularMatrix,
)
from .fmatrix import FMatrix
from .gf import FieldSpec
from .netgraph import Network, NetworkCode, combination_network

SUBSET_CHECK_CAP = 10 ** 7


@dataclass(frozen=True)
class SecurityParams:
    mu: int
    k: int
    n: int
    restricted_edges: tuple | None = None


@dataclass
class SecureDesign:
    coset: CosetCode
    netcode: NetworkCode
    params: SecurityParams
    certificate: dict = dc_field(default_factory=dict)

    @property
    def network(self):
        return self.netcode.network


def wiretappable_edges(code: NetworkCode, restricted=None):
    """Edge ids open to the wiretapper, in sorted (enumeration) order."""
    ids = sorted(e.id for e in code.network.edges)
    if restricted is None:
        return ids
    restricted = set(restricted)
    unknown = restricted - set(ids)
    if unknown:
        raise DimensionMismatch(f"restricted set names unknown edges {sorted(unknown)}")
    return [eid for eid in ids if eid in restricted]


def verify_secrecy_condition(H: FMatrix, code: NetworkCode, mu: int, restricted=None):
    """Exhaustive check of the secrecy rank condition.

    Enumerates every edge subset W of size <= mu (within the restricted set if
    given) whose coding matrix has full rank |W| and requires
    rank [H; C_W] = k + |W|.  Returns (ok, witness) with witness the first
    violating subset in lexicographic order.
    """
    n = code.n
    k = H.rows
    if mu > n:
        raise BudgetExceedsCut(f"mu={mu} exceeds multicast dimension n={n}")
    edges = wiretappable_edges(code, restricted)
    for size in range(1, mu + 1):
        for W in combinations(edges, size):
            C = code.coding_matrix(W)
            if C.rank() != size:
                continue
            if H.stack(C).rank() != k + size:
                return False, W
    return True, None


def secure_lif(net: Network, n: int, mu: int, H: FMatrix, f: FieldSpec | None = None,
               check_cap: int = SUBSET_CHECK_CAP) -> SecureDesign:
    """Security-constrained Linear Information Flow construction.

    Visits edges in topological order; at each edge picks the
    lexicographically first local coefficient vector that (a) keeps every
    receiver's flow matrix invertible and (b) keeps rank [H; C_W] = k + |W|
    for every full-rank W = {e} united with processed edges of size <= mu.
    """
    f = net.field if f is None else f
    k = H.rows
    if H.cols != n:
        raise DimensionMismatch(f"H has {H.cols} columns, expected n={n}")
    if mu > n:
        raise BudgetExceedsCut(f"mu={mu} exceeds n={n}")
    flows = net.edge_disjoint_flows(n)  # raises InsufficientCut

    # edge id -> list of (receiver, path index) where the edge appears
    on_path = {e.id: [] for e in net.edges}
    for r, flow in flows.items():
        for pi, path in enumerate(flow.paths):
            for eid in path:
                on_path[eid].append((r, pi))

    # per-receiver frontier rows, initially the unit vectors (virtual inputs)
    frontier = {
        r: [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for r in net.receivers
    }

    code = NetworkCode(net, n)
    q = f.order
    processed = []
    checks = 0
    chosen = {}

    for e in net.topological_order:
        in_edges = net.in_edges(e.tail)
        degree = n if e.tail == net.source else len(in_edges)
        if e.tail == net.source:
            in_globals = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            in_globals = [list(code.global_vectors[ie.id]) for ie in in_edges]

        # full-rank processed subsets of size <= mu-1, computed once per edge
        security_sets = []
        for size in range(0, mu):
            for W in combinations(processed, size):
                C = code.coding_matrix(W)
                if C.rank() == size:
                    security_sets.append((W, C))
        accepted = None
        for cand in product(range(q), repeat=degree):
            vec = [0] * n
            for c, g in zip(cand, in_globals):
                if c:
                    vec = [f.add(a, f.mul(c, b)) for a, b in zip(vec, g)]
            ok = True
            for r, pi in on_path[e.id]:
                rows = [row for i, row in enumerate(frontier[r]) if i != pi]
                rows.append(vec)
                checks += 1
                if FMatrix(f, rows, n).rank() != n:
                    ok = False
                    break
            if ok and k:
                vrow = FMatrix(f, [vec], n)
                for W, C in security_sets:
                    checks += 1
                    if checks > check_cap:
                        raise ComplexityCapExceeded(
                            f"exceeded {check_cap} invariant checks"
                        )
                    CW = C.stack(vrow)
                    r_cw = CW.rank()
                    if r_cw != C.rows + 1:
                        continue  # rank-deficient observation, dominated
                    if H.stack(CW).rank() != k + r_cw:
                        ok = False
                        break
            if ok:
                accepted = (cand, vec)
                break
        if accepted is None:
            bound = alphabet_bound_general(len(net.edges), max(mu, 1), len(net.receivers))
            raise FieldTooSmall(
                f"no valid coding vector for edge {e.id} over {f!r}; "
                f"the sufficient alphabet bound is q >= {bound}",
                edge=e.id,
                bound=bound,
            )
        cand, vec = accepted
        code.set_local(e.id, cand)
        code.global_vectors[e.id] = tuple(vec)
        for r, pi in on_path[e.id]:
            frontier[r][pi] = vec
        processed.append(e.id)
        chosen[e.id] = list(cand)

    code.propagate()
    ok, witness = verify_secrecy_condition(H, code, mu)
    assert ok, f"secure_lif output failed verification, witness {witness}"
    certificate = {
        "checks": checks,
        "locals": chosen,
        "verified": True,
        "flows": {r: [list(p) for p in fl.paths] for r, fl in flows.items()},
    }
    return SecureDesign(
        CosetCode(H), code, SecurityParams(mu=mu, k=k, n=n), certificate
    )


# ---- alphabet-size bounds ----

def alphabet_bound_general(E_count: int, mu: int, t: int) -> int:
    """Sufficient field size choose(|E|-1, mu-1) + t for the modified LIF."""
    if E_count < 1 or mu < 1 or t < 1:
        raise DimensionMismatch("arguments must be positive")
    return comb(E_count - 1, mu - 1) + t


def alphabet_bound_minimal(k: int, mu: int, t: int) -> int:
    """Network-size-independent bound choose(2 k^3 t^2, mu-1) + t.

    Counts only the encoding edges of a minimal multicast network; the
    minimal-network reduction itself is not performed here.
    """
    if k < 1 or mu < 1 or t < 1:
        raise DimensionMismatch("arguments must be positive")
    return comb(2 * k ** 3 * t ** 2, mu - 1) + t


def alphabet_bound_two_sources(t: int) -> int:
    """floor(sqrt(2t - 7/4) + 1/2) + 1, via exact integer search.

    s <= sqrt(2t - 7/4) + 1/2 is equivalent to s^2 - s + 2 <= 2t.
    """
    if t < 1:
        raise DimensionMismatch("t must be positive")
    s = 0
    while (s + 1) ** 2 - (s + 1) + 2 <= 2 * t:
        s += 1
    return s + 1


def projective_line_colors(f: FieldSpec, exclude_all_ones: bool = False):
    """Points of the projective line: [0,1], [1,0], [1, alpha^i] for all i."""
    alpha = int(f.primitive_element())
    pts = [(0, 1), (1, 0)]
    pts += [(1, f.pow(alpha, i)) for i in range(f.order - 1)]
    if exclude_all_ones:
        pts = [p for p in pts if p != (1, 1)]
    return pts


# ---- direct constructions ----

def combination_secure_design(n: int, M: int, f: FieldSpec, k: int) -> SecureDesign:
    """Secure code for B(n, M) from an [M+k, M+k-n] Reed-Solomon code.

    The first k rows of H^T become the coset code; the remaining M rows
    become the source out-edge coding vectors; the middle layer forwards.
    """
    if M + k > f.order - 1:
        raise FieldTooSmall(
            f"need M+k <= q-1, got {M + k} > {f.order - 1}", bound=M + k + 1
        )
    mu = n - k
    Hfull = rs_parity_check(n, M + k, f)  # n x (M+k)
    Ht = Hfull.transpose()
    H = Ht.submatrix_rows(range(k))  # k x n coset matrix
    edge_vectors = [Ht.row(k + i) for i in range(M)]

    net = combination_network(n, M, f)
    code = NetworkCode(net, n)
    for i in range(M):
        code.set_local(f"Sm{i}", edge_vectors[i])
    for e in net.edges:
        if e.tail != "S":
            code.set_local(e.id, (1,))
    code.propagate()

    certificate = {"rs_parity_check": [list(r) for r in Hfull.data]}
    if mu >= 0:
        ok, witness = verify_secrecy_condition(H, code, mu) if mu > 0 else (True, None)
        assert ok, f"combination design failed verification, witness {witness}"
        certificate["verified"] = True
    return SecureDesign(
        CosetCode(H), code, SecurityParams(mu=mu, k=k, n=n), certificate
    )


def cai_yeung_to_coset(T: FMatrix, k: int) -> CosetCode:
    """Coset code equivalent to the multiply-by-T scheme: H = first k rows
    of T^-1, so that H (T [S; R]) = S for every secret S and randomness R."""
    if T.rows != T.cols:
        raise SingularMatrix("T must be square")
    Tinv = T.invert()
    return CosetCode(Tinv.submatrix_rows(range(k)))


def byzantine_secrecy_check(H: FMatrix, G_gen: FMatrix, code: NetworkCode,
                            mu: int, restricted=None):
    """Secrecy condition for the coset-then-error-correcting-code cascade:
    rank [H; C_W G] = k + mu for every W with rank(C_W) = mu.

    With G = I_n this is exactly the plain secrecy condition at exact rank mu.
    Returns (ok, witness).
    """
    if G_gen.rows != code.n:
        raise DimensionMismatch(
            f"generator has {G_gen.rows} rows, expected n={code.n}"
        )
    if H.cols != G_gen.cols:
        raise DimensionMismatch(
            f"H has {H.cols} columns but the generator has {G_gen.cols}"
        )
    k = H.rows
    edges = wiretappable_edges(code, restricted)
    for W in combinations(edges, mu):
        C = code.coding_matrix(W)
        if C.rank() != mu:
            continue
        if H.stack(C.mul_mat(G_gen)).rank() != k + mu:
            return False, W
    return True, None
