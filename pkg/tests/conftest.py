"""Shared fixtures and random-instance generators for the test suite."""

import random

import pytest

from wiretapnc.exceptions import InsufficientCut
from wiretapnc.fmatrix import FMatrix
from wiretapnc.gf import field_new, is_prime
from wiretapnc.netgraph import Network, NetworkCode


@pytest.fixture(scope="session")
def gf2():
    return field_new(2)


@pytest.fixture(scope="session")
def gf3():
    return field_new(3)


@pytest.fixture(scope="session")
def gf7():
    return field_new(7)


def smallest_prime_power_at_least(n):
    v = max(n, 2)
    while True:
        m = v
        for p in range(2, v + 1):
            if m % p == 0:
                while m % p == 0:
                    m //= p
                break
        if m == 1:
            return v
        v += 1


def prime_power_parts(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            assert q == 1 and is_prime(p)
            return p, m
    raise ValueError(q)


def random_full_rank_matrix(rng, field, rows, cols):
    while True:
        M = FMatrix(
            field,
            [[rng.randrange(field.order) for _ in range(cols)] for _ in range(rows)],
            cols,
        )
        if M.rank() == rows:
            return M


def random_coded_instance(rng, q=None, n=None, k=None, max_edges=10):
    """A random acyclic network with a random (not necessarily feasible)
    linear code and a random full-rank k x n coset matrix H.

    Receivers are not needed for equivocation analysis, so none are attached.
    """
    q = q if q is not None else rng.choice((2, 3, 5, 7))
    n = n if n is not None else rng.randint(2, 4)
    k = k if k is not None else rng.randint(1, min(3, n))
    field = field_new(*prime_power_parts(q))
    num_mid = rng.randint(0, 4)
    nodes = ["S"] + [f"v{i}" for i in range(num_mid)]
    num_edges = rng.randint(max(n, 3), max_edges)
    edges = []
    for i in range(num_edges):
        if num_mid == 0:
            tail = "S"
        else:
            ti = rng.randint(-1, num_mid - 1)
            tail = "S" if ti < 0 else f"v{ti}"
        if tail == "S":
            head_choices = [f"v{i}" for i in range(num_mid)] or ["S"]
            if not num_mid:
                # no intermediate nodes: hang edges on a sink
                if "T" not in nodes:
                    nodes.append("T")
                head = "T"
            else:
                head = rng.choice(head_choices)
        else:
            ti = int(tail[1:])
            later = [f"v{i}" for i in range(ti + 1, num_mid)]
            if "T" not in nodes:
                nodes.append("T")
            head = rng.choice(later + ["T"])
        edges.append((f"e{i:02d}", tail, head))
    net = Network(nodes, edges, "S", (), n, field)
    code = NetworkCode(net, n)
    for e in net.topological_order:
        deg = n if e.tail == "S" else len(net.in_edges(e.tail))
        code.set_local(e.id, [rng.randrange(q) for _ in range(deg)])
    code.propagate()
    H = random_full_rank_matrix(rng, field, k, n)
    return net, code, H


def random_multicast_network(rng, n, t, field, max_edges=12):
    """Random layered multicast network with min-cut >= n to each receiver.

    Each receiver gets n in-edges with pairwise distinct tails, and each
    intermediate node gets its own source edge, which guarantees the cut.
    """
    while True:
        num_mid = rng.randint(0, 3)
        mids = [f"m{i}" for i in range(num_mid)]
        nodes = ["S"] + mids
        edges = [(f"Sm{i}", "S", m) for i, m in enumerate(mids)]
        ok = True
        for r in range(t):
            rname = f"r{r}"
            nodes.append(rname)
            tails = ["S"] + mids
            if len(tails) < n:
                ok = False
                break
            chosen = rng.sample(tails, n)
            for tail in chosen:
                edges.append((f"{tail}_{rname}", tail, rname))
        if not ok or len(edges) > max_edges:
            continue
        receivers = [f"r{r}" for r in range(t)]
        try:
            return Network(nodes, edges, "S", receivers, n, field)
        except InsufficientCut:
            continue


def mds_parity_check(field, k, n):
    """A k x n MDS parity check matrix over the given field."""
    from wiretapnc.coset import is_mds_parity_check, rs_parity_check

    if k == 0:
        return FMatrix(field, [], n)
    if k == n:
        return FMatrix.identity(field, n)
    if k == 1:
        return FMatrix(field, [[1] * n])
    if k == n - 1:
        rows = [[1 if j == i else 0 for j in range(n - 1)] + [1] for i in range(n - 1)]
        return FMatrix(field, rows)
    H = rs_parity_check(k, n, field)
    ok, _ = is_mds_parity_check(H)
    assert ok
    return H


@pytest.fixture
def rng():
    return random.Random(20260826)
