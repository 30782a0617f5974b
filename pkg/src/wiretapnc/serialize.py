"""JSON interchange for fields, matrices, networks, codes, and designs.

Field elements serialize as their integer encodings.  All writers use
canonical form (sorted keys, two-space indent, trailing newline) so result
files are byte-stable and diffable.
"""

from __future__ import annotations

import hashlib
import json

from .coset import CosetCode
from .fmatrix import FMatrix
from .gf import FieldSpec, field_new
from .netgraph import Network, NetworkCode
from .securecode import SecureDesign, SecurityParams


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path, obj):
    with open(path, "w") as fh:
        fh.write(canonical_dumps(obj))


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def field_to_json(f: FieldSpec):
    return {"p": f.p, "m": f.m}


def field_from_json(obj) -> FieldSpec:
    return field_new(obj["p"], obj.get("m", 1))


def matrix_to_json(M: FMatrix):
    return {
        "field": field_to_json(M.field),
        "rows": [list(r) for r in M.data],
        "cols": M.cols,
    }


def matrix_from_json(obj) -> FMatrix:
    f = field_from_json(obj["field"])
    return FMatrix(f, obj["rows"], obj.get("cols"))


def network_to_json(net: Network):
    return {
        "nodes": list(net.nodes),
        "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in net.edges],
        "source": net.source,
        "receivers": list(net.receivers),
        "n": net.n,
        "field": field_to_json(net.field),
    }


def network_from_json(obj) -> Network:
    return Network(
        nodes=obj["nodes"],
        edges=[(e["id"], e["tail"], e["head"]) for e in obj["edges"]],
        source=obj["source"],
        receivers=obj["receivers"],
        n=obj["n"],
        field=field_from_json(obj["field"]),
    )


def code_to_json(code: NetworkCode):
    return {
        "local": {eid: list(c) for eid, c in sorted(code.local.items())},
        "global": {eid: list(v) for eid, v in sorted(code.global_vectors.items())},
    }


def code_from_json(net: Network, obj) -> NetworkCode:
    code = NetworkCode(net)
    for eid, coeffs in obj["local"].items():
        code.set_local(eid, coeffs)
    code.propagate()
    return code


def design_to_json(design: SecureDesign):
    return {
        "network": network_to_json(design.network),
        "code": code_to_json(design.netcode),
        "H": matrix_to_json(design.coset.parity_check),
        "params": {
            "mu": design.params.mu,
            "k": design.params.k,
            "n": design.params.n,
            "restricted": (
                list(design.params.restricted_edges)
                if design.params.restricted_edges
                else None
            ),
        },
        "certificate": design.certificate,
    }


def design_from_json(obj) -> SecureDesign:
    net = network_from_json(obj["network"])
    code = code_from_json(net, obj["code"])
    H = matrix_from_json(obj["H"])
    p = obj["params"]
    params = SecurityParams(
        mu=p["mu"],
        k=p["k"],
        n=p["n"],
        restricted_edges=tuple(p["restricted"]) if p.get("restricted") else None,
    )
    return SecureDesign(CosetCode(H), code, params, obj.get("certificate", {}))
