"""Command-line front end: JSON-in/JSON-out workflows over the library.

Exit codes: 0 success, 2 verification failure (witness on stdout), 1 usage
error.  Every command is a pure function of its inputs and the seed; a run
manifest (command, input hashes, seed, version, timings) goes to stdout,
never into result files, so result files are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import importlib.resources
import json
import sys
import time

from . import __version__
from .coset import CosetCode
from .equivocation import equivocation_rank, equivocation_sweep
from .exceptions import WiretapNCError
from .gf import field_new
from .netgraph import butterfly_code
from .oracle import min_equivocation_bruteforce
from .securecode import (
    alphabet_bound_general,
    combination_secure_design,
    secure_lif,
    verify_secrecy_condition,
)
from .serialize import (
    canonical_dumps,
    code_to_json,
    design_from_json,
    design_to_json,
    matrix_from_json,
    matrix_to_json,
    network_from_json,
    read_json,
    sha256_file,
    write_json,
)

GOLDEN_NAMES = ("butterfly_insecure", "butterfly_secure", "combination_b34")


def _manifest(command, inputs, seed, t0, summary):
    return {
        "command": command,
        "inputs": {name: sha256_file(path) for name, path in inputs.items()},
        "seed": seed,
        "version": __version__,
        "elapsed_s": round(time.monotonic() - t0, 6),
        "summary": summary,
    }


def _print_manifest(manifest):
    print(json.dumps(manifest, sort_keys=True))


# ---- built-in reference reports ----

def _butterfly_report(secure: bool):
    f = field_new(3)
    alpha = int(f.primitive_element())
    code = butterfly_code(f, be_local=(1, alpha) if secure else (1, 1))
    H = matrix_from_json({"field": {"p": 3, "m": 1}, "rows": [[1, 1]]})
    ok, witness = verify_secrecy_condition(H, code, mu=1)
    per_edge = {}
    for e in sorted(code.global_vectors):
        delta, _, _ = equivocation_rank(H, code, 1, restricted=[e])
        per_edge[e] = delta
    delta, min_witness, _ = equivocation_rank(H, code, 1)
    oracle_delta, oracle_witness = min_equivocation_bruteforce(H, code, 1)
    return {
        "name": "butterfly_secure" if secure else "butterfly_insecure",
        "H": matrix_to_json(H),
        "code": code_to_json(code),
        "secrecy": {"ok": ok, "witness": list(witness) if witness else None},
        "delta_mu1": delta,
        "delta_witness": list(min_witness),
        "delta_per_edge": per_edge,
        "oracle_delta_mu1": oracle_delta,
        "oracle_witness": list(oracle_witness),
    }


def _combination_report():
    f = field_new(7)
    design = combination_secure_design(3, 4, f, 2)
    H = design.coset.parity_check
    code = design.netcode
    ok, witness = verify_secrecy_condition(H, code, mu=1)
    flows = code.network.edge_disjoint_flows()
    y = [1, 5, 2]
    payloads = code.payloads(y)
    decodes = {
        r: code.receiver_decode(flow, payloads) == y for r, flow in flows.items()
    }
    delta, min_witness, _ = equivocation_rank(H, code, 1)
    oracle_delta, _ = min_equivocation_bruteforce(H, code, 1)
    return {
        "name": "combination_b34",
        "H": matrix_to_json(H),
        "source_edge_vectors": {
            f"Sm{i}": list(code.global_vectors[f"Sm{i}"]) for i in range(4)
        },
        "code": code_to_json(code),
        "secrecy": {"ok": ok, "witness": list(witness) if witness else None},
        "all_receivers_decode": all(decodes.values()),
        "delta_mu1": delta,
        "delta_witness": list(min_witness),
        "oracle_delta_mu1": oracle_delta,
    }


def generate_reference_reports():
    return {
        "butterfly_insecure": _butterfly_report(secure=False),
        "butterfly_secure": _butterfly_report(secure=True),
        "combination_b34": _combination_report(),
    }


def _golden_dir():
    return importlib.resources.files("wiretapnc") / "data" / "golden"


def cmd_paper_figures(args):
    t0 = time.monotonic()
    reports = generate_reference_reports()
    if args.update_golden:
        for name, report in reports.items():
            path = _golden_dir() / f"{name}.json"
            path.write_text(canonical_dumps(report))
    if args.out:
        for name, report in reports.items():
            write_json(f"{args.out}/{name}.json", report)
    mismatches = []
    for name, report in reports.items():
        golden_path = _golden_dir() / f"{name}.json"
        golden = golden_path.read_text()
        if canonical_dumps(report) != golden:
            mismatches.append(name)
    summary = {
        "figures": list(reports),
        "golden_ok": not mismatches,
        "mismatches": mismatches,
    }
    _print_manifest(_manifest("paper-figures", {}, args.seed, t0, summary))
    if mismatches:
        print(f"golden mismatch: {', '.join(mismatches)}")
        return 2
    return 0


def cmd_build(args):
    t0 = time.monotonic()
    net = network_from_json(read_json(args.network))
    H = matrix_from_json(read_json(args.H))
    design = secure_lif(net, net.n, args.mu, H, net.field)
    write_json(args.out, design_to_json(design))
    inputs = {"network": args.network, "H": args.H}
    summary = {"out": args.out, "checks": design.certificate["checks"]}
    _print_manifest(_manifest("build", inputs, args.seed, t0, summary))
    return 0


def cmd_verify(args):
    t0 = time.monotonic()
    design = design_from_json(read_json(args.design))
    restricted = args.restricted.split(",") if args.restricted else (
        design.params.restricted_edges
    )
    ok, witness = verify_secrecy_condition(
        design.coset.parity_check, design.netcode, design.params.mu, restricted
    )
    summary = {"ok": ok, "witness": list(witness) if witness else None}
    _print_manifest(_manifest("verify", {"design": args.design}, args.seed, t0, summary))
    if not ok:
        print(f"secrecy violation witness: {','.join(witness)}")
        return 2
    print("secrecy condition holds")
    return 0


def cmd_sweep(args):
    t0 = time.monotonic()
    design = design_from_json(read_json(args.design))
    restricted = args.restricted.split(",") if args.restricted else None
    report = equivocation_sweep(
        design.coset.parity_check, design.netcode, args.mu_max, restricted
    )
    obj = {
        "delta": {str(mu): d for mu, d in report.delta.items()},
        "witness": {
            str(mu): list(w) if w else [] for mu, w in report.witnesses.items()
        },
        "flagged": {str(mu): fl for mu, fl in report.flagged.items()},
        "d_profile": {str(r): d for r, d in report.d_profile.items()},
        "method": "rank",
    }
    if args.out:
        write_json(args.out, obj)
    else:
        sys.stdout.write(canonical_dumps(obj))
    _print_manifest(
        _manifest("sweep", {"design": args.design}, args.seed, t0,
                  {"mu_max": args.mu_max})
    )
    return 0


def cmd_oracle(args):
    t0 = time.monotonic()
    design = design_from_json(read_json(args.design))
    H = design.coset.parity_check
    restricted = args.restricted.split(",") if args.restricted else None
    rank_delta, rank_witness, _ = equivocation_rank(
        H, design.netcode, args.mu, restricted
    )
    oracle_delta, oracle_witness = min_equivocation_bruteforce(
        H, design.netcode, args.mu, restricted
    )
    agree = rank_delta == oracle_delta
    summary = {
        "mu": args.mu,
        "rank_delta": rank_delta,
        "oracle_delta": oracle_delta,
        "agree": agree,
    }
    _print_manifest(_manifest("oracle", {"design": args.design}, args.seed, t0, summary))
    if not agree:
        print(
            f"DISAGREEMENT at mu={args.mu}: rank formula {rank_delta} "
            f"(witness {rank_witness}) vs oracle {oracle_delta} "
            f"(witness {oracle_witness})"
        )
        return 2
    print(f"delta({args.mu}) = {rank_delta}, oracle confirmed")
    return 0


def cmd_bounds(args):
    t0 = time.monotonic()
    net = network_from_json(read_json(args.network))
    bound = alphabet_bound_general(len(net.edges), args.mu, len(net.receivers))
    print(bound)
    _print_manifest(
        _manifest("bounds", {"network": args.network}, args.seed, t0,
                  {"bound": bound})
    )
    return 0


def cmd_coset(args):
    t0 = time.monotonic()
    H = matrix_from_json(read_json(args.H))
    code = CosetCode(H)
    if args.coset_action == "encode":
        secret = json.loads(args.secret)
        word = code.encode(secret, seed=args.seed)
        print(json.dumps(word))
        summary = {"action": "encode"}
    else:
        word = json.loads(args.word)
        secret = code.decode(word)
        print(json.dumps(secret))
        summary = {"action": "decode"}
    _print_manifest(_manifest("coset", {"H": args.H}, args.seed, t0, summary))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wiretapnc",
        description="Secure network codes for multicast wiretap networks of type II",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1,
                        help="parallelism hint (currently single-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("paper-figures", help="regenerate the built-in reference example reports")
    p.add_argument("--out", help="directory for generated report copies")
    p.add_argument("--update-golden", action="store_true")
    p.set_defaults(func=cmd_paper_figures)

    p = add_parser("build", help="security-constrained LIF construction")
    p.add_argument("--network", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--H", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = add_parser("verify", help="check the secrecy rank condition")
    p.add_argument("--design", required=True)
    p.add_argument("--restricted", help="comma-separated edge ids")
    p.set_defaults(func=cmd_verify)

    p = add_parser("sweep", help="equivocation sweep over mu")
    p.add_argument("--design", required=True)
    p.add_argument("--mu-max", type=int, required=True)
    p.add_argument("--restricted", help="comma-separated edge ids")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = add_parser("oracle", help="cross-check rank formula vs brute force")
    p.add_argument("--design", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--restricted", help="comma-separated edge ids")
    p.set_defaults(func=cmd_oracle)

    p = add_parser("bounds", help="sufficient alphabet size for a network")
    p.add_argument("--network", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = add_parser("coset", help="coset encode/decode")
    p.add_argument("coset_action", choices=("encode", "decode"))
    p.add_argument("--H", required=True)
    p.add_argument("--secret", help="JSON array of secret symbols")
    p.add_argument("--word", help="JSON array of channel symbols")
    p.set_defaults(func=cmd_coset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except WiretapNCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
