"""Command line: build, verify and refute lifted Hamming codes.

Exit codes: 0 all claims pass, 1 a claim failed, 2 invalid input,
3 an enumeration cap was exceeded.

CSV schemas (header row always printed):
  hamming      row,entries
  verify       claim,status,detail
  refute       field,value
  paper-suite  criterion,status,seconds,limit,claim,detail
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .caps import CapExceeded, Caps, default_caps, parse_caps
from .code import all_vectors, coset_table, cr_vector_oracle, is_completely_regular, LinearCode
from .gf import prime_power
from .graph import build_coset_graph, classical_params, export_graph, verify_distance_regular
from .lifted import (
    HammingSpec, HypothesisError, closed_form_array, ground_field, hamming_parity_matrix,
    lift, lift_matrix, min_weight_check, non_hamming_refutation, sumset_identity,
)
from .matq import MatQ, count_rank
from .suite import run_suite

EXIT_OK, EXIT_CLAIM, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
DECODER_SAMPLE = 2000


class ParseError(ValueError):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# hamming

def cmd_hamming(args, caps: Caps) -> int:
    H = hamming_parity_matrix(args.q, args.m, caps)
    if args.format == "json":
        text = _json({"q": args.q, "m": args.m, "n": H.cols, "H": H.tolist()})
    elif args.format == "csv":
        text = _csv([["row", "entries"]] + [[i, " ".join(map(str, row))] for i, row in enumerate(H.tolist())])
    else:
        text = "".join(" ".join(str(x) for x in row) + "\n" for row in H.tolist())
    _emit(text, args.out)
    return EXIT_OK


# verify

def _monomial_equivalent(H: MatQ, rng: np.random.Generator) -> MatQ:
    F = H.field
    perm = rng.permutation(H.cols)
    scales = rng.integers(1, F.order, size=H.cols)
    return MatQ(F, F.mul_table[scales[None, :], H.entries[:, perm]])


def verify_report(q: int, m: int, r: int, caps: Caps, seed: int = 0) -> dict:
    """Run every check for C_{(m,r)}; raises CapExceeded if the coset table is too large."""
    spec = HammingSpec(q, m)
    lc = lift(spec, r, caps, verify=False)
    code = lc.code
    table = coset_table(code)
    verdict = is_completely_regular(code, table)
    expected = closed_form_array(q, m, r)
    claims: dict[str, dict] = {}

    def claim(name, ok, detail=""):
        claims[name] = {"status": "pass" if ok else "fail", "detail": detail}

    def optional(name, fn):
        try:
            ok, detail = fn()
        except CapExceeded as exc:
            claims[name] = {"status": "skipped", "detail": str(exc)}
        else:
            claim(name, ok, detail)

    claim("size", code.size == lc.field.order ** (spec.n - m), f"|C| = {code.size}")
    claim("completely_regular", verdict.regular,
          "" if verdict.regular else f"witness {verdict.witness}")
    claim("array_match", verdict.array == expected, f"measured {verdict.array}, closed form {expected}")
    claim("covering_radius", table.rho == min(r, m), f"rho = {table.rho}")
    census = [count_rank(q, r, m, k) for k in range(min(r, m) + 1)]
    claim("mu_census", list(table.mu) == census, f"mu = {list(table.mu)}")
    degree = (lc.field.order - 1) * spec.n
    arr = verdict.array
    claim("balance", arr is not None and arr.balance_holds() and arr.sum_rule_holds(degree))

    def sumset():
        ok, size, _ = sumset_identity(lc)
        return ok, f"|sumset| = {size}"
    optional("sumset", sumset)

    def minweight():
        mw = min_weight_check(lc)
        return mw.ok, f"minimum weight {mw.min_weight}, {mw.count} words"
    optional("min_weight", minweight)

    def decoder():
        total = code.Q ** code.n
        if total <= caps.vectors:
            vecs = all_vectors(code.Q, code.n)
            how = "exhaustive"
        else:
            rng = np.random.default_rng(seed)
            vecs = rng.integers(0, code.Q, size=(DECODER_SAMPLE, code.n))
            how = f"sample of {DECODER_SAMPLE}"
        bad = 0
        for v in vecs:
            word, err = lc.decode(v)
            S = lc.syndrome_matrix(v)
            weight = sum(1 for x in err if x)
            if (not code.contains(word) or weight != S.rank
                    or S.rank != table.distance(code.syndrome(v))):
                bad += 1
        return bad == 0, f"{how}: {len(vecs)} vectors, {bad} failures"
    optional("decoder", decoder)

    def graph():
        v = verify_distance_regular(build_coset_graph(code))
        exp = classical_params(q, r, m)
        return v.regular and v.params.same_array(exp), f"{v.params}"
    optional("coset_graph", graph)

    def oracle():
        o = cr_vector_oracle(code)
        return o.regular and o.array == verdict.array, "vector-level brute force"
    optional("vector_oracle", oracle)

    def equivalence():
        rng = np.random.default_rng(seed)
        H2 = _monomial_equivalent(lc.base_H, rng)
        v2 = is_completely_regular(LinearCode(lift_matrix(H2, lc.field), caps))
        return v2.array == verdict.array, f"seed {seed}"
    optional("equivalence", equivalence)

    passed = all(c["status"] != "fail" for c in claims.values())
    return {
        "q": q, "m": m, "r": r, "n": spec.n, "rho": table.rho,
        "field": lc.field.descriptor,
        "closed_form": expected.to_dict(),
        "measured": arr.to_dict() if arr else None,
        "match": arr == expected,
        "claims": claims,
        "passed": passed,
    }


def cmd_verify(args, caps: Caps) -> int:
    report = verify_report(args.q, args.m, args.r, caps, args.seed)
    if args.format == "json":
        text = _json(report)
    elif args.format == "csv":
        rows = [["claim", "status", "detail"]]
        rows += [[k, v["status"], v["detail"]] for k, v in report["claims"].items()]
        text = _csv(rows)
    else:
        lines = [f"C_({args.m},{args.r}) over GF({args.q}^{args.r}), n = {report['n']}, rho = {report['rho']}"]
        lines.append(f"closed form b={report['closed_form']['b']} c={report['closed_form']['c']} "
                     f"mu={report['closed_form']['mu']}")
        for k, v in report["claims"].items():
            lines.append(f"{v['status']:>7}  {k}  {v['detail']}".rstrip())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if report["passed"] else EXIT_CLAIM


# refute

def read_parity_file(path: str, caps: Caps | None = None) -> MatQ:
    """First line "q n rows", then one row of canonical element integers per line."""
    with open(path) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty parity-check file")
    try:
        q, n, rows = (int(x) for x in lines[0].split())
        grid = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed parity-check file: {exc}") from exc
    if len(grid) != rows or any(len(row) != n for row in grid):
        raise ParseError(f"expected {rows} rows of {n} entries")
    prime_power(q)
    return MatQ(ground_field(q, caps), grid)


def cmd_refute(args, caps: Caps) -> int:
    H = read_parity_file(args.parity_file, caps)
    ref = non_hamming_refutation(H, args.r, caps)
    w = ref.witness
    report = {
        "base": {"n": ref.base_params[0], "k": ref.base_params[1], "d": ref.base_params[2],
                 "rho": ref.base_rho},
        "r": args.r,
        "completely_regular": ref.verdict.regular,
        "checker_witness": None if ref.verdict.witness is None else {
            "distance": ref.verdict.witness.distance,
            "syndromes": list(ref.verdict.witness.members),
            "counts_c_b": [list(c) for c in ref.verdict.witness.counts],
        },
        "coset_witness": None if w is None else {
            "shape": w.shape,
            "vectors": [list(v) for v in w.vectors],
            "syndromes": list(w.syndromes),
            "weight_distributions": [list(d) for d in w.distributions],
            "covering_codeword": list(w.cover) if w.cover else None,
        },
        "refuted": ref.refuted,
    }
    if args.format == "json":
        text = _json(report)
    else:
        flat = [("base", f"[{ref.base_params[0]},{ref.base_params[1]},{ref.base_params[2]}]"),
                ("r", args.r), ("completely_regular", ref.verdict.regular)]
        if w is not None:
            flat += [("witness_shape", w.shape),
                     ("coset_a", " ".join(map(str, w.vectors[0]))),
                     ("coset_b", " ".join(map(str, w.vectors[1]))),
                     ("distribution_a", " ".join(map(str, w.distributions[0]))),
                     ("distribution_b", " ".join(map(str, w.distributions[1])))]
        flat.append(("refuted", ref.refuted))
        if args.format == "csv":
            text = _csv([["field", "value"]] + [list(p) for p in flat])
        else:
            text = "".join(f"{k}: {v}\n" for k, v in flat)
    _emit(text, args.out)
    return EXIT_OK if ref.refuted else EXIT_CLAIM


# graph

def cmd_graph(args, caps: Caps) -> int:
    lc = lift(HammingSpec(args.q, args.m), args.r, caps, verify=False)
    g = build_coset_graph(lc.code)
    if args.export:
        _emit(export_graph(g, args.export), args.out)
        return EXIT_OK
    v = verify_distance_regular(g)
    exp = classical_params(args.q, args.r, args.m)
    report = {"V": g.V, "diameter": v.params.diameter if v.params else None,
              "b": list(v.params.b) if v.params else None,
              "c": list(v.params.c) if v.params else None,
              "classical_match": bool(v.regular and v.params.same_array(exp))}
    if args.format == "json":
        text = _json(report)
    elif args.format == "csv":
        text = _csv([list(report), [report[k] for k in report]])
    else:
        text = "".join(f"{k}: {val}\n" for k, val in report.items())
    _emit(text, args.out)
    return EXIT_OK if report["classical_match"] else EXIT_CLAIM


# reproduction suite

def cmd_suite(args, caps: Caps) -> int:
    only = [k.strip() for part in (args.only or []) for k in part.split(",") if k.strip()]
    outcomes = run_suite(only or None, caps)
    if args.format == "json":
        text = _json([{"criterion": o.key, "status": "pass" if o.ok else "fail",
                       "seconds": round(o.seconds, 3), "limit": o.limit,
                       "claim": o.claim, "detail": o.detail} for o in outcomes])
    elif args.format == "csv":
        rows = [["criterion", "status", "seconds", "limit", "claim", "detail"]]
        rows += [[o.key, "pass" if o.ok else "fail", f"{o.seconds:.3f}",
                  "" if o.limit is None else o.limit, o.claim, o.detail] for o in outcomes]
        text = _csv(rows)
    else:
        width = max(len(o.key) for o in outcomes)
        lines = [f"{'PASS' if o.ok else 'FAIL'}  {o.key:<{width}}  {o.seconds:7.3f}s  {o.claim}"
                 for o in outcomes]
        lines.append(f"{sum(o.ok for o in outcomes)}/{len(outcomes)} criteria pass")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", default=None,
                        help="enumeration limits, e.g. 'vectors=4096,coset_steps=1e6' "
                             "(keys: field_order, coset_steps, vectors, codewords)")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", metavar="FILE", default=None)

    parser = argparse.ArgumentParser(
        prog="liftedcodes", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hamming", parents=[common], help="print the parity-check matrix H_{m,q}")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_hamming)

    p = sub.add_parser("verify", parents=[common], help="verify every claim for C_(m,r)")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("refute", parents=[common], help="show that a lifted non-Hamming code is not CR")
    p.add_argument("parity_file")
    p.add_argument("-r", type=int, default=2)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("graph", parents=[common], help="coset graph of C_(m,r)")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--export", choices=["dot", "json"], default=None)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("paper-suite", parents=[common], help="run the reproduction criteria")
    p.add_argument("--only", action="append", metavar="NAME[,NAME]")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = parse_caps(args.caps, default_caps()) if args.caps else default_caps()
        for name in ("q", "m", "r"):
            value = getattr(args, name, None)
            if value is not None and value < 1:
                raise ValueError(f"-{name} must be positive")
        return args.func(args, caps)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc.what} requires {exc.required}, limit {exc.limit}", file=sys.stderr)
        return EXIT_CAP
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
