"""Command-line front end.

Subcommands:
    reduce          diagonal-reduce a matrix file, write a certificate
    classify        evaluate ring/element predicates on one ring
    adequate        compute one adequacy witness
    check-theorems  run the corpus checks and emit the JSON report
    case-study      the Z[x]/(x^2-1) divisibility case study

Exit codes are a stable contract: 0 ok, 2 parse error, 3 reduction failed,
4 ring too large, 5 unsupported ring/element combination. All file writes
are atomic (write to a temp file, then rename). Output is JSON first; a
short human-readable summary goes to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import adequacy, engine, lab
from .concrete import (
    DualIntRing,
    IntegerRing,
    IntQuadRing,
    LocalizedIntegerRing,
    export_table_data,
    make_ring,
)
from .errors import (
    NoResidue,
    NotBezout,
    NotComaximal,
    ParseError,
    ReductionFailed,
    RinglabError,
    TooLarge,
    UnsupportedSpec,
    ZeroInput,
    ZeroIntegerPart,
)
from .reduction import (
    ReductionCertificate,
    RingMatrix,
    diagonal_reduce,
    verify_certificate,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_REDUCTION = 3
EXIT_TOO_LARGE = 4
EXIT_UNSUPPORTED = 5


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ringlab-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=1)
    if out:
        _atomic_write(out, text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# reduce
# ---------------------------------------------------------------------------


def cmd_reduce(args) -> int:
    try:
        data = json.loads(open(args.matrix).read())
        ring = make_ring(data["ring"])
        A = RingMatrix.from_strings(ring, data["rows"])
    except (OSError, json.JSONDecodeError, KeyError, ValueError, ParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedSpec as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE

    if args.verify:
        try:
            cert_data = json.loads(open(args.verify).read())
            cert = ReductionCertificate.from_json(ring, cert_data)
        except (OSError, json.JSONDecodeError, KeyError, ParseError) as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        res = verify_certificate(ring, A, cert)
        print("certificate " + ("VERIFIED" if res.verdict
                                else f"REJECTED: {res.counterexample}"))
        return EXIT_OK if res.verdict else EXIT_REDUCTION

    try:
        cert = diagonal_reduce(ring, A, strategy=args.strategy)
    except ReductionFailed as exc:
        print(f"reduction failed: {exc.reason}", file=sys.stderr)
        if exc.witness is not None:
            print("irreducible block:", file=sys.stderr)
            for row in exc.witness.to_strings():
                print("  " + "  ".join(row), file=sys.stderr)
        return EXIT_REDUCTION
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except UnsupportedSpec as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    res = verify_certificate(ring, A, cert)
    payload = cert.to_json(verified=res.verdict)
    if args.out:
        _atomic_write(args.out, json.dumps(payload, sort_keys=True, indent=1) + "\n")
    diag = [ring.format_element(d) for d in cert.D.diagonal()]
    print("D = diag(" + ", ".join(diag) + ")")
    print("chain: " + " | ".join(diag))
    print("verified:", res.verdict)
    return EXIT_OK if res.verdict else EXIT_REDUCTION


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

_STRUCTURAL_NOTE = {"verdict": False, "status": "asserted_untested",
                    "note": "infinite ring, not machine-checkable"}


def _classify_finite(ring, bound: int) -> dict:
    cache = engine.build_cache(ring, bound)
    preds = {}
    for pid in engine.RING_PREDICATES:
        res = engine.ring_predicate(cache, pid)
        if not engine.reverify(cache, res):
            raise AssertionError(f"{pid} payload failed re-verification")
        preds[pid] = res.to_json()
    preds["j_characterization"] = engine.j_characterization_check(cache).to_json()
    return {
        "ring_spec": ring.spec_string(),
        "cardinality": cache.n,
        "units": len(cache.unit_set),
        "radical": [ring._format(cache.vals[i]) for i in sorted(cache.jac)],
        "idempotents": [ring._format(cache.vals[i])
                        for i in sorted(cache.idempotents)],
        "predicates": preds,
    }


def _classify_zloc(ring: LocalizedIntegerRing) -> dict:
    from .concrete import localized_residue_map

    target, _ = localized_residue_map(ring)
    image_cache = engine.build_cache(target)
    image_regular = engine.ring_predicate(image_cache, "regular").verdict
    return {
        "ring_spec": ring.spec_string(),
        "cardinality": "infinite",
        "predicates": {
            "bezout": {"verdict": True,
                       "note": "valuation gcd with explicit witnesses"},
            "feckly_zero_adequate": {
                "verdict": bool(image_regular),
                "note": "via the residue image " + target.spec_string(),
            },
            "zero_adequate": dict(_STRUCTURAL_NOTE),
        },
        "residue_image": target.spec_string(),
        "residue_image_regular": image_regular,
    }


def _classify_dualint(ring: DualIntRing) -> dict:
    # 0 is not feckly adequate against the target 2: any candidate s must
    # land in the rational x-line, where 3 divides everything while being
    # comaximal with 2. Those two facts are checkable, and are recorded.
    three_divides = ring.divides(ring.make((3, Fraction(0))),
                                 ring.make((0, Fraction(7, 2)))) is not None
    import random

    rng = random.Random("classify-dualint")
    verified = 0
    for _ in range(50):
        f = ring.make((rng.choice([-1, 1]) * rng.randint(1, 200),
                       Fraction(rng.randint(-9, 9), rng.randint(1, 9))))
        h = ring.make((rng.choice([-1, 1]) * rng.randint(1, 200),
                       Fraction(rng.randint(-9, 9), rng.randint(1, 9))))
        wit = adequacy.adequate_witness_dualint(f, h)
        if (ring.mul(wit.s, wit.t) == f
                and adequacy.dual_comax_certificate_holds(wit, h)):
            verified += 1
    return {
        "ring_spec": ring.spec_string(),
        "cardinality": "infinite",
        "predicates": {
            "bezout": {"verdict": True,
                       "note": "two-case ideal classification with witnesses"},
            "feckly_zero_adequate": {
                "verdict": False,
                "counterexample": {
                    "target": "2",
                    "note": "candidate s must lie in the rational x-line; "
                            "3 divides every such s and 3 is comaximal with 2",
                    "three_divides_x_line": three_divides,
                },
            },
            "every_nonradical_feckly_adequate": {
                "verdict": verified == 50,
                "note": "constructive witness for every nonzero integer part",
                "exercised": {"samples_verified": verified},
            },
        },
    }


def _classify_z(ring: IntegerRing) -> dict:
    return {
        "ring_spec": "Z",
        "cardinality": "infinite",
        "predicates": {
            "bezout": {"verdict": True, "note": "extended Euclid"},
            "hermite": {"verdict": True, "note": "cofactors from the gcd"},
            "feckly_zero_adequate": {
                "verdict": False,
                "counterexample": {"a": "2",
                                   "note": "zero radical and 2 is not regular"},
            },
            "zero_adequate": {"verdict": False,
                              "note": "not semiregular (zero radical)"},
            "every_nonzero_adequate": {
                "verdict": True,
                "note": "gcd-peeling factorization, see the adequate command",
            },
            "stable_range_1": {
                "verdict": False,
                "counterexample": {"a": "2", "b": "5",
                                   "note": "2 + 5y is never a unit"},
            },
        },
    }


def cmd_classify(args) -> int:
    try:
        ring = make_ring(args.ring)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedSpec as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    try:
        if ring.cardinality is not None:
            report = _classify_finite(ring, args.size_bound)
        elif isinstance(ring, LocalizedIntegerRing):
            report = _classify_zloc(ring)
        elif isinstance(ring, DualIntRing):
            report = _classify_dualint(ring)
        elif isinstance(ring, IntegerRing):
            report = _classify_z(ring)
        elif isinstance(ring, IntQuadRing):
            report = {"ring_spec": ring.spec_string(),
                      "cardinality": "infinite",
                      "predicates": {},
                      "note": "supports arithmetic, units, and divisibility "
                              "only; see the case-study command"}
        else:
            print("unsupported ring kind", file=sys.stderr)
            return EXIT_UNSUPPORTED
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    if args.export_table:
        if ring.cardinality is None:
            print("cannot export an infinite ring", file=sys.stderr)
            return EXIT_UNSUPPORTED
        _atomic_write(args.export_table,
                      json.dumps(export_table_data(ring), sort_keys=True) + "\n")
    _emit(report, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# adequate
# ---------------------------------------------------------------------------


def cmd_adequate(args) -> int:
    try:
        ring = make_ring(args.ring)
        c = ring.parse_element(args.c)
        a = ring.parse_element(args.a)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UnsupportedSpec, TooLarge) as exc:
        code = EXIT_TOO_LARGE if isinstance(exc, TooLarge) else EXIT_UNSUPPORTED
        print(f"{exc}", file=sys.stderr)
        return code
    variant = args.variant
    try:
        if isinstance(ring, IntegerRing):
            fac = adequacy.adequate_factor_Z(c.value, a.value)
            payload = {"ring": "Z", "c": str(fac.c), "a": str(fac.a),
                       "variant": variant, "r": str(fac.r), "s": str(fac.s),
                       "clauses_hold": fac.holds()}
        elif isinstance(ring, LocalizedIntegerRing):
            r, s = adequacy.adequate_witness_zloc(ring, c, a)
            payload = {"ring": ring.spec_string(), "c": str(c), "a": str(a),
                       "variant": variant,
                       "r": str(r), "s": str(s),
                       "clauses_hold": adequacy.zloc_witness_clauses_hold(
                           ring, c, a, r, s)}
        elif isinstance(ring, DualIntRing):
            wit = adequacy.adequate_witness_dualint(c, a)
            payload = {"ring": "dualint", "c": str(c), "a": str(a),
                       "variant": variant,
                       "s": str(wit.s), "t": str(wit.t),
                       "comax_certificate": {"k": wit.comax_k, "l": wit.comax_l},
                       "product_holds": ring.mul(wit.s, wit.t) == c,
                       "comax_holds": adequacy.dual_comax_certificate_holds(
                           wit, a)}
        elif ring.cardinality is not None:
            cache = engine.build_cache(ring, args.size_bound)
            wit = engine.adequate_witness_single(cache, c, a, variant)
            if wit is None:
                payload = {"ring": ring.spec_string(), "c": str(c),
                           "a": str(a), "variant": variant, "witness": None,
                           "note": "no (r, s) pair satisfies the three "
                                   "clauses; search was exhaustive"}
            else:
                payload = {"ring": ring.spec_string(), "c": str(c),
                           "a": str(a), "variant": variant,
                           "witness": wit.payload(ring)}
        else:
            print("unsupported ring kind for adequacy", file=sys.stderr)
            return EXIT_UNSUPPORTED
    except (ZeroInput, ZeroIntegerPart) as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    _emit(payload, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check-theorems and case-study
# ---------------------------------------------------------------------------


def cmd_check_theorems(args) -> int:
    try:
        if args.corpus:
            specs = tuple(json.loads(open(args.corpus).read()))
        else:
            specs = tuple(lab.default_corpus_specs())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    checks = tuple(args.checks.split(",")) if args.checks else None
    config = lab.CorpusConfig(ring_specs=specs, seed=args.seed,
                              size_bound=args.size_bound, checks=checks)
    report = lab.run_corpus(config)
    text = lab.report_to_json(report)
    if args.out:
        _atomic_write(args.out, text + "\n")
    else:
        print(text)
    for res in report["results"]:
        tag = "info" if res["info"] else ("pass" if res["aggregate"] else "FAIL")
        print(f"{res['id']:<10} {tag:<5} rings_exercised={res['rings_exercised']}",
              file=sys.stderr)
    s = report["summary"]
    print(f"summary: {s['pass']} pass, {s['fail']} fail, {s['info']} info",
          file=sys.stderr)
    return EXIT_OK if report["summary"]["fail"] == 0 else 1


def cmd_case_study(args) -> int:
    _emit(adequacy.zalpha_case_study(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="Certified diagonal reduction and ring classification "
                    "over commutative Bezout rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="diagonally reduce a matrix file")
    p.add_argument("matrix", help="matrix JSON file: {ring, rows}")
    p.add_argument("--strategy", choices=["euclidean_Z", "finite_search",
                                          "zloc_structural"], default=None)
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--verify", metavar="CERT",
                   help="verify an existing certificate instead of reducing")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("classify", help="evaluate predicates on one ring")
    p.add_argument("ring", help="ring spec, e.g. Zn:12 or zloc:{3,5}")
    p.add_argument("--out")
    p.add_argument("--size-bound", type=int, default=4096)
    p.add_argument("--export-table", metavar="PATH",
                   help="also export the ring as table-ring JSON")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("adequate", help="compute one adequacy witness")
    p.add_argument("ring")
    p.add_argument("c", help="the element to factor")
    p.add_argument("a", help="the target element")
    p.add_argument("--variant", choices=["classic", "feckly", "cvariant"],
                   default="classic")
    p.add_argument("--size-bound", type=int, default=4096)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_adequate)

    p = sub.add_parser("check-theorems", help="run the corpus checks")
    p.add_argument("--corpus", help="JSON file with a list of ring specs")
    p.add_argument("--checks", help="comma-separated check ids to run")
    p.add_argument("--seed", type=int, default=lab.DEFAULT_SEED)
    p.add_argument("--size-bound", type=int, default=4096)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_check_theorems)

    p = sub.add_parser("case-study",
                       help="the Z[x]/(x^2-1) divisibility case study")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_case_study)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except RinglabError as exc:
        # Anything not mapped above is a generic unsupported-input failure.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
