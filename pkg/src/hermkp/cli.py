"""Command-line interface: ``hermkp <command> ...`` (also ``python -m hermkp``).

Exit codes: 0 success, 1 a verification failed, 2 invalid partition or usage,
3 capacity exceeded, 4 engine disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from . import correlators, hz, kp, wick
from .errors import CapacityError, EngineDisagreement, InconsistencyError
from .partitions import Partition, partitions_up_to
from .polyalg import Graded

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_PARTITION = 2
EXIT_CAPACITY = 3
EXIT_DISAGREE = 4

ENGINES = ("wick", "char", "kp")


class UsageError(ValueError):
    pass


class InvalidPartition(UsageError):
    pass


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise InvalidPartition(f"invalid partition {text!r}: {exc}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def first_difference(a: Graded, b: Graded) -> str:
    if a.gs_exp != b.gs_exp and not (a.is_zero() or b.is_zero()):
        return f"g_s exponent {a.gs_exp} vs {b.gs_exp}"
    degrees = sorted(set(a.poly.coeffs) | set(b.poly.coeffs), reverse=True)
    for d in degrees:
        ca, cb = a.poly.coefficient(d), b.poly.coefficient(d)
        if ca != cb:
            return f"coefficient of N^{d}: {ca} vs {cb}"
    return "values differ"


def _format_graded(value: Graded, thooft: bool) -> str:
    if thooft:
        return correlators.thooft_substitute(value).pretty()
    return value.pretty()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _engine_fns(connected: bool, workers: int) -> dict[str, Callable[[Partition], Graded]]:
    if connected:
        return {
            "wick": lambda lam: wick.connected_correlator(lam, workers),
            "char": correlators.char_connected_correlator,
            "kp": kp.kp_connected_correlator,
        }
    return {
        "wick": lambda lam: wick.wick_correlator(lam, workers),
        "char": correlators.char_correlator,
        "kp": kp.kp_correlator,
    }


def _engines_for(choice: str, lam: Partition) -> list[str]:
    if choice == "all":
        return [e for e in ENGINES if e != "kp" or (lam and kp.kp_supports(lam))]
    if choice == "both":
        return ["wick", "char"]
    return [choice]


def cmd_correlator(args, out) -> int:
    lam = parse_partition(args.lam)
    if args.connected and not lam:
        raise InvalidPartition("connected correlator needs a nonempty partition")
    fns = _engine_fns(args.connected, args.threads)
    names = _engines_for(args.engine, lam)
    values = {name: fns[name](lam) for name in names}
    ref_name = names[0]
    ref = values[ref_name]
    for name in names[1:]:
        if values[name] != ref:
            raise EngineDisagreement(f"<p_{lam}> {ref_name} vs {name}", ref.pretty(),
                                     f"{values[name].pretty()} ({first_difference(ref, values[name])})")
    if args.json:
        doc = {"lambda": str(lam), "connected": args.connected, "engines": names, **ref.to_json()}
        out.write(dumps(doc) + "\n")
    else:
        out.write(_format_graded(ref, args.thooft) + "\n")
    return EXIT_OK


def _expansion_lines(exp: correlators.BasisExpansion, thooft: bool) -> list[str]:
    lines = []
    for row in exp.to_json():
        g = Graded.from_json(row)
        label = row["lambda"] or "()"
        lines.append(f"{label}: {_format_graded(g, thooft)}")
    return lines


def cmd_zfunction(args, out) -> int:
    exp = correlators.partition_function(args.degree, args.basis, args.engine)
    if args.json:
        out.write(dumps({"basis": exp.basis, "degree": args.degree, "terms": exp.to_json()}) + "\n")
    else:
        out.write("\n".join(_expansion_lines(exp, args.thooft)) + "\n")
    return EXIT_OK


def cmd_free_energy(args, out) -> int:
    if args.engine == "cumulant":
        exp = correlators.connected_free_energy(args.degree)
    else:
        exp = correlators.free_energy(args.degree, args.engine)
    if args.json:
        out.write(dumps({"basis": "power", "degree": args.degree, "connected": True,
                         "terms": exp.to_json()}) + "\n")
    else:
        out.write("\n".join(_expansion_lines(exp, args.thooft)) + "\n")
    return EXIT_OK


def npoint_document(n: int, cap: int, series) -> dict:
    return {"n": n, "cap": cap, "vars": list(series.vars), "terms": series.to_json()}


def npoint_table(series) -> str:
    classes = kp.symmetrized_classes(series)
    keys = sorted(classes, key=lambda k: (sum(k), [-e for e in k]))
    return "\n".join(f"[{','.join(map(str, k))}] {classes[k].pretty()}" for k in keys) + "\n"


def npoint_csv(series) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["exponents", "gs", "poly"])
    for exps, poly in series.items():
        writer.writerow([";".join(map(str, exps)), 0, poly.pretty()])
    return buf.getvalue()


def cmd_npoint(args, out) -> int:
    cap = args.cap if args.cap is not None else kp.default_cap(args.n)
    if args.n < 1 or cap < 1:
        raise UsageError("--n and --cap must be positive")
    limit = NPOINT_CAP_LIMITS.get(args.n)
    if limit is None or cap > limit:
        raise CapacityError(f"npoint with n={args.n} supports cap <= {limit if limit is not None else 0}")
    series = kp.npoint(args.n, cap)
    if args.format == "json":
        out.write(dumps(npoint_document(args.n, cap, series)) + "\n")
    elif args.format == "csv":
        out.write(npoint_csv(series))
    else:
        out.write(npoint_table(series))
    return EXIT_OK


NPOINT_CAP_LIMITS = {1: 60, 2: 30, 3: 16, 4: 10, 5: 8}


def cmd_hz(args, out) -> int:
    n_max, k_max = args.table
    if n_max < 0 or k_max < 0 or n_max > 30 or k_max > 60:
        raise CapacityError("hz table supports n <= 30 and k <= 60")
    if args.json:
        doc = {"c": [[hz.hz_c(n, k) for k in range(k_max + 1)] for n in range(n_max + 1)],
               "epsilon": {str(n): [hz.epsilon_g(n, g) for g in range(n // 2 + 1)]
                           for n in range(1, n_max + 1)}}
        out.write(dumps(doc) + "\n")
        return EXIT_OK
    width = len(str(hz.hz_c(n_max, k_max))) + 1
    out.write("n\\k" + "".join(str(k).rjust(width) for k in range(k_max + 1)) + "\n")
    for n in range(n_max + 1):
        out.write(str(n).ljust(3) + "".join(str(hz.hz_c(n, k)).rjust(width) for k in range(k_max + 1)) + "\n")
    for n in range(1, n_max + 1):
        out.write(f"C({n},N) = {hz.genus_polynomial(n).pretty()}\n")
    return EXIT_OK


def cmd_census(args, out) -> int:
    lam = parse_partition(args.lam)
    if lam.weight % 2:
        out.write(dumps({"lambda": str(lam), "faces": {}}) + "\n")
        return EXIT_OK
    census = wick.genus_census(lam, args.threads)
    doc = {"lambda": str(lam), "gs": census.gs_exp, "faces": census.to_json(),
           "connected_faces": {str(f): c for f, c in sorted(census.connected_by_faces.items())},
           "genus": {str(g): c for g, c in sorted(census.by_genus().items())}}
    out.write(dumps(doc) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def suite_hz(n_max: int) -> dict:
    results = hz.verify_identities(n_max)
    cap = min(16, 2 * n_max + 4)
    first, second = hz.two_point_marginals(cap)
    return {
        "identities": hz.report_json(results),
        "recursion_vs_polynomial": _status(hz.recursion_matches_poly(n_max, 10)),
        "epsilon_vs_polynomial": _status(all(hz.genus_polynomial(n) == hz.hz_C_poly(n)
                                             for n in range(1, n_max + 1))),
        "one_point_bridge": _status(hz.one_point_bridge(n_max)),
        "two_point_marginal_xi1^-2": _status(first),
        "two_point_marginal_xi1^-3": _status(second),
        "marginal_cap": cap,
    }


def suite_engines(n_max: int, workers: int) -> dict:
    max_weight = min(12, 2 * n_max)
    checked = 0
    mismatch = None
    for lam in partitions_up_to(max_weight):
        if lam.weight % 2:
            continue
        checked += 1
        w, c = wick.wick_correlator(lam, workers), correlators.char_correlator(lam)
        if w != c:
            mismatch = f"{lam}: wick {w.pretty()} vs char {c.pretty()}"
            break
        if lam and kp.kp_supports(lam) and len(lam) <= 3 and kp.kp_correlator(lam) != w:
            mismatch = f"{lam}: kp {kp.kp_correlator(lam).pretty()} vs wick {w.pretty()}"
            break
    schur_ok = all(correlators.schur_correlator(lam) == correlators.dif_itz_c(lam) * correlators.un_dimension(lam)
                   for lam in partitions_up_to(max_weight) if lam.weight % 2 == 0)
    hook_ok = all((-1) ** p * correlators.bogoliubov_entry(2 * n - 1 - p, p)
                  == correlators.schur_correlator(Partition((2 * n - p,) + (1,) * p))
                  for n in range(1, n_max + 1) for p in range(2 * n))
    return {
        "max_weight": max_weight,
        "correlators_checked": checked,
        "correlators": _status(mismatch is None),
        "first_mismatch": mismatch,
        "schur_factorization": _status(schur_ok),
        "hook_relation": _status(hook_ok),
    }


def suite_kp() -> dict:
    out = {}
    for n, cap in ((1, 7), (2, 8), (3, 9)):
        report = kp.npoint_vs_free_energy(n, cap)
        out[f"G{n}_cap{cap}"] = {"status": _status(report.ok), "checked": report.checked,
                                 "first_mismatch": report.first_mismatch}
    g2 = kp.npoint(2, 8)
    out["G2_symmetric"] = _status(kp.is_symmetric(g2))
    return out


def suite_evenness(n_max: int) -> dict:
    report = correlators.evenness_scan(min(16, 2 * n_max + 4))
    return {"max_weight": report.max_weight, "scanned": report.scanned,
            "odd_partitions": [str(lam) for lam in report.odd]}


def _collect_failures(doc, path="") -> list[str]:
    failures = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            failures += _collect_failures(v, f"{path}/{k}")
    elif doc == "fail":
        failures.append(path)
    return failures


def run_verify(suite: str, n_max: int, workers: int) -> dict:
    if not 1 <= n_max <= hz.MAX_IDENTITY_N:
        raise CapacityError(f"--n-max must be between 1 and {hz.MAX_IDENTITY_N}")
    doc: dict = {"suite": suite, "n_max": n_max}
    if suite in ("hz", "all"):
        doc["hz"] = suite_hz(n_max)
    if suite in ("engines", "all"):
        doc["engines"] = suite_engines(n_max, workers)
    if suite in ("kp", "all"):
        doc["kp"] = suite_kp()
    if suite in ("evenness", "all"):
        doc["evenness"] = suite_evenness(n_max)
    return doc


def cmd_verify(args, out) -> int:
    doc = run_verify(args.suite, args.n_max, args.threads)
    failures = [f for f in _collect_failures(doc) if "/readings/" not in f]
    doc["failures"] = failures
    out.write(dumps(doc) + "\n")
    return EXIT_OK if not failures else EXIT_FAILED


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermkp", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for the gluing enumeration (results do not depend on it)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("correlator", help="<p_lambda>_N by one or several engines")
    p.add_argument("--lambda", dest="lam", required=True, help='partition such as "4,2" ("" is empty)')
    p.add_argument("--engine", choices=ENGINES + ("both", "all"), default="char")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--thooft", action="store_true", help="print in t = N g_s")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_correlator)

    p = sub.add_parser("zfunction", help="coefficients of Z_N")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--basis", choices=("power", "schur"), default="power")
    p.add_argument("--engine", choices=("char", "wick"), default="char")
    p.add_argument("--thooft", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zfunction)

    p = sub.add_parser("free-energy", help="coefficients of F_N = log Z_N")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--engine", choices=("char", "wick", "cumulant"), default="char")
    p.add_argument("--thooft", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_free_energy)

    p = sub.add_parser("npoint", help="n-point function G^(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, help="largest sum of j_i kept (monomials prod xi_i^(-j_i-1))")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_npoint)

    p = sub.add_parser("hz", help="Harer-Zagier table")
    p.add_argument("--table", type=int, nargs=2, metavar=("N_MAX", "K_MAX"), default=(6, 6))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hz)

    p = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    p.add_argument("--suite", choices=("hz", "engines", "kp", "evenness", "all"), default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="face-count histogram of all gluings")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"hermkp: {exc}\n")
        return EXIT_BAD_PARTITION
    except CapacityError as exc:
        err.write(f"hermkp: capacity exceeded: {exc}\n")
        return EXIT_CAPACITY
    except EngineDisagreement as exc:
        err.write(f"hermkp: engines disagree: {exc}\n")
        return EXIT_DISAGREE
    except InconsistencyError as exc:
        err.write(f"hermkp: internal inconsistency: {exc}\n")
        return EXIT_FAILED


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command and return ``(exit status, emitted document)``; diagnostics go to stderr."""
    out = io.StringIO()
    status = main(list(argv), out)
    return status, out.getvalue()


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["build_parser", "main", "run", "npoint_csv", "npoint_document", "npoint_table", "parse_partition", "run_verify"]
