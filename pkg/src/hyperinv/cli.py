"""Batch command-line front end.

Reads a request object {"command": ..., "payload": ...} (or, with --batch, an
array of them) from --input, runs the kernel, and writes a report
{"status", "result"|"error", "provenance"} to --output.  All numbers are
exact strings.  Exit codes: 0 ok, 1 domain error, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .a4 import a4_curve_model, rational_model
from .catalogue import (absolute_invariants, classify_point,
                        covariant_catalogue, vanishing_profile)
from .cyclic import dihedral_invariants, reconstruct_from_u, signature_row
from .errors import DomainError, InputError
from .loci import default_table, load_locus_table, recover_mu, verify_genus
from .scalars import rational_from_str, rational_to_str
from .serialize import (absolute_to_json, dihedral_to_json, form_from_json,
                        form_to_json, invariant_set_to_json,
                        moduli_point_to_json, normal_form_from_json,
                        normal_form_to_json, scalar_from_json)

COMMANDS = ("invariants", "classify", "vanishing", "dihedral", "reconstruct",
            "model", "recover", "verify-locus", "catalogue")


def _need(payload: dict, key: str):
    if key not in payload:
        raise InputError(f"payload missing {key!r}")
    return payload[key]


def _genus(payload: dict) -> int:
    g = _need(payload, "genus")
    if not isinstance(g, int):
        raise InputError(f"genus must be an integer, got {g!r}")
    return g


def _cmd_invariants(payload, ctx):
    form, _ = form_from_json(payload)
    inv = covariant_catalogue(form)
    return {
        "degree": form.degree,
        "invariants": invariant_set_to_json(inv),
        "absolute": absolute_to_json(absolute_invariants(inv)),
    }


def _cmd_classify(payload, ctx):
    form, genus = form_from_json(payload)
    if genus is None:
        raise InputError("classify needs the form's genus")
    return moduli_point_to_json(classify_point(form, genus))


def _cmd_vanishing(payload, ctx):
    form, genus = form_from_json(payload)
    if genus is None:
        raise InputError("vanishing needs the form's genus")
    profile = vanishing_profile(form, genus)
    return {"genus": genus,
            "profile": [{"invariant": name, "vanishes": flag}
                        for name, flag in profile]}


def _cmd_dihedral(payload, ctx):
    nf = normal_form_from_json(payload)
    return dihedral_to_json(dihedral_invariants(nf))


def _cmd_reconstruct(payload, ctx):
    u_raw = _need(payload, "u")
    if not isinstance(u_raw, list):
        raise InputError("u must be an array of rational strings")
    u = tuple(scalar_from_json(s, "Q") for s in u_raw)
    case = _need(payload, "case")
    n = _need(payload, "n")
    nf = reconstruct_from_u(u, case, n, _genus(payload))
    return normal_form_to_json(nf)


def _cmd_model(payload, ctx):
    family = payload.get("family", "rational")
    g = _genus(payload)
    if family == "rational":
        mu = payload.get("mu")
        if mu is None and g != 4:
            raise InputError("rational model needs mu")
        variant = payload.get("variant", "adjudicated")
        if variant not in ("adjudicated", "display"):
            raise InputError(f"unknown variant {variant!r}")
        if mu is not None and not isinstance(mu, str):
            raise InputError("mu must be a rational string")
        form = rational_model(g, rational_from_str(mu) if mu is not None else None,
                              variant=variant)
        return form_to_json(form, genus=g)
    if family == "table2":
        lams = payload.get("lambdas")
        if not isinstance(lams, list):
            raise InputError("table2 model needs a lambdas array")
        form = a4_curve_model(g, [scalar_from_json(s, "Qi_sqrt3") if isinstance(s, list)
                                  else rational_from_str(s) for s in lams])
        return form_to_json(form, genus=g)
    raise InputError(f"unknown model family {family!r}")


def _cmd_recover(payload, ctx):
    g = _genus(payload)
    p_raw = _need(payload, "p")
    if not isinstance(p_raw, list) or not 1 <= len(p_raw) <= 2:
        raise InputError("p must be an array of one or two rational strings")
    point = tuple(rational_from_str(s) for s in p_raw)
    mus = recover_mu(g, point, table=ctx["table"])
    return {"mu": rational_to_str(mus[0]), "all": [rational_to_str(m) for m in mus]}


def _cmd_verify_locus(payload, ctx):
    g = _genus(payload)
    return {"genus": g, "checks": verify_genus(g, table=ctx["table"])}


def _cmd_catalogue(payload, ctx):
    group = _need(payload, "group")
    row = signature_row(group, _genus(payload), payload.get("n"))
    return {"group": row.group, "delta": row.delta,
            "signature": list(row.signature), "involutions": row.involutions}


_HANDLERS = {
    "invariants": _cmd_invariants,
    "classify": _cmd_classify,
    "vanishing": _cmd_vanishing,
    "dihedral": _cmd_dihedral,
    "reconstruct": _cmd_reconstruct,
    "model": _cmd_model,
    "recover": _cmd_recover,
    "verify-locus": _cmd_verify_locus,
    "catalogue": _cmd_catalogue,
}


def _run_one(request, ctx) -> tuple[dict, int]:
    if not isinstance(request, dict):
        raise InputError("each request must be an object")
    command = request.get("command")
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}; expected one of {COMMANDS}")
    payload = request.get("payload")
    if not isinstance(payload, dict):
        raise InputError("payload must be an object")
    start = time.monotonic()
    try:
        result = _HANDLERS[command](payload, ctx)
        status, body, code = "ok", {"result": result}, 0
    except DomainError as exc:
        status = "error"
        body = {"error": {"name": type(exc).__name__, "message": str(exc)}}
        code = 1
    wall_ms = round((time.monotonic() - start) * 1000, 3)
    report = {"status": status,
              "provenance": {"kernel": f"hyperinv {__version__}",
                             "fixture": ctx["table"].version,
                             "wall_ms": wall_ms},
              **body}
    return report, code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hyperinv",
        description="Exact invariants of binary forms and hyperelliptic-curve "
                    "classification; JSON in, JSON out.")
    parser.add_argument("--input", default="-", help="request file or - for stdin")
    parser.add_argument("--output", default="-", help="report file or - for stdout")
    parser.add_argument("--batch", action="store_true",
                        help="input is a JSON array of requests")
    parser.add_argument("--fixture", default=None,
                        help="override the locus-table fixture path")
    parser.add_argument("--pretty", action="store_true", help="indent the output")
    args = parser.parse_args(argv)

    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return 2

    try:
        table = load_locus_table(args.fixture) if args.fixture else default_table()
    except (OSError, KeyError, ValueError) as exc:
        print(f"cannot load fixture: {exc}", file=sys.stderr)
        return 2
    ctx = {"table": table}

    try:
        if args.batch:
            if not isinstance(data, list):
                raise InputError("--batch expects a JSON array of requests")
            reports = []
            exit_code = 0
            for request in data:
                report, code = _run_one(request, ctx)
                reports.append(report)
                exit_code = max(exit_code, code)
            out = reports
        else:
            out, exit_code = _run_one(data, ctx)
    except InputError as exc:
        print(f"malformed request: {exc}", file=sys.stderr)
        return 2

    rendered = json.dumps(out, sort_keys=True, indent=1 if args.pretty else None)
    if args.output == "-":
        print(rendered)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(rendered + "\n")
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
