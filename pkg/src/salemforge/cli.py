"""Command-line front end.

Exit codes: 0 success, 1 negative verdict (not Salem, obstructed, failed
certificate), 2 invalid input, 3 indeterminate, 4 bounded search exhausted,
70 internal arithmetic error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import squarefree_part
from .errors import DomainError, InternalError
from .polynomials import Poly
from .qforms import (DiagForm, OBSTRUCT, find_obstructed, hasse_class, ram_at_infinity_table,
                     signed_det, witt_class)
from .realizer import realize, verify_certificate
from .salem import (SalemQuadratic, SalemQuartic, disc_class, enumerate_salem, fixtures_csv,
                    salem_from_poly, salem_with_disc, sqrt_witness)

SCHEMA = "salemforge/1"
OK, NEGATIVE, INVALID, INDETERMINATE, EXHAUSTED, INTERNAL = 0, 1, 2, 3, 4, 70


def default_bound() -> int:
    raw = os.environ.get("SALEMFORGE_BOUND", "30")
    try:
        b = int(raw)
    except ValueError:
        raise DomainError(f"SALEMFORGE_BOUND={raw!r} is not an integer") from None
    if b < 1:
        raise DomainError("SALEMFORGE_BOUND must be positive")
    return b


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print(text)


def _salem_text(s) -> str:
    if isinstance(s, SalemQuadratic):
        return f"Salem (degree 2, N={s.N}), disc class {disc_class(s)}"
    w = sqrt_witness(s)
    sq = f"square-rootable (k={w.k})" if w else "not square-rootable"
    return f"Salem, {sq}, disc class {disc_class(s)}"


def cmd_verify(args) -> int:
    F = Poly.parse(args.poly)
    s = salem_from_poly(F)
    if not s:
        _emit(args, {"command": "verify", "salem": False, "reason": s.reason},
              f"not Salem: {s.reason}")
        return NEGATIVE
    payload = {"command": "verify", "salem": True, "degree": str(s.degree),
               "disc_class": str(disc_class(s))}
    if isinstance(s, SalemQuartic):
        w = sqrt_witness(s)
        payload["square_rootable"] = w is not None
        if w:
            payload["witness"] = w.to_json()
    _emit(args, payload, _salem_text(s))
    return OK


def _parse_salem(args):
    if args.trace is not None:
        if args.trace < 3:
            return None, f"x^2-{args.trace}x+1 is not Salem (need N >= 3)"
        return SalemQuadratic(args.trace), None
    s = salem_from_poly(Poly.parse(args.poly))
    return (s, None) if s else (None, s.reason)


def cmd_realize(args) -> int:
    s, reason = _parse_salem(args)
    if s is None:
        _emit(args, {"command": "realize", "error": reason}, f"not Salem: {reason}")
        return NEGATIVE
    cert = realize(s)
    data = cert.to_json()
    text = "\n".join([
        _salem_text(s),
        f"realizes lambda^{cert.exponent}: {cert.target.poly}",
        f"alpha = {cert.alpha}",
        f"lemma quartic: {cert.quartic}",
        f"charpoly: {cert.charpoly} = ({cert.target.poly}) * ({cert.quotient})",
        f"translation length {cert.ell_numeric:.12f} (log lambda {cert.log_lambda:.12f})",
        "checks: " + ", ".join(f"{k}={v}" for k, v in cert.checks.items()),
    ])
    _emit(args, {"command": "realize", "certificate": data}, text)
    return OK if cert.ok else NEGATIVE


def cmd_check(args) -> int:
    with open(args.certificate, encoding="utf-8") as fh:
        data = json.load(fh)
    checks = verify_certificate(data.get("certificate", data))
    _emit(args, {"command": "check", "checks": {k: str(v).lower() for k, v in checks.items()}},
          "checks: " + ", ".join(f"{k}={v}" for k, v in checks.items()))
    return OK if all(checks.values()) else NEGATIVE


def cmd_invariants(args) -> int:
    q = DiagForm.parse(args.form)
    payload = {"command": "invariants", "form": [str(e) for e in q.entries],
               "rank": str(q.rank), "det": str(q.det),
               "det_class": str(squarefree_part(q.det)), "signed_det": str(signed_det(q)),
               "admissible": q.is_admissible(), "hasse": str(hasse_class(q)),
               "witt": str(witt_class(q))}
    lines = [f"{q}: rank {q.rank}, det {q.det}, signed det {signed_det(q)}",
             f"Hasse class {hasse_class(q)}, Witt class {witt_class(q)}"]
    if q.is_admissible():
        ram = ram_at_infinity_table(q)
        payload["witt_ramified_at_infinity"] = ram
        lines.append(f"admissible; Witt class {'ramifies' if ram else 'splits'} at infinity")
    else:
        lines.append("not admissible")
    _emit(args, payload, "\n".join(lines))
    return OK


def _report_text(rep) -> str:
    ev = ", ".join(f"{k}={v}" for k, v in rep.evidence.items())
    return f"dim {rep.dim}, {rep.form}, ({rep.salem.a},{rep.salem.b}): {rep.verdict} [{ev}]"


VERDICT_CODE = {"possible": OK, "obstructed": NEGATIVE, "indeterminate": INDETERMINATE}


def cmd_obstruct(args) -> int:
    q = DiagForm.parse(args.form)
    s = salem_from_poly(Poly.parse(args.poly))
    if not isinstance(s, SalemQuartic):
        raise DomainError("--poly must be a degree-4 Salem polynomial"
                          + (f": {s.reason}" if not s else ""))
    rep = OBSTRUCT[args.dim](q, s)
    _emit(args, {"command": "obstruct", "report": rep.to_json()}, _report_text(rep))
    return VERDICT_CODE[rep.verdict]


def cmd_find_salem(args) -> int:
    bound = args.bound or default_bound()
    d = args.disc
    if d < 1 or squarefree_part(d) != d:
        raise DomainError(f"--disc {d} must be a positive squarefree integer")
    if args.square_rootable:
        s = salem_with_disc(d, bound)
    else:
        s = next((t for t, _ in enumerate_salem(bound) if disc_class(t) == -d), None)
    if s is None:
        _emit(args, {"command": "find-salem", "found": False, "bound": str(bound)},
              f"no Salem quartic of disc class {-d} with |a|,|b| <= {bound}")
        return EXHAUSTED
    _emit(args, {"command": "find-salem", "found": True, "salem": s.to_json()},
          f"({s.a},{s.b}): {s.poly}; " + _salem_text(s))
    return OK


def cmd_find_obstructed(args) -> int:
    bound = args.bound or default_bound()
    q = DiagForm.parse(args.form)
    res = find_obstructed(q, args.dim, bound)
    stats = {"scanned": str(res.scanned), "indeterminate": str(res.indeterminate)}
    if res.witness is None:
        _emit(args, {"command": "find-obstructed", "found": False, **stats},
              f"none found within bound {bound} ({res.scanned} scanned, "
              f"{res.indeterminate} indeterminate)")
        return EXHAUSTED
    _emit(args, {"command": "find-obstructed", "found": True, "report": res.report.to_json(),
                 **stats},
          _report_text(res.report) + f"\n({res.scanned} scanned, {res.indeterminate} indeterminate)")
    return OK


def cmd_fixtures(args) -> int:
    if not args.regenerate:
        raise DomainError("fixtures: pass --regenerate")
    text = fixtures_csv(args.bound or default_bound())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INVALID)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="salemforge", description="Salem numbers and arithmetic hyperbolic isometries")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("verify", cmd_verify, "check a Salem polynomial")
    sp.add_argument("--poly", required=True, help="descending coefficients, e.g. 1,-1,-3,-1,1")

    sp = add("realize", cmd_realize, "build a realization certificate")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--trace", type=int, help="N for x^2 - N x + 1")

    sp = add("check", cmd_check, "re-verify a certificate JSON file")
    sp.add_argument("certificate")

    sp = add("invariants", cmd_invariants, "Hasse/Witt invariants of a diagonal form")
    sp.add_argument("--form", required=True, help="diagonal entries, e.g. 1,-1,-1,-1,-1")

    sp = add("obstruct", cmd_obstruct, "test one Salem quartic against one form")
    sp.add_argument("--dim", type=int, choices=(3, 4, 5), required=True)
    sp.add_argument("--form", required=True)
    sp.add_argument("--poly", required=True)

    sp = add("find-salem", cmd_find_salem, "search a Salem quartic by disc class")
    sp.add_argument("--disc", type=int, required=True, help="d > 0; the class searched is -d")
    sp.add_argument("--square-rootable", action="store_true")
    sp.add_argument("--bound", type=int)

    sp = add("find-obstructed", cmd_find_obstructed, "search an obstructed Salem quartic")
    sp.add_argument("--dim", type=int, choices=(3, 4, 5), required=True)
    sp.add_argument("--form", required=True)
    sp.add_argument("--bound", type=int)

    sp = add("fixtures", cmd_fixtures, "write the Salem fixture CSV")
    sp.add_argument("--regenerate", action="store_true")
    sp.add_argument("--bound", type=int)
    sp.add_argument("--out")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 1:
        print("salemforge: error: --bound must be positive", file=sys.stderr)
        return INVALID
    try:
        return args.fn(args)
    except (DomainError, OSError, json.JSONDecodeError) as exc:
        print(f"salemforge: error: {exc}", file=sys.stderr)
        return INVALID
    except InternalError as exc:
        print(f"salemforge: internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
