"""Command line front end.

Exit codes: 0 on success, 2 on rejected input (message on stderr), 1 when two
independent dimension formulas disagree, which would be a bug.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import classify as C
from . import hitchin as H
from . import serialize as S
from . import tables
from .differentials import dim_regular_differentials
from .errors import HitchinError, RouteDisagreement, UnsupportedInputError
from .liealg import Family, SplitGroup
from .orbifold import (
    OrbifoldSignature,
    check,
    euler_characteristic,
    is_closed,
    is_orientable,
)

SUBCOMMANDS = ("chi", "dim", "base", "bounds", "expected", "classify", "table")
MODES = ("zero-dim", "target", "vanishing", "single", "cyclic", "zariski")
DEFAULT_HORIZON = 60


class UsageError(HitchinError):
    pass


@dataclass(frozen=True)
class Request:
    subcommand: str
    signature: Optional[OrbifoldSignature] = None
    group: Optional[SplitGroup] = None
    format: str = "text"
    options: dict = field(default_factory=dict)


def _orders(flag):
    def parse(text):
        text = text.strip()
        if not text:
            return ()
        try:
            values = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects comma separated integers") from None
        return values

    return parse


def _group(text):
    try:
        return SplitGroup.parse(text)
    except HitchinError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _add_signature_flags(p, with_group=True):
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--nonorientable", action="store_true", help="underlying surface is non-orientable")
    p.add_argument("--mirror-circles", type=int, default=0)
    p.add_argument("--boundary-circles", type=int, default=0)
    p.add_argument("--full-boundaries", type=int, default=0)
    p.add_argument("--mixed-circles", type=int, default=0)
    p.add_argument("--cones", type=_orders("--cones"), default=())
    p.add_argument("--corners", type=_orders("--corners"), default=())
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--disk", action="store_true", help="genus 0 with one mirror circle")
    shape.add_argument("--sphere", action="store_true", help="genus 0, no boundary")
    if with_group:
        p.add_argument("--group", type=_group, required=True)


def _add_format(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbihitchin",
        description="Exact dimension counts for Hitchin components of 2-orbifold groups.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("chi", help="orbifold Euler characteristic")
    _add_signature_flags(p, with_group=False)
    _add_format(p)
    for name, text in (
        ("dim", "dimension of the Hitchin component"),
        ("base", "per-degree dimensions of the Hitchin base"),
        ("bounds", "bounds on -chi(Y) dim G - dim Hit"),
        ("expected", "expected dimension for PGL(n), orientable closed Y"),
    ):
        p = sub.add_parser(name, help=text)
        _add_signature_flags(p)
        _add_format(p)
    p = sub.add_parser("classify", help="classify orbifolds by Hitchin base dimensions")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--group", type=_group)
    p.add_argument("--subgroup", type=_group)
    p.add_argument("--target", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument(
        "--include-nonorientable", action="store_true", help="also list non-orientable orbifolds"
    )
    p.add_argument("--expand", type=int, metavar="HORIZON", help="list every signature up to HORIZON")
    p.add_argument("--workers", type=int, default=1)
    _add_format(p)
    p = sub.add_parser("table", help="regenerate reference table 1..5")
    p.add_argument("number", type=int, choices=range(1, 6))
    _add_format(p)
    return parser


def _signature_from(ns) -> OrbifoldSignature:
    if ns.disk and ns.genus not in (None, 0):
        raise UsageError("--disk conflicts with --genus")
    if ns.sphere and (ns.genus not in (None, 0) or ns.mirror_circles):
        raise UsageError("--sphere conflicts with --genus/--mirror-circles")
    mirror_circles = ns.mirror_circles + (1 if ns.disk else 0)
    if ns.corners and mirror_circles + ns.mixed_circles == 0:
        raise UsageError("--corners requires mirror boundary (--mirror-circles, --mixed-circles or --disk)")
    sig = OrbifoldSignature(
        genus=ns.genus or 0,
        underlying_orientable=not ns.nonorientable,
        mirror_circles=mirror_circles,
        boundary_circles=ns.boundary_circles,
        full_boundaries=ns.full_boundaries,
        mixed_circles=ns.mixed_circles,
        cones=ns.cones,
        corners=ns.corners,
    )
    return check(sig)


def _horizon_cap() -> int:
    raw = os.environ.get("HITCHIN_MAX_HORIZON", str(DEFAULT_HORIZON))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HITCHIN_MAX_HORIZON must be an integer (got {raw!r})") from None


def parse_args(argv) -> Request:
    """Parse argv into a validated Request; raises UsageError on bad input."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    cmd = ns.subcommand
    if cmd == "table":
        return Request(cmd, format=ns.format, options={"number": ns.number})
    if cmd == "classify":
        opts = {
            "mode": ns.mode,
            "orientable_only": not ns.include_nonorientable,
            "workers": ns.workers,
        }
        if ns.mode in ("zero-dim", "target", "single", "cyclic", "zariski") and ns.group is None:
            raise UsageError(f"--group is required for --mode {ns.mode}")
        if ns.mode == "target":
            if ns.target is None or ns.target < 0:
                raise UsageError("--target must be a nonnegative integer for --mode target")
            opts["target"] = ns.target
        if ns.mode == "zero-dim":
            opts["target"] = 0
        if ns.mode == "vanishing":
            if ns.degree is None:
                raise UsageError("--degree is required for --mode vanishing")
            opts["degree"] = ns.degree
        if ns.mode == "zariski":
            if ns.subgroup is None:
                raise UsageError("--subgroup is required for --mode zariski")
            opts["subgroup"] = ns.subgroup
        if ns.expand is not None:
            cap = _horizon_cap()
            if not 2 <= ns.expand <= cap:
                raise UsageError(f"--expand must lie in 2..{cap} (HITCHIN_MAX_HORIZON)")
            opts["expand"] = ns.expand
        return Request(cmd, group=ns.group, format=ns.format, options=opts)
    sig = _signature_from(ns)
    return Request(cmd, signature=sig, group=getattr(ns, "group", None), format=ns.format)


# ------------------------------------------------------------------ output


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _request_dict(req: Request) -> dict:
    out = {"subcommand": req.subcommand}
    if req.signature is not None:
        out["sig"] = S.signature_to_dict(req.signature)
    if req.group is not None:
        out["group"] = str(req.group)
    for k, v in req.options.items():
        out[k] = str(v) if isinstance(v, SplitGroup) else v
    return out


def _envelope(req, result, routes) -> str:
    doc = {
        "request": _request_dict(req),
        "result": result,
        "provenance": {"formula_routes_checked": routes},
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _dim_with_routes(Y, G):
    value, routes = H.checked_dim_hitchin(Y, G)
    alt = H.dim_hitchin_alternate(Y, G)
    if alt != value:
        raise RouteDisagreement(f"linear form gives {alt}, Hitchin base gives {value}")
    routes = routes + ["dimension_polynomial"]
    if is_closed(Y) and is_orientable(Y) and G.family is Family.PGL:
        exp = H.expected_dim_pgl(Y, G.param)
        if exp != value:
            raise RouteDisagreement(f"expected dimension {exp} differs from {value}")
        routes.append("expected_dimension")
    return value, routes


def _scalar(req, name, value, routes, result=None) -> str:
    if req.format == "json":
        return _envelope(req, result if result is not None else value, routes)
    if req.format == "csv":
        return _csv([[name], [value]])
    return f"{value}\n"


def _run_chi(req):
    chi = S.fraction_to_str(euler_characteristic(req.signature))
    return _scalar(req, "chi", chi, ["euler_characteristic"])


def _run_dim(req):
    value, routes = _dim_with_routes(req.signature, req.group)
    return _scalar(req, "dim", value, routes)


def _run_expected(req):
    G = req.group
    if G.family is not Family.PGL:
        raise UnsupportedInputError("expected dimension needs a pgl:<n> group")
    value = H.expected_dim_pgl(req.signature, G.param)
    actual = H.dim_hitchin(req.signature, G)
    if value != actual:
        raise RouteDisagreement(f"expected dimension {value} differs from {actual}")
    return _scalar(req, "expected_dim", value, ["expected_dimension", "hitchin_base"])


def _run_base(req):
    Y, G = req.signature, req.group
    routes = []
    if not is_closed(Y):
        from .orbifold import mirror

        Y = mirror(Y)
        routes.append("mirror")
    prof = H.base_profile(Y, G)
    for d, v in prof.entries:
        assert dim_regular_differentials(Y, d).real_dim == v
    routes.append("hitchin_base")
    if req.format == "json":
        return _envelope(req, S.profile_to_dict(prof), routes)
    if req.format == "csv":
        return _csv([["degree", "real_dim"]] + [list(e) for e in prof.entries] + [["total", prof.total]])
    lines = [f"degree {d}: {v}" for d, v in prof.entries] + [f"total: {prof.total}"]
    return "\n".join(lines) + "\n"


def _run_bounds(req):
    Y, G = req.signature, req.group
    b = H.approximation_bounds(Y, G)
    r = H.dimension_defect(Y, G)
    if not b.lower <= r <= b.upper:
        raise RouteDisagreement(f"defect {r} outside [{b.lower}, {b.upper}]")
    lo, up, rs = (S.fraction_to_str(x) for x in (b.lower, b.upper, r))
    if req.format == "json":
        result = {**S.bounds_to_dict(b), "defect": rs}
        return _envelope(req, result, ["approximation_bounds", "hitchin_base"])
    if req.format == "csv":
        return _csv([["lower", "upper", "defect"], [lo, up, rs]])
    return f"lower: {lo}\nupper: {up}\ndefect: {rs}\n"


def _family_sets(req):
    """Return [(label, FamilySet)] for a classify request."""
    o = req.options
    mode, G, w = o["mode"], req.group, o["workers"]
    if mode in ("zero-dim", "target"):
        return [("", C.classify_target_dim(G, o["target"], o["orientable_only"], w))]
    if mode == "vanishing":
        return [("", C.classify_vanishing_differentials(o["degree"], o["orientable_only"], w))]
    if mode == "single":
        return [
            (f"degree {d}", fs)
            for d, fs in C.classify_single_differential(G, o["orientable_only"], w)
        ]
    if mode == "cyclic":
        return [(f"{tag} degree {d}", fs) for tag, d, fs in C.classify_cyclic(G, w)]
    return [("", C.classify_zariski(o["subgroup"], G, w))]


def _run_classify(req):
    sets = _family_sets(req)
    horizon = req.options.get("expand")
    if req.format == "json":
        result = []
        for label, fs in sets:
            entry = {"label": label, **S.familyset_to_dict(fs)}
            if horizon is not None:
                entry["expanded"] = [
                    S.signature_to_dict(s)
                    for s in sorted(fs.expand(horizon), key=_sig_key)
                ]
            result.append(entry)
        return _envelope(req, result, ["classification"])
    if req.format == "csv":
        rows = [["label", "underlying_orientable", "genus", "mirror_circles", "cones", "corners"]]
        for label, fs in sets:
            if horizon is None:
                for f in fs:
                    s = f.surface
                    rows.append([
                        label, s.underlying_orientable, s.genus, s.mirror_circles,
                        " ".join(map(str, f.cones)), " ".join(map(str, f.corners)),
                    ])
            else:
                for sig in sorted(fs.expand(horizon), key=_sig_key):
                    rows.append([
                        label, sig.underlying_orientable, sig.genus, sig.mirror_circles,
                        " ".join(map(str, sig.cones)), " ".join(map(str, sig.corners)),
                    ])
        return _csv(rows)
    lines = []
    for label, fs in sets:
        if label:
            lines.append(f"[{label}]")
        items = (
            [str(f) for f in fs]
            if horizon is None
            else [_sig_text(s) for s in sorted(fs.expand(horizon), key=_sig_key)]
        )
        lines.extend(items or ["(none)"])
    return "\n".join(lines) + "\n"


def _sig_key(sig):
    return (
        not sig.underlying_orientable, sig.genus, sig.mirror_circles,
        len(sig.cones), sig.cones, len(sig.corners), sig.corners,
    )


def _sig_text(sig):
    kind = "orientable" if sig.underlying_orientable else "non-orientable"
    text = f"{kind} genus {sig.genus}"
    if sig.mirror_circles:
        text += f", {sig.mirror_circles} mirror circle(s)"
    text += ", cones (" + ",".join(map(str, sig.cones)) + ")"
    if sig.corners:
        text += ", corners (" + ",".join(map(str, sig.corners)) + ")"
    return text


def _run_table(req):
    n = req.options["number"]
    rows = tables.table_rows(n)
    header = tables.HEADERS[n]
    if req.format == "json":
        return _envelope(req, [dict(zip(header, r)) for r in rows], [f"table{n}"])
    if req.format == "csv":
        return _csv([header] + rows)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n"


_HANDLERS = {
    "chi": _run_chi,
    "dim": _run_dim,
    "base": _run_base,
    "bounds": _run_bounds,
    "expected": _run_expected,
    "classify": _run_classify,
    "table": _run_table,
}


def run(req: Request):
    """Execute a request; returns ``(exit_code, stdout_text, stderr_text)``."""
    try:
        return 0, _HANDLERS[req.subcommand](req), ""
    except RouteDisagreement as e:
        return 1, "", f"internal error: {e}\n"
    except HitchinError as e:
        return 2, "", f"error: {e}\n"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_args(argv)
    except HitchinError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    code, out, err = run(req)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
