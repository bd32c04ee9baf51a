"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails (a violation, a
failing minor, disagreeing oracles), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import groth, measures, special, tableaux, tnn
from .basis import BasisVector
from .intervals import Interval
from .polyring import CapError
from .shapes import (
    EMPTY,
    Partition,
    format_partition,
    parse_partition,
    partition_key,
    partitions_upto,
)

EPILOG = """\
acceptance checks as single invocations:
  A1  grothpos product --mu 1 --nu 1
  A2  grothpos fmu --mu 3,1,1            (repeat for each mu with at most 3 parts, size <= 5)
  A3  grothpos count d --nu 3,2 --mu 1,1 ; grothpos count f --mu 2,2,1 --lam 2,1
  A4  grothpos expand --family Gtilde --outer 2,1 --inner 1 --nvars 4 --degree 5
  A5  grothpos toeplitz --params P.json --source gamma --size 6 --order-cap 4
  A6  grothpos scan schur --params P.json --source induced --max-size 6
  A7  grothpos harmonic --params norm.json --rank 6
  A8  grothpos specialize --params P.json --family signed --max-size 6
  A9  grothpos duality --degree 5
  A10 grothpos measure corner --spec plancherel --n 6
  A11 grothpos measure plancherel-hecke --m 5 --n 5
  A12 grothpos scan schur --params psi_half.json --max-size 2
  A13 grothpos specialize --params pi_one.json --family gtilde --max-size 1 --truncation 12
"""


class UsageError(Exception):
    pass


# --- serialization --------------------------------------------------------------

def fmt_value(v):
    if isinstance(v, Interval):
        return {"lo": fmt_value(v.lo), "hi": fmt_value(v.hi)}
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def vector_rows(vec) -> list[dict]:
    items = vec.items() if hasattr(vec, "items") else vec
    return [{"partition": format_partition(k), "value": fmt_value(v)}
            for k, v in sorted(items, key=lambda kv: partition_key(kv[0]))]


def emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return
    for key, val in payload.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            for row in val:
                out.write(key + "\t" + "\t".join(_tsv_cell(row[c]) for c in row) + "\n")
        else:
            out.write(f"{key}\t{_tsv_cell(val)}\n")


def _tsv_cell(v) -> str:
    if isinstance(v, dict):
        return f"[{v['lo']},{v['hi']}]" if set(v) == {"lo", "hi"} else json.dumps(v, ensure_ascii=False)
    if isinstance(v, (list, tuple)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


# --- argument helpers ------------------------------------------------------------

def part(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


def parse_vector(text: str, basis: str) -> BasisVector:
    """``"2,1:1;1,1:-1/2"``; the partition ``-`` is the empty one."""
    data = {}
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        if ":" not in chunk:
            raise UsageError(f"vector entry {chunk!r} is not of the form partition:coefficient")
        key, val = chunk.rsplit(":", 1)
        try:
            data[part(key)] = Fraction(val)
        except ValueError:
            raise UsageError(f"bad coefficient {val!r}") from None
    return BasisVector(basis, data)


def load_params(path: str) -> tuple[special.EdreiThomaParams, str]:
    """Parameter JSON, optionally with ``"family": "lambda" | "g"``."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read parameters: {exc}") from None
    family = data.pop("family", "lambda")
    if family not in ("lambda", "g"):
        raise UsageError("parameter family must be 'lambda' or 'g'")
    try:
        return special.EdreiThomaParams.from_json(data), family
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad parameters: {exc}") from None


def default_cap(*shapes: Partition) -> int:
    return sum(p.size for p in shapes) + 6


# --- subcommands ------------------------------------------------------------------

def cmd_expand(a) -> tuple[dict, int]:
    outer, inner = part(a.outer), part(a.inner)
    cap = a.degree or default_cap(outer)
    nvars = a.nvars or cap
    poly = groth.realize(groth.GrothFamilyElement(a.family, outer, inner), nvars, cap)
    payload = {"family": a.family, "outer": format_partition(outer), "inner": format_partition(inner),
               "nvars": nvars, "degree": cap, "monomial": vector_rows(poly.items())}
    if a.basis != "monomial":
        from .polyring import to_schur
        if nvars < cap:
            raise UsageError("a basis expansion needs --nvars >= --degree")
        vec = to_schur(poly) if a.basis == "schur" else groth.poly_to_gtilde(poly)
        payload[a.basis] = vector_rows(vec)
    return payload, 0


def cmd_convert(a) -> tuple[dict, int]:
    vec = parse_vector(a.vector, a.source)
    cap = a.cap or (max((k.size for k in vec), default=0) + 6)
    route = (a.source, a.target)
    if route == ("schur", "gtilde"):
        out = groth.schur_to_gtilde(vec, cap)
    elif route == ("gtilde", "schur"):
        out = groth.gtilde_to_schur(vec, cap)
    elif route == ("gdual", "schur"):
        out = groth.gdual_to_schur(vec)
    elif route == ("schur", "gdual"):
        out = groth.schur_to_gdual(vec)
    elif route == ("gtilde", "gtilde") or route == ("schur", "schur") or route == ("gdual", "gdual"):
        out = vec
    else:
        raise UsageError(f"conversion {a.source} -> {a.target} is not supported")
    return {"from": a.source, "to": a.target, "cap": cap, "vector": vector_rows(out)}, 0


def cmd_product(a) -> tuple[dict, int]:
    mu, nu = part(a.mu), part(a.nu)
    vec = groth.structure_constants(mu, nu, a.cap, hard_limit=a.hard_limit)
    ok = all(c > 0 and c.denominator == 1 for _, c in vec.items())
    return {"mu": format_partition(mu), "nu": format_partition(nu), "nonnegative_integer": ok,
            "expansion": vector_rows(vec)}, 0 if ok else 1


def cmd_pieri(a) -> tuple[dict, int]:
    lam = part(a.lam)
    vec = groth.pieri(a.k, lam)
    payload = {"k": a.k, "lam": format_partition(lam), "expansion": vector_rows(vec)}
    code = 0
    if a.verify:
        other = groth.structure_constants(Partition([a.k]), lam)
        payload["agrees_with_product"] = other == vec
        code = 0 if other == vec else 1
    return payload, code


def cmd_fmu(a) -> tuple[dict, int]:
    mu = part(a.mu)
    det, dele, ok = groth.f_mu(mu, a.cap)
    return {"mu": format_partition(mu), "determinant": vector_rows(det), "delegant": vector_rows(dele),
            "agree": ok}, 0 if ok else 1


def cmd_duality(a) -> tuple[dict, int]:
    ok = groth.duality_check(a.degree)
    return {"degree": a.degree, "identity": ok}, 0 if ok else 1


def cmd_count(a) -> tuple[dict, int]:
    params = {}
    for name in ("lam", "mu", "nu"):
        val = getattr(a, name)
        if val is not None:
            params[name] = part(val)
    for name in ("n", "m"):
        val = getattr(a, name)
        if val is not None:
            params[name] = val
    try:
        table = tableaux.count(a.family, **params)
    except KeyError as exc:
        raise UsageError(f"family {a.family!r} needs --{exc.args[0]}") from None
    shown = {k: (format_partition(v) if isinstance(v, Partition) else v) for k, v in params.items()}
    return {"family": a.family, "params": shown, "value": str(table.value)}, 0


def _h_values(p: special.EdreiThomaParams, family: str, n: int) -> list:
    return special.lambda_h_values(p, n) if family == "lambda" else special.g_spec_h_values(p, n)


def cmd_specialize(a) -> tuple[dict, int]:
    p, pfam = load_params(a.params)
    keys = [k for k in partitions_upto(a.max_size)]
    if a.family == "schur":
        hv = _h_values(p, pfam, max(a.max_size, 1))
        rows = [(k, special.schur_value(hv, k)) for k in keys]
    elif a.family == "gtilde":
        spec = special.GammaSpec.from_params(p, truncation=a.truncation)
        rows = [(k, special.gamma_value(spec, k)) for k in keys]
    elif a.family == "induced":
        spec = special.GammaSpec.from_params(p, truncation=a.truncation)
        hv = special.induced_schur_spec(spec, max(a.max_size, 1))
        rows = [(k, special.schur_value(hv, k)) for k in keys]
    elif a.family == "gdual":
        hv = _h_values(p, pfam, max(a.max_size, 1))
        rows = [(k, measures.g_value(hv, k)) for k in keys]
    else:  # signed
        vals = special.signed_g_values(p, a.max_size)
        rows = [(Partition([n]) if n else EMPTY, v) for n, v in enumerate(vals)]
        chain = special.signed_monotone_chain(vals)
        payload = {"family": "signed", "values": vector_rows(rows), "monotone_chain": chain,
                   "gcond": fmt_value(special.gcond_value(p))}
        return payload, 0 if chain else 1
    return {"family": a.family, "values": vector_rows(rows)}, 0


def cmd_toeplitz(a) -> tuple[dict, int]:
    if a.values:
        try:
            vals = [Fraction(t) for t in a.values.split(",")]
        except ValueError:
            raise UsageError(f"bad band values {a.values!r}") from None
    elif a.params:
        p, pfam = load_params(a.params)
        if a.source == "gamma":
            vals = special.induced_schur_spec(special.GammaSpec.from_params(p, truncation=a.truncation), a.size - 1)
        else:
            vals = _h_values(p, pfam, a.size - 1)
    else:
        raise UsageError("give --values or --params")
    size = a.size or len(vals)
    try:
        band = tnn.ToeplitzBand(tuple(vals), size)
        res = tnn.is_totally_nonnegative(band, min(a.order_cap, size))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"band": [fmt_value(v) for v in band.values], "size": size, "order_cap": a.order_cap,
               "status": res.status, "minors_checked": res.checked, "log_concave": tnn.log_concavity(band)}
    if res.witness:
        rows, cols, value = res.witness
        payload["witness"] = {"rows": list(rows), "cols": list(cols), "value": fmt_value(value)}
    return payload, {"pass": 0, "fail": 1, "indeterminate": 1}[res.status]


def cmd_harmonic(a) -> tuple[dict, int]:
    p, _ = load_params(a.params)
    spec = special.GammaSpec.from_params(p, truncation=a.truncation)
    res = measures.harmonicity_check(special.gamma_valuator(spec), a.rank)
    payload = {"rank": a.rank, "passed": res.passed}
    if res.failure:
        lam, lhs, rhs = res.failure
        payload["failure"] = {"partition": format_partition(lam), "value": fmt_value(lhs), "successor_sum": fmt_value(rhs)}
    return payload, 0 if res.passed else 1


def cmd_measure(a) -> tuple[dict, int]:
    if a.kind == "plancherel-hecke":
        if a.m is None:
            raise UsageError("plancherel-hecke needs --m")
        table = measures.plancherel_hecke(a.m, a.n)
    elif a.kind == "hecke":
        if not a.params:
            raise UsageError("hecke needs --params")
        p, _ = load_params(a.params)
        table = measures.hecke_measure(special.GammaSpec.from_params(p, truncation=a.truncation), a.n)
    else:
        if a.params:
            p, pfam = load_params(a.params)
            hv = _h_values(p, pfam, a.n)
        elif a.spec == "ones":
            hv = [Fraction(1)] * (a.n + 1)
        else:
            hv = measures.plancherel_h_values(a.n)
        table = measures.corner_measure(hv, a.n)
    ok = table.is_normalized() and table.nonnegative()
    return {"kind": a.kind, "meta": {k: fmt_value(v) if not isinstance(v, str) else v for k, v in table.meta.items()},
            "total": fmt_value(table.total()), "normalized": ok, "table": table.to_json()}, 0 if ok else 1


def cmd_scan(a) -> tuple[dict, int]:
    p, pfam = load_params(a.params)
    if a.family == "schur":
        if a.source == "induced":
            spec = special.GammaSpec.from_params(p, truncation=a.truncation)
            hv = special.induced_schur_spec(spec, max(a.max_size, 1))
        else:
            hv = _h_values(p, pfam, max(a.max_size, 1))
        val = special.schur_valuator(hv)
    elif a.family == "gtilde":
        val = special.gamma_valuator(special.GammaSpec.from_params(p, truncation=a.truncation))
    else:
        hv = _h_values(p, pfam, max(a.max_size, 1))
        val = lambda lam: measures.g_value(hv, lam)
    bad = special.positivity_scan(val, a.max_size)
    return {"family": a.family, "max_size": a.max_size, "violations": vector_rows(bad)}, 1 if bad else 0


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grothpos", description=__doc__.splitlines()[0],
                                 epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--format", choices=("json", "tsv"), default="json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    s = sub.add_parser("expand", help="realize a family element as a truncated polynomial")
    s.add_argument("--family", choices=groth.FAMILIES, default="Gtilde")
    s.add_argument("--outer", required=True)
    s.add_argument("--inner", default="-")
    s.add_argument("--nvars", type=positive)
    s.add_argument("--degree", type=positive)
    s.add_argument("--basis", choices=("monomial", "schur", "gtilde"), default="monomial")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("convert", help="change basis of a vector like '2,1:1;1,1:-1'")
    s.add_argument("--from", dest="source", choices=("schur", "gtilde", "gdual"), required=True)
    s.add_argument("--to", dest="target", choices=("schur", "gtilde", "gdual"), required=True)
    s.add_argument("--vector", required=True)
    s.add_argument("--cap", type=positive)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("product", help="structure constants of G̃_mu · G̃_nu")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--cap", type=positive)
    s.add_argument("--hard-limit", type=positive, default=groth.DEFAULT_HARD_LIMIT)
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("pieri", help="Pieri rule G̃_(k) · G̃_lam")
    s.add_argument("--k", type=positive, required=True)
    s.add_argument("--lam", required=True)
    s.add_argument("--verify", action="store_true", help="cross-check against the product routine")
    s.set_defaults(func=cmd_pieri)

    s = sub.add_parser("duality", help="Hall pairing of G_lam against g_kappa on the block |lam|, |kappa| <= degree")
    s.add_argument("--degree", type=positive, default=5)
    s.set_defaults(func=cmd_duality)

    s = sub.add_parser("fmu", help="F_mu by determinant and by delegant counts")
    s.add_argument("--mu", required=True)
    s.add_argument("--cap", type=positive)
    s.set_defaults(func=cmd_fmu)

    s = sub.add_parser("count", help="tableau counts")
    s.add_argument("family", choices=tableaux.FAMILIES)
    s.add_argument("--lam")
    s.add_argument("--mu")
    s.add_argument("--nu")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("specialize", help="values of a specialization over all partitions up to a size")
    s.add_argument("--params", required=True)
    s.add_argument("--family", choices=("schur", "gtilde", "induced", "gdual", "signed"), default="schur")
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--truncation", type=positive, default=special.DEFAULT_TRUNCATION)
    s.set_defaults(func=cmd_specialize)

    s = sub.add_parser("toeplitz", help="Toeplitz band and total-nonnegativity verdict")
    s.add_argument("--values", help="comma-separated a_0,a_1,... (a_0 must be 1)")
    s.add_argument("--params")
    s.add_argument("--source", choices=("h", "gamma"), default="h",
                   help="h: the spec's own h-values; gamma: normalized H-band of the extended spec")
    s.add_argument("--size", type=positive, default=6)
    s.add_argument("--order-cap", type=positive, default=4)
    s.add_argument("--truncation", type=positive, default=special.DEFAULT_TRUNCATION)
    s.set_defaults(func=cmd_toeplitz)

    s = sub.add_parser("harmonic", help="harmonicity of λ -> G̃_λ(φ) on the filtered Young graph")
    s.add_argument("--params", required=True)
    s.add_argument("--rank", type=positive, default=6)
    s.add_argument("--truncation", type=positive, default=special.DEFAULT_TRUNCATION)
    s.set_defaults(func=cmd_harmonic)

    s = sub.add_parser("measure", help="probability measures on partitions")
    s.add_argument("kind", choices=("corner", "hecke", "plancherel-hecke"))
    s.add_argument("--n", type=positive, required=True)
    s.add_argument("--m", type=positive)
    s.add_argument("--params")
    s.add_argument("--spec", choices=("plancherel", "ones"), default="plancherel")
    s.add_argument("--truncation", type=positive, default=special.DEFAULT_TRUNCATION)
    s.set_defaults(func=cmd_measure)

    s = sub.add_parser("scan", help="search for negative values")
    s.add_argument("family", choices=("schur", "gtilde", "gdual"))
    s.add_argument("--params", required=True)
    s.add_argument("--source", choices=("h", "induced"), default="h")
    s.add_argument("--max-size", type=positive, default=4)
    s.add_argument("--truncation", type=positive, default=special.DEFAULT_TRUNCATION)
    s.set_defaults(func=cmd_scan)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapError as exc:
        print(f"error: {exc} (try a cap of {exc.suggested_cap})", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(payload, args.format, out)
    return code


def main_entry() -> None:
    sys.exit(main())
