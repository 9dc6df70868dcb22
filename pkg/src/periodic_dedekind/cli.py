"""Command-line interface: ``periodic-dedekind {compute,verify,sequence,list-identities}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

Settings can also come from a flat ``key = value`` file whose path is in
the environment variable ``PERIODIC_DEDEKIND_CONFIG``; command-line flags
win over the file.  Recognised keys::

    format     = json | text      (default: json for verify, text otherwise)
    workers    = 1..64
    order_cap  = 1..5000          (largest cyclotomic order allowed)
    max_terms  = 1..100000000     (terms per hand-summed series)
    timings    = true | false     (false prints elapsed_ms as null)
    tolerance.<ID> = <float>      (numeric identities only)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from . import __version__
from .errors import (
    AccuracyError,
    CapacityError,
    DomainError,
    ParseError,
    PoleError,
    UnknownIdentityError,
)
from .exact import Cyclotomic, embed, format_literal, order_cap

CONFIG_ENV = "PERIODIC_DEDEKIND_CONFIG"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    format: str | None = None  # None: the command's own default
    workers: int = 1
    order_cap: int = 360
    max_terms: int = 200_000
    timings: bool = True
    tolerances: dict = field(default_factory=dict)

    def validate(self) -> "CliConfig":
        if self.format not in (None, "json", "text"):
            raise ConfigError(f"format must be json or text, got {self.format!r}")
        if not 1 <= self.workers <= 64:
            raise ConfigError(f"workers must lie in 1..64, got {self.workers}")
        if not 1 <= self.order_cap <= 5000:
            raise ConfigError(f"order_cap must lie in 1..5000, got {self.order_cap}")
        if not 1 <= self.max_terms <= 100_000_000:
            raise ConfigError(f"max_terms must lie in 1..100000000, got {self.max_terms}")
        for key, tol in self.tolerances.items():
            if not 0 < tol <= 1:
                raise ConfigError(f"tolerance for {key} must lie in (0, 1], got {tol}")
        return self


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


def _int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {text!r}") from None


def _float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {text!r}") from None


def parse_config(text: str, base: CliConfig | None = None) -> CliConfig:
    cfg = base or CliConfig()
    updates: dict = {}
    tols = dict(cfg.tolerances)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = key.strip(), value.strip()
        if key == "format":
            updates["format"] = value
        elif key in ("workers", "order_cap", "max_terms"):
            updates[key] = _int(key, value)
        elif key == "timings":
            updates["timings"] = _bool(value)
        elif key.startswith("tolerance."):
            tols[key[len("tolerance."):]] = _float(key, value)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    return replace(cfg, tolerances=tols, **updates).validate()


def load_config(environ=os.environ) -> CliConfig:
    path = environ.get(CONFIG_ENV)
    if not path:
        return CliConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    return parse_config(text)


def apply_flags(cfg: CliConfig, args: argparse.Namespace) -> CliConfig:
    updates = {}
    for name in ("format", "workers", "order_cap", "max_terms"):
        value = getattr(args, name, None)
        if value is not None:
            updates[name] = value
    if getattr(args, "no_timings", False):
        updates["timings"] = False
    tols = dict(cfg.tolerances)
    for item in getattr(args, "tolerance", None) or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--tolerance expects ID=VALUE, got {item!r}")
        tols[key.strip()] = _float(key, value)
    return replace(cfg, tolerances=tols, **updates).validate()


# ---------------------------------------------------------------------------
# output helpers


def fmt_complex(w: complex) -> str:
    # drop rounding noise such as cos(pi/2) ~ 6e-17
    eps = 1e-14 * max(1.0, abs(w))
    w = complex(0.0 if abs(w.real) < eps else w.real, 0.0 if abs(w.imag) < eps else w.imag)
    if w.imag == 0:
        return format(w.real, ".15g")
    if w.real == 0:
        return format(w.imag, ".15g") + "i"
    return f"{w.real:.15g}{w.imag:+.15g}i"


def emit(out, cfg: CliConfig, payload: dict, text: str) -> None:
    if cfg.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


# ---------------------------------------------------------------------------
# compute


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational number, got {text!r}") from None


def _complex(text: str) -> complex:
    t = text.strip().replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        pass
    try:
        return complex(float(Fraction(text)))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a complex number, got {text!r}") from None


def _auto_int(text: str | None):
    if text is None or text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer or 'auto', got {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"{args.kind} needs --{' --'.join(missing)}")


def compute_value(args):
    """Dispatch ``compute``; returns an exact value or a complex number."""
    from . import analytic, bernoulli, dedekind
    from .sequences import character, gauss_sum, make_sequence

    kind = args.kind
    if kind in ("classical", "s2", "s3"):
        _need(args, "d", "c")
        fn = {"classical": dedekind.classical_s, "s2": dedekind.hardy_s2, "s3": dedekind.hardy_s3}[kind]
        return fn(args.d, args.c)
    if kind in ("periodic", "generalized"):
        _need(args, "d", "c", "A", "B")
        A, B = make_sequence(args.A), make_sequence(args.B)
        kw = dict(b=_auto_int(args.b), a=_auto_int(args.a))
        if kind == "periodic":
            return dedekind.periodic_dedekind(args.d, args.c, A, B, args.family, **kw)
        x = _fraction(args.x or "0")
        y = _fraction(args.y or "0")
        return dedekind.generalized_dedekind(args.d, args.c, A, B, args.family, x, y, **kw)
    if kind == "star":
        _need(args, "d", "c", "k", "i1", "i2")
        return dedekind.alternating_char_sum(args.d, args.c, character(args.k, args.i2), character(args.k, args.i1))
    if kind == "P":
        _need(args, "n", "seq")
        return bernoulli.periodic_P(args.n, _fraction(args.x or "0"), make_sequence(args.seq), args.alpha or 1)
    if kind == "B":
        _need(args, "n", "seq")
        return bernoulli.periodic_B(args.n, make_sequence(args.seq))
    if kind == "gauss":
        _need(args, "n", "k", "i")
        return gauss_sum(args.n, character(args.k, args.i))
    if kind == "L":
        _need(args, "s", "seq")
        return analytic.periodic_L(_complex(args.s), make_sequence(args.seq), args.alpha or 1, _fraction(args.theta or "0"))
    raise DomainError(f"unknown compute kind {kind!r}")


def cmd_compute(args, cfg: CliConfig, out) -> int:
    with order_cap(cfg.order_cap):
        value = compute_value(args)
    if isinstance(value, complex):
        payload = {"kind": args.kind, "value": None, "approx": fmt_complex(value)}
        emit(out, cfg, payload, fmt_complex(value))
        return EXIT_OK
    value = Cyclotomic.coerce(value) if not isinstance(value, Fraction) else value
    lit = format_literal(value)
    approx = fmt_complex(embed(value))
    emit(out, cfg, {"kind": args.kind, "value": lit, "approx": approx}, f"{lit}\n{approx}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, cfg: CliConfig, out) -> int:
    from . import catalog_numeric, identities

    catalog_numeric.MAX_TERMS = cfg.max_terms
    with order_cap(cfg.order_cap):
        reports = identities.run_suite(
            args.filter,
            args.mode,
            include_errata=args.include_errata,
            workers=cfg.workers,
            tolerances=cfg.tolerances,
        )
    for rep in reports:
        d = rep.to_dict()
        if not cfg.timings:
            d["elapsed_ms"] = None
        if cfg.format == "json":
            out.write(json.dumps(d) + "\n")
        else:
            status = "PASS" if rep.passed else "FAIL"
            if not rep.holds:
                status += " (erratum)"
            out.write(f"{status} {rep.id} {json.dumps(rep.params)} residual={d['residual']}\n")
    passed, total = identities.summarize(reports)
    out.write(f"{passed}/{total}\n")
    ok = all(r.as_expected for r in reports)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_list(args, cfg: CliConfig, out) -> int:
    from . import identities

    for ident in identities.select(args.filter, args.mode, include_errata=True):
        n = len(ident.domain())
        payload = {
            "id": ident.id,
            "mode": ident.mode.value,
            "anchor": ident.anchor,
            "cases": n,
            "tolerance": ident.tolerance,
            "holds": ident.holds,
        }
        tag = "" if ident.holds else " [erratum]"
        emit(out, cfg, payload, f"{ident.id}\t{ident.mode.value}\t{n}\t{ident.anchor}{tag}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sequence


def sequence_flags(seq) -> dict:
    from .sequences import dirichlet_characters

    k = seq.period
    neg = [seq(-n) for n in range(k)]
    if all(a == b for a, b in zip(neg, seq.values)):
        parity = "even"
    elif all(a == -b for a, b in zip(neg, seq.values)):
        parity = "odd"
    else:
        parity = "neither"
    primitive = None
    for chi in dirichlet_characters(k):
        if chi.seq == seq:
            primitive = chi.is_primitive
            break
    return {"period": k, "parity": parity, "character": primitive is not None, "primitive": primitive}


def cmd_sequence(args, cfg: CliConfig, out) -> int:
    from .sequences import fourier_hat, make_sequence

    with order_cap(cfg.order_cap):
        seq = make_sequence(args.spec)
        hat = fourier_hat(seq)
        flags = sequence_flags(seq)
    rows = [(n, format_literal(seq(n)), format_literal(hat(n))) for n in range(seq.period)]
    if cfg.format == "json":
        payload = {**flags, "spec": args.spec, "values": [r[1] for r in rows], "hat": [r[2] for r in rows]}
        out.write(json.dumps(payload) + "\n")
        return EXIT_OK
    prim = "n/a" if flags["primitive"] is None else str(flags["primitive"]).lower()
    out.write(f"# period={flags['period']} parity={flags['parity']} primitive={prim}\n")
    out.write("n\tvalue\that\n")
    for n, v, h in rows:
        out.write(f"{n}\t{v}\t{h}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--order-cap", dest="order_cap", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="periodic-dedekind", description="Periodic Dedekind sums and their reciprocity laws.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate a sum or function")
    pc.add_argument(
        "kind", choices=("classical", "s2", "s3", "periodic", "generalized", "star", "P", "B", "gauss", "L")
    )
    for name in ("d", "c", "n", "k", "i", "i1", "i2", "alpha"):
        pc.add_argument(f"--{name}", type=int, default=None)
    for name in ("a", "b"):
        pc.add_argument(f"--{name}", default=None, help="integer or 'auto'")
    for name in ("x", "y", "theta", "s"):
        pc.add_argument(f"--{name}", default=None)
    pc.add_argument("--A", default=None, help="sequence spec")
    pc.add_argument("--B", default=None, help="sequence spec")
    pc.add_argument("--seq", default=None, help="sequence spec")
    pc.add_argument("--family", choices=("BbAc", "AdBa"), default="BbAc")
    _common(pc)
    pc.set_defaults(func=cmd_compute, default_format="text")

    pv = sub.add_parser("verify", help="run identity suites")
    pv.add_argument("--filter", default="*", help="glob over identity ids")
    pv.add_argument("--mode", choices=("exact", "numeric"), default=None)
    pv.add_argument("--include-errata", action="store_true", help="also run identities whose printed form fails")
    pv.add_argument("--workers", type=int, default=None)
    pv.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    pv.add_argument("--tolerance", action="append", metavar="ID=VALUE")
    pv.add_argument("--no-timings", action="store_true", help="print elapsed_ms as null")
    _common(pv)
    pv.set_defaults(func=cmd_verify, default_format="json")

    ps = sub.add_parser("sequence", help="tabulate a periodic sequence")
    ps.add_argument("spec")
    _common(ps)
    ps.set_defaults(func=cmd_sequence, default_format="text")

    pl = sub.add_parser("list-identities", help="list registered identities")
    pl.add_argument("--filter", default="*")
    pl.add_argument("--mode", choices=("exact", "numeric"), default=None)
    _common(pl)
    pl.set_defaults(func=cmd_list, default_format="text")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = apply_flags(load_config(), args)
        cfg = replace(cfg, format=cfg.format or args.default_format)
        return args.func(args, cfg, out)
    except (ConfigError, DomainError, ParseError, PoleError, CapacityError, UnknownIdentityError, AccuracyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
