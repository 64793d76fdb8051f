"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 capacity exceeded, 3 self-test failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .cache import ResultCache, cache_key
from .characters import (
    stanley_polynomial,
    symplectic_character,
    zonal_character,
    zonal_character_oracle,
    zonal_character_orbit_formula,
)
from .cumulants import anisotropic_cumulants
from .kerov import kerov_oracle, kerov_polynomial_combinatorial, symplectic_kerov
from .maps import map_stats
from .pairings import CapacityError, PairPartition
from .partitions import Partition, as_multirect, parse_diagram, parse_partition
from .poly import PSymmetricFunction, fmt_rational
from .selftest import run_selftest
from .zonal import jack_oracle, zonal_polynomial

EXIT_OK, EXIT_INVALID, EXIT_CAPACITY, EXIT_SELFTEST = 0, 1, 2, 3
HALF = Fraction(1, 2)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _alpha(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid α {text!r}") from None
    if value not in (2, HALF):
        raise argparse.ArgumentTypeError("α must be 2 or 1/2")
    return value


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonempty_partition(text: str) -> Partition:
    mu = _partition(text)
    if not mu:
        raise argparse.ArgumentTypeError("μ must be non-empty")
    return mu


def _diagram(text: str):
    try:
        return parse_diagram(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pairing(text: str) -> PairPartition:
    try:
        return PairPartition.from_json(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", help="cache directory (default: $ZONALKIT_CACHE)")
    common.add_argument("--no-cache", action="store_true", help="ignore the cache")
    common.add_argument("--threads", type=_positive_int, default=1, help="worker processes")

    parser = _Parser(prog="zonalkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zonal", parents=[common], help="Jack polynomial for α ∈ {2, 1/2} in power sums")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--alpha", type=_alpha, default=Fraction(2))
    p.add_argument("--method", choices=("direct", "oracle"), default="direct")
    p.add_argument("--oracle", dest="method", action="store_const", const="oracle",
                   help="same as --method oracle")

    p = sub.add_parser("character", parents=[common], help="normalized character Σ_μ(λ)")
    p.add_argument("--mu", type=_nonempty_partition, required=True)
    p.add_argument("--lambda", dest="lam", type=_diagram, required=True,
                   help="partition '4,2' or multirectangular 'p=1,1;q=4,2'")
    p.add_argument("--alpha", type=_alpha, default=Fraction(2))
    p.add_argument("--method", choices=("direct", "oracle", "orbit"), default="direct")

    p = sub.add_parser("stanley", parents=[common], help="Σ^(2)_μ in Stanley coordinates")
    p.add_argument("--mu", type=_nonempty_partition, required=True)
    p.add_argument("--rectangles", type=_positive_int, default=2)

    p = sub.add_parser("cumulants", parents=[common], help="anisotropic free cumulants")
    p.add_argument("--lambda", dest="lam", type=_diagram, required=True)
    p.add_argument("--upto", type=_positive_int, default=6)
    p.add_argument("--alpha", type=Fraction, default=Fraction(1))

    p = sub.add_parser("kerov", parents=[common], help="Kerov polynomial K_μ")
    p.add_argument("--mu", type=_nonempty_partition, required=True)
    p.add_argument("--method", choices=("count", "oracle"), default="count")
    p.add_argument("--alpha", type=_alpha, default=Fraction(2))

    p = sub.add_parser("map-stats", parents=[common], help="surface of a gluing")
    p.add_argument("--mu", type=_nonempty_partition, required=True)
    p.add_argument("--s0", type=_pairing, required=True, help="pairs as JSON, e.g. '[[1,3],[2,4]]'")

    p = sub.add_parser("selftest", help="run the built-in verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


# ---------------------------------------------------------------------------
# command bodies; each returns (json payload, text rendering)


def _zonal(args):
    lam = args.lam
    if args.alpha == 2:
        f = zonal_polynomial(lam) if args.method == "direct" else jack_oracle(lam)
    elif args.method == "oracle":
        f = jack_oracle(lam, alpha=HALF)
    else:
        z = zonal_polynomial(lam.conjugate())
        f = PSymmetricFunction({
            rho: c / Fraction(-2) ** (rho.size - rho.length) for rho, c in z.terms.items()
        })
    return f.to_dict(), str(f)


def _character(args):
    mu, lam = args.mu, args.lam
    if args.alpha == HALF:
        if args.method != "direct":
            raise ValueError("α = 1/2 supports only --method direct")
        value = symplectic_character(mu, as_multirect(lam).to_partition())
    elif args.method == "direct":
        value = zonal_character(mu, lam, workers=args.threads)
    elif args.method == "orbit":
        value = zonal_character_orbit_formula(mu, lam)
    else:
        value = zonal_character_oracle(mu, as_multirect(lam).to_partition())
    text = fmt_rational(value)
    payload = {"mu": list(mu), "lambda": str(lam) if not isinstance(lam, tuple) else list(lam),
               "alpha": fmt_rational(args.alpha), "value": text}
    return payload, text


def _stanley(args):
    poly = stanley_polynomial(args.mu, args.rectangles)
    return poly.to_dict(), str(poly)


def _cumulants(args):
    values = anisotropic_cumulants(args.lam, args.alpha, args.upto)
    payload = {"alpha": fmt_rational(args.alpha),
               "cumulants": {str(i): fmt_rational(v) for i, v in enumerate(values, 1)}}
    text = "\n".join(f"R{i} = {fmt_rational(v)}" for i, v in enumerate(values, 1))
    return payload, text


def _kerov(args):
    mu = args.mu
    if args.alpha == HALF:
        if args.method != "count":
            raise ValueError("α = 1/2 supports only --method count")
        poly = symplectic_kerov(mu, workers=args.threads)
    elif args.method == "count":
        poly = kerov_polynomial_combinatorial(mu, workers=args.threads)
    else:
        if mu.length != 1:
            raise ValueError("the oracle handles one-part μ only")
        poly = kerov_oracle(mu[0])
    return poly.to_dict(), str(poly)


def _map_stats(args):
    stats = map_stats(args.mu, args.s0).to_dict()
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in stats.items())
    return stats, text


COMMANDS = {
    "zonal": _zonal,
    "character": _character,
    "stanley": _stanley,
    "cumulants": _cumulants,
    "kerov": _kerov,
    "map-stats": _map_stats,
}

_UNCACHED = {"command", "format", "cache_dir", "no_cache", "threads"}


def _cache_args(args) -> dict:
    out = {}
    for k, v in vars(args).items():
        if k in _UNCACHED:
            continue
        out[k] = v.to_json() if isinstance(v, PairPartition) else str(v)
    out["format"] = args.format
    return out


def _selftest(args, out) -> int:
    results = run_selftest(args.level)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name}  ({r.seconds:.2f}s)"
        print(line + (f"  {r.detail}" if r.detail else ""), file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    if args.command == "selftest":
        return _selftest(args, out)
    cache = ResultCache.from_settings(args.cache_dir, args.no_cache)
    key = cache_key(args.command, _cache_args(args), __version__)
    text = cache.get(key)
    if text is None:
        try:
            payload, rendered = COMMANDS[args.command](args)
        except CapacityError as exc:
            print(f"capacity exceeded: {exc}", file=sys.stderr)
            return EXIT_CAPACITY
        except ValueError as exc:
            print(f"invalid input: {exc}", file=sys.stderr)
            return EXIT_INVALID
        text = json.dumps(payload, ensure_ascii=False) if args.format == "json" else rendered
        cache.put(key, text)
    print(text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
