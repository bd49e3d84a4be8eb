"""Command-line front end.

Exit codes: 0 success, 2 a verification failed, 3 unknown degrees with
``--strict``, 4 bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .differential import build_dn, build_dn_closed_form, build_dw
from .homology import DegreeWindow, compute_report, conjecture_mu_check
from .interp import context, remainder_closed_form, zeta_coords
from .parse import ParseError
from .potential import Potential
from .ring import SuperRing
from .special import (
    apply_phi_m,
    coassociativity,
    coproduct,
    coproduct_by_division,
    phi_m,
    swap_copies,
)
from .symfunc import h_complete
from .verify import IDENTITIES, VerifyConfig, run_all
from .zpoly import ZPoly

EXIT_OK, EXIT_FAILED, EXIT_UNKNOWN, EXIT_CONFIG = 0, 2, 3, 4


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, differential: bool = True):
    p.add_argument("--n", type=int, default=2, help="number of strands")
    if differential:
        p.add_argument("--N", type=int, default=None, help="exponent of d_N")
        p.add_argument("--potential", default=None, help='potential W(x), e.g. "x^4/4 - x^2/2"')
        p.add_argument("--yified", action="store_true", help="reduce modulo prod (z - y_i) instead of z^n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None, help="write the report to this file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default from STABLEKR_JOBS)")
    p.add_argument("--strict", action="store_true", help="exit 3 if any degree is unknown")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablekr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("differential", help="print d(xi_k) and d(zeta_k)")
    _common(p)

    p = sub.add_parser("homology", help="homology in a degree window")
    _common(p)
    p.add_argument("--max-u-degree", type=int, default=6)
    p.add_argument("--max-y-degree", type=int, default=6)
    p.add_argument("--no-representatives", action="store_true")

    p = sub.add_parser("verify", help="run the named identity checks")
    _common(p, differential=False)
    p.set_defaults(n=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--only", action="append", default=None, metavar="NAME")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--list", action="store_true", help="list identity names and exit")

    p = sub.add_parser("conjecture-mu", help="compare homology with the algebra generated by u and mu")
    _common(p)
    p.add_argument("--max-u-degree", type=int, default=8)

    p = sub.add_parser("specialize", help="images of u_k under phi_M")
    _common(p, differential=False)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--N", type=int, default=2)

    p = sub.add_parser("coproduct", help="coefficients of u(z) ut(z) mod p(z)")
    _common(p, differential=False)
    return parser


def _check_n(args):
    if args.n is not None and args.n < 1:
        raise ConfigError("--n must be at least 1")


def _differential(args, allow_potential: bool = True):
    if (args.N is None) == (args.potential is None):
        raise ConfigError("give exactly one of --N and --potential")
    if args.N is not None:
        if args.N < 1:
            raise ConfigError("--N must be at least 1")
        return build_dn(args.n, args.N, args.yified), None
    if not allow_potential:
        raise ConfigError("this command needs --N")
    W = Potential.parse(args.potential)
    return build_dw(args.n, W, args.yified), W


def cmd_differential(args) -> tuple:
    d, W = _differential(args)
    n = args.n
    if W is None:
        match = d == build_dn_closed_form(n, args.N, args.yified)
    else:
        ring = SuperRing.standard(n)
        ctx = context(n, args.yified)
        u = ZPoly.from_names(ring, "u", n)
        full = ZPoly(ring, [])
        for c in reversed(W.dW):
            full = full * u + ZPoly(ring, [ring.const(c)])
        closed = remainder_closed_form(full, ctx)
        match = all(closed[k] == d.image(f"xi{k}") for k in range(n))
    xi = {f"xi{k}": d.image(f"xi{k}").to_str() for k in range(n)}
    data = {"n": n, "N": args.N, "potential": args.potential, "yified": args.yified, "d_xi": xi}
    if args.yified:
        z = zeta_coords(d.xi_images(), context(n, True))
        data["d_zeta"] = {f"zeta{k}": z[k].to_str() for k in range(n)}
    data["closed_form_match"] = match
    lines = [f"d({k}) = {v}" for k, v in xi.items()]
    lines += [f"d({k}) = {v}" for k, v in data.get("d_zeta", {}).items()]
    lines.append(f"closed_form_match: {str(match).lower()}")
    return data, "\n".join(lines), EXIT_OK if match else EXIT_FAILED


def cmd_homology(args) -> tuple:
    d, _ = _differential(args)
    if d.shift is None:
        raise ConfigError("homology needs dW to be a single monomial")
    if args.max_u_degree < 0 or args.max_y_degree < 0:
        raise ConfigError("window bounds must be non-negative")
    window = DegreeWindow(args.n, args.max_u_degree, args.max_y_degree if args.yified else 0, args.yified)
    report = compute_report(d, window, representatives=not args.no_representatives, jobs=args.jobs)
    data = report.as_dict()
    text = report.poincare_table() + f"\ntotal homology: {report.total_homology()}"
    code = EXIT_OK if report.euler_ok else EXIT_FAILED
    if args.strict and report.unknown:
        code = EXIT_UNKNOWN
    return data, text, code


def cmd_conjecture_mu(args) -> tuple:
    if args.potential is not None or args.N is None:
        raise ConfigError("conjecture-mu needs --N")
    if args.yified:
        raise ConfigError("conjecture-mu runs in y=0 mode")
    if args.N < 1 or args.max_u_degree < 0:
        raise ConfigError("--N must be positive and the window non-negative")
    report = conjecture_mu_check(args.n, args.N, DegreeWindow(args.n, args.max_u_degree, 0, False))
    data = report.as_dict()
    unknown = data["unknown_degrees"]
    code = EXIT_UNKNOWN if args.strict and unknown else EXIT_OK
    return data, report.table(), code


def cmd_verify(args) -> tuple:
    if args.list:
        return {"identities": list(IDENTITIES)}, "\n".join(IDENTITIES), EXIT_OK
    for name in args.only or []:
        if name not in IDENTITIES:
            raise ConfigError(f"unknown identity {name!r}")
    cfg = VerifyConfig(
        n_max=args.n if args.n is not None else 3,
        N_max=args.N if args.N is not None else 3,
        seed=args.seed,
        trials=args.trials,
    )
    results = run_all(cfg, args.only)
    ok = all(r.passed for r in results)
    data = {
        "results": [
            {"name": r.name, "passed": r.passed, "cases": r.cases, "failures": r.failures[:5]} for r in results
        ],
        "all_passed": ok,
    }
    text = "\n".join(r.line() for r in results) + f"\n{sum(r.passed for r in results)}/{len(results)} passed"
    return data, text, EXIT_OK if ok else EXIT_FAILED


def cmd_specialize(args) -> tuple:
    n, M, N = args.n, args.M, args.N
    try:
        spec = phi_m(M, n)
    except ValueError as exc:
        raise ConfigError(str(exc))
    ring = SuperRing.standard(n)
    u = ZPoly.from_names(ring, "u", n)
    x_ok = all(apply_phi_m(spec, u.evaluate(ring.gen(f"y{i}"))) == ring.gen(f"y{i}") ** M for i in range(1, n + 1))
    z = zeta_coords(build_dn(n, N).xi_images(), context(n, True))
    zeta_ok = all(apply_phi_m(spec, z[k]) == h_complete(M * N - k, n) for k in range(n))
    images = {k: v.to_str() for k, v in spec.images.items()}
    data = {"n": n, "M": M, "N": N, "images": images, "phi_x_is_y_power": x_ok, "phi_dn_zeta_is_h": zeta_ok}
    lines = [f"phi_{M}({k}) = {v}" for k, v in images.items()]
    lines.append(f"phi_x_is_y_power: {str(x_ok).lower()}")
    lines.append(f"phi_dn_zeta_is_h: {str(zeta_ok).lower()}")
    return data, "\n".join(lines), EXIT_OK if x_ok and zeta_ok else EXIT_FAILED


def cmd_coproduct(args) -> tuple:
    n = args.n
    closed = [coproduct(n, k) for k in range(n)]
    division = coproduct_by_division(n)
    assoc = coassociativity(n)
    checks = {
        "closed_form_match": closed == division,
        "cocommutative": all(swap_copies(v, n) == v for v in closed),
        "coassociative": assoc["left"] == assoc["right"] == assoc["triple"],
    }
    coeffs = {f"v{k}": closed[k].to_str() for k in range(n)}
    data = {"n": n, "coefficients": coeffs, **checks}
    lines = [f"{k} = {v}" for k, v in coeffs.items()]
    lines += [f"{k}: {str(v).lower()}" for k, v in checks.items()]
    return data, "\n".join(lines), EXIT_OK if all(checks.values()) else EXIT_FAILED


COMMANDS = {
    "differential": cmd_differential,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "conjecture-mu": cmd_conjecture_mu,
    "specialize": cmd_specialize,
    "coproduct": cmd_coproduct,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_n(args)
        data, text, code = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = json.dumps(data, indent=2) if args.format == "json" else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
