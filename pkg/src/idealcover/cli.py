"""Command-line interface.

One subcommand per engine capability: construct, radical, ideals, cover,
elementary, verify, scan.  Reports are deterministic: identical
invocations produce byte-identical output (timing fields are zeroed
unless --timings is given).

Exit status: 0 success or all-PASS, 1 verification FAIL, 2 usage error,
3 guard exhaustion.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import exchange
from .cover import INFINITY, covering_number, is_eta_elementary
from .errors import EngineError, ExchangeFormatError, GuardExceeded, Guards
from .families import (build_augmented_ring, build_null_ring,
                       factor_prime_power)
from .gf import is_prime, make_field
from .ideals import enumerate_ideals, maximal_ideals
from .radical import jacobson_radical, radical_dorroh_oracle
from .ring import identity_flags, matrix_algebra
from .verify import (fingerprint_scan, records_to_csv,
                     verify_covering_formula, verify_null_family)

OUTPUT_DIR_ENV = "IDEALCOVER_OUTPUT_DIR"


@dataclass
class RunConfig:
    """One CLI invocation, fully resolved."""

    command: str
    family: str = None
    ring_path: str = None
    n: int = None
    q: int = None
    p: int = None
    r: int = None
    side: str = "left"
    theorem: str = None
    qmax: int = None
    nmax: int = None
    pmax: int = None
    d: int = None
    sample: int = None
    seed: int = 0
    mode: str = "auto"
    oracle: bool = False
    fmt: str = "human"
    output: str = None
    timings: bool = False
    threads: int = 1
    guards: Guards = field(default_factory=Guards)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="idealcover",
        description="exact ideal covers of finite nonunital rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, formats=("human", "structured-text")):
        sp.add_argument("--format", choices=formats, default="human",
                        dest="fmt", help="report format")
        sp.add_argument("--output", help="write the report to this path "
                        f"(relative paths honor ${OUTPUT_DIR_ENV})")
        sp.add_argument("--timings", action="store_true",
                        help="emit real timing fields (breaks byte-exact "
                        "reproducibility)")
        sp.add_argument("--threads", type=int, default=1,
                        help="worker parallelism bound; output is identical "
                        "for any value")
        sp.add_argument("--max-elements", type=int, default=65536)
        sp.add_argument("--max-ideals", type=int, default=100000)
        sp.add_argument("--time-budget", type=float, default=300.0)

    def add_ring_source(sp):
        sp.add_argument("--family", choices=("Rnq", "null", "matrix"),
                        help="built-in family (Rnq: block matrices (A|v) "
                        "over GF(q); null: zero-product ring; matrix: full "
                        "matrix ring)")
        sp.add_argument("--n", type=int, help="block size for Rnq/matrix")
        sp.add_argument("--q", type=int, help="field order for Rnq/matrix")
        sp.add_argument("--p", type=int, help="characteristic for null")
        sp.add_argument("--r", type=int, help="rank for null")
        sp.add_argument("--ring", dest="ring_path",
                        help="path of a ring exchange file")

    sp = sub.add_parser("construct", help="build a ring and report it")
    add_ring_source(sp)
    add_common(sp)

    sp = sub.add_parser("radical", help="Jacobson radical of a ring")
    add_ring_source(sp)
    sp.add_argument("--oracle", action="store_true",
                    help="also run the unital-extension oracle and compare")
    add_common(sp)

    sp = sub.add_parser("ideals", help="enumerate the ideal lattice")
    add_ring_source(sp)
    sp.add_argument("--side", choices=("left", "right", "two-sided"),
                    default="left")
    add_common(sp)

    sp = sub.add_parser("cover", help="minimal cover and covering number")
    add_ring_source(sp)
    sp.add_argument("--side", choices=("left", "right", "two-sided"),
                    default="left")
    sp.add_argument("--mode", choices=("auto", "search"), default="auto",
                    help="search always runs the branch and bound")
    add_common(sp)

    sp = sub.add_parser("elementary",
                        help="does covering get strictly harder in every "
                        "proper quotient?")
    add_ring_source(sp)
    sp.add_argument("--side", choices=("left", "right", "two-sided"),
                    default="left")
    add_common(sp)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--theorem", choices=("main", "two-sided"), required=True,
                    help="main: covering-number formula grid; two-sided: "
                    "null-ring family")
    sp.add_argument("--qmax", type=int, default=4)
    sp.add_argument("--nmax", type=int, default=2)
    sp.add_argument("--pmax", type=int, default=7)
    add_common(sp, formats=("human", "structured-text", "csv"))

    sp = sub.add_parser("scan", help="classify small algebras by fingerprint")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--sample", type=int,
                    help="random sample size when exhaustion is infeasible")
    sp.add_argument("--seed", type=int, default=0)
    add_common(sp, formats=("human", "structured-text", "csv"))

    return parser


def config_from_args(argv):
    args = _build_parser().parse_args(argv)
    guards = Guards(max_elements=getattr(args, "max_elements", 65536),
                    max_ideals=getattr(args, "max_ideals", 100000),
                    time_budget=getattr(args, "time_budget", 300.0))
    cfg = RunConfig(command=args.command, guards=guards)
    for name in ("family", "ring_path", "n", "q", "p", "r", "side", "theorem",
                 "qmax", "nmax", "pmax", "d", "sample", "seed", "mode",
                 "oracle", "fmt", "output", "timings", "threads"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


class UsageError(Exception):
    pass


def _resolve_ring(cfg):
    sources = sum(1 for s in (cfg.family, cfg.ring_path) if s)
    if sources != 1:
        raise UsageError("exactly one ring source required: "
                         "--family ... or --ring PATH")
    if cfg.ring_path:
        return exchange.load_ring(cfg.ring_path), f"file:{cfg.ring_path}"
    if cfg.family == "Rnq":
        if cfg.n is None or cfg.q is None:
            raise UsageError("family Rnq needs --n and --q")
        pk = factor_prime_power(cfg.q)
        if pk is None:
            raise UsageError(f"{cfg.q} is not a prime power")
        ctx = build_augmented_ring(cfg.n, make_field(*pk))
        return ctx.ring, f"Rnq(n={cfg.n},q={cfg.q})"
    if cfg.family == "matrix":
        if cfg.n is None or cfg.q is None:
            raise UsageError("family matrix needs --n and --q")
        pk = factor_prime_power(cfg.q)
        if pk is None:
            raise UsageError(f"{cfg.q} is not a prime power")
        return (matrix_algebra(cfg.n, make_field(*pk)),
                f"matrix(n={cfg.n},q={cfg.q})")
    if cfg.family == "null":
        if cfg.p is None or cfg.r is None:
            raise UsageError("family null needs --p and --r")
        if not is_prime(cfg.p):
            raise UsageError(f"{cfg.p} is not prime")
        return build_null_ring(cfg.p, cfg.r), f"null(p={cfg.p},r={cfg.r})"
    raise UsageError(f"unknown family {cfg.family!r}")


def _eta_str(eta):
    return "infinity" if eta is INFINITY else str(eta)


def _emit(cfg, text):
    if cfg.output:
        path = cfg.output
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not os.path.isabs(path):
            path = os.path.join(base, path)
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(cfg):
    R, label = _resolve_ring(cfg)
    if cfg.fmt == "structured-text":
        _emit(cfg, exchange.dumps(exchange.ring_to_obj(R)))
    else:
        has_id, lefts, rights = identity_flags(R)
        _emit(cfg, (f"ring {label}: characteristic {R.p}, dimension {R.d}, "
                    f"order {R.order}\n"
                    f"identity: {has_id}; left identities: {len(lefts)}; "
                    f"right identities: {len(rights)}\n"))
    return 0


def _cmd_radical(cfg):
    R, label = _resolve_ring(cfg)
    J = jacobson_radical(R, guards=cfg.guards)
    obj = {"ring": label, "radical": exchange.ideal_to_obj(J),
           "radical_order": J.order}
    agree = None
    if cfg.oracle:
        oracle = radical_dorroh_oracle(R, guards=cfg.guards)
        agree = oracle.basis == J.basis
        obj["oracle_agrees"] = agree
    if cfg.fmt == "structured-text":
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = [f"ring {label}: radical has dimension {J.dim}, "
                 f"order {J.order}"]
        for row in J.basis:
            lines.append("  " + " ".join(map(str, row)))
        if agree is not None:
            lines.append(f"unital-extension oracle agrees: {agree}")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0 if agree in (None, True) else 1


def _cmd_ideals(cfg):
    R, label = _resolve_ring(cfg)
    lattice = enumerate_ideals(R, cfg.side, guards=cfg.guards)
    maximal = set(maximal_ideals(R, cfg.side, guards=cfg.guards,
                                 lattice=lattice))
    if cfg.fmt == "structured-text":
        obj = {"ring": label, "side": cfg.side, "count": len(lattice),
               "ideals": [dict(exchange.ideal_to_obj(I),
                               maximal=I in maximal) for I in lattice]}
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = [f"ring {label}: {len(lattice)} {cfg.side} ideals "
                 f"({len(maximal)} maximal)"]
        for I in lattice:
            tag = " maximal" if I in maximal else ""
            lines.append(f"  dim {I.dim} order {I.order}{tag}: "
                         + "; ".join(" ".join(map(str, row))
                                     for row in I.basis))
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_cover(cfg):
    R, label = _resolve_ring(cfg)
    result = covering_number(R, cfg.side, guards=cfg.guards, mode=cfg.mode)
    if cfg.fmt == "structured-text":
        obj = dict(exchange.cover_to_obj(result, timings=cfg.timings),
                   ring=label, side=cfg.side)
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = [f"ring {label}: eta_{cfg.side} = {_eta_str(result.eta)} "
                 f"[certificate: {result.certificate}; "
                 f"nodes: {result.node_count}]"]
        for I in result.cover:
            lines.append(f"  member dim {I.dim} order {I.order}: "
                         + "; ".join(" ".join(map(str, row))
                                     for row in I.basis))
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_elementary(cfg):
    R, label = _resolve_ring(cfg)
    report = is_eta_elementary(R, cfg.side, guards=cfg.guards)
    if cfg.fmt == "structured-text":
        obj = {"ring": label, "side": cfg.side, "verdict": report.verdict,
               "eta": exchange.eta_to_obj(report.eta),
               "quotients": [{"ideal": exchange.ideal_to_obj(I),
                              "eta": exchange.eta_to_obj(eta)}
                             for I, eta in report.quotients]}
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = [f"ring {label}: eta_{cfg.side} = {_eta_str(report.eta)}; "
                 f"elementary: {report.verdict}"]
        for I, eta in report.quotients:
            lines.append(f"  quotient by dim-{I.dim} ideal: "
                         f"eta = {_eta_str(eta)}")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _prime_powers_upto(qmax):
    return [q for q in range(2, qmax + 1)
            if factor_prime_power(q) is not None]


def _run_parallel(jobs, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda f: f(), jobs))
    return [job() for job in jobs]


def _cmd_verify(cfg):
    if cfg.theorem == "main":
        grid = [(n, q) for q in _prime_powers_upto(cfg.qmax)
                for n in range(1, cfg.nmax + 1)]
        jobs = [(lambda n=n, q=q:
                 verify_covering_formula(
                     n, make_field(*factor_prime_power(q)),
                     guards=cfg.guards))
                for n, q in grid]
    else:
        primes = [p for p in range(2, cfg.pmax + 1) if is_prime(p)]
        jobs = [(lambda p=p: verify_null_family(p, guards=cfg.guards))
                for p in primes]
    records = _run_parallel(jobs, cfg.threads)
    records.sort(key=lambda r: (r.family, r.q, r.n_or_p))
    all_passed = all(r.passed for r in records)
    if cfg.fmt == "csv":
        _emit(cfg, records_to_csv(records, timings=cfg.timings))
    elif cfg.fmt == "structured-text":
        obj = [{"family": r.family, "q": r.q, "n_or_p": r.n_or_p,
                "order": r.order,
                "eta_computed": exchange.eta_to_obj(r.computed_eta),
                "eta_formula": r.formula_eta,
                "elementary": r.elementary_flag, "forced": r.forced_count,
                "maximal": r.maximal_count,
                "elapsed_ms": round(r.elapsed_ms, 3) if cfg.timings else 0,
                "passed": r.passed, "detail": r.detail}
               for r in records]
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = []
        for r in records:
            status = "PASS" if r.passed else f"FAIL ({r.detail})"
            lines.append(f"{r.family} q={r.q} n_or_p={r.n_or_p} "
                         f"order={r.order} "
                         f"eta={_eta_str(r.computed_eta)} "
                         f"formula={r.formula_eta} "
                         f"forced={r.forced_count} "
                         f"maximal={r.maximal_count} {status}")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0 if all_passed else 1


def _cmd_scan(cfg):
    result = fingerprint_scan(cfg.p, cfg.d, sample=cfg.sample, seed=cfg.seed,
                              guards=cfg.guards)
    if cfg.fmt == "csv":
        lines = ["p,d,order,characteristic,radical_order,has_identity,"
                 "has_left_identity,has_right_identity,left_ideal_count,"
                 "two_sided_ideal_count,eta_left,eta_right,eta_two_sided"]
        for fp, _rep in result.groups:
            lines.append(
                f"{result.p},{result.d},{fp.order},{fp.characteristic},"
                f"{fp.radical_order},{str(fp.has_identity).lower()},"
                f"{str(fp.has_left_identity).lower()},"
                f"{str(fp.has_right_identity).lower()},"
                f"{fp.left_ideal_count},{fp.two_sided_ideal_count},"
                f"{_eta_str(fp.eta_left)},{_eta_str(fp.eta_right)},"
                f"{_eta_str(fp.eta_two_sided)}")
        _emit(cfg, "\n".join(lines) + "\n")
    elif cfg.fmt == "structured-text":
        obj = {"p": result.p, "d": result.d,
               "candidates": result.candidates,
               "associative": result.associative,
               "elementary": result.elementary,
               "fingerprints": [
                   {"order": fp.order, "characteristic": fp.characteristic,
                    "radical_order": fp.radical_order,
                    "has_identity": fp.has_identity,
                    "has_left_identity": fp.has_left_identity,
                    "has_right_identity": fp.has_right_identity,
                    "left_ideal_count": fp.left_ideal_count,
                    "two_sided_ideal_count": fp.two_sided_ideal_count,
                    "eta_left": exchange.eta_to_obj(fp.eta_left),
                    "eta_right": exchange.eta_to_obj(fp.eta_right),
                    "eta_two_sided": exchange.eta_to_obj(fp.eta_two_sided),
                    "representative": exchange.ring_to_obj(rep)}
                   for fp, rep in result.groups]}
        _emit(cfg, exchange.dumps(obj))
    else:
        lines = [f"scan p={result.p} d={result.d}: "
                 f"{result.candidates} tables, "
                 f"{result.associative} associative, "
                 f"{result.elementary} elementary, "
                 f"{len(result.groups)} fingerprints"]
        for fp, _rep in result.groups:
            lines.append(f"  order={fp.order} radical={fp.radical_order} "
                         f"left_id={fp.has_left_identity} "
                         f"eta_left={_eta_str(fp.eta_left)} "
                         f"eta_right={_eta_str(fp.eta_right)} "
                         f"eta={_eta_str(fp.eta_two_sided)}")
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


_COMMANDS = {
    "construct": _cmd_construct,
    "radical": _cmd_radical,
    "ideals": _cmd_ideals,
    "cover": _cmd_cover,
    "elementary": _cmd_elementary,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def dispatch(cfg):
    """Run one resolved invocation; returns the process exit status."""
    try:
        if (cfg.guards.max_elements <= 0 or cfg.guards.max_ideals <= 0
                or cfg.guards.time_budget <= 0):
            raise UsageError("guards must be positive")
        return _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExchangeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"guard exhausted: {exc}", file=sys.stderr)
        return 3
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    cfg = config_from_args(sys.argv[1:] if argv is None else argv)
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
