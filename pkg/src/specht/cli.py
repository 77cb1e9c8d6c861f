"""Command line front end: ``specht {enumerate,restrict,graded,verify-all}``.

Exit codes: 0 pass, 2 bad input, 3 unsupported target, 4 verification failure.
Reports are deterministic JSON; run metadata goes to a ``.meta.json`` sidecar.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    INFINITY,
    CoefficientReductionError,
    CyclotomicField,
    Field,
    PrimeField,
    Rationals,
    SpecializationPoleError,
    format_e,
)
from .murphy import UnsupportedTargetError
from .seminormal import NotSemisimpleError
from .tableaux import (
    MultipartitionParseError,
    addable_nodes,
    count_standard_tableaux,
    multipartitions,
    parse_multipartition,
    removable_nodes,
)

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_FAIL = 0, 2, 3, 4
ENUMERATE_LIMIT = 12
MAX_PRIME = 97


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class TargetSpec:
    """Picklable description of a target field."""

    kind: str = "q"
    xi: str = "1"
    p: int | None = None
    m: int | None = None

    def build(self) -> Field:
        if self.kind == "q":
            return Rationals(Fraction(self.xi))
        if self.kind == "fp":
            return PrimeField(self.p, int(self.xi))
        return CyclotomicField(self.m)


@dataclass
class RunConfig:
    command: str
    shape: str | None = None
    sweep_n: int | None = None
    level: int | None = None
    charge: tuple[int, ...] = ()
    target: TargetSpec = field(default_factory=TargetSpec)
    e: object = None
    out: str | None = None
    jobs: int = 1
    only: tuple[str, ...] = ()
    fault_injection: bool = False

    def shapes(self):
        if self.shape is not None:
            return [parse_multipartition(self.shape)]
        return [lam for n in range(self.sweep_n + 1) for lam in multipartitions(n, self.level)]


# --------------------------------------------------------------------------
# parsing


def _parse_charge(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ConfigError(f"bad multicharge {text!r}") from None


def _parse_e(text):
    if text is None:
        return None
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    try:
        e = int(text)
    except ValueError:
        raise ConfigError(f"bad e {text!r}") from None
    if e < 2:
        raise ConfigError("e must be at least 2 or inf")
    return e


def _parse_sweep(tokens) -> dict[str, int]:
    out = {}
    for tok in tokens or ():
        key, sep, value = tok.partition("=")
        if not sep or key not in ("n", "level"):
            raise ConfigError(f"bad sweep bound {tok!r}; expected n=N or level=L")
        try:
            out[key] = int(value)
        except ValueError:
            raise ConfigError(f"bad sweep bound {tok!r}") from None
    return out


def _target(args) -> TargetSpec:
    kind = args.field
    if kind == "q":
        xi = args.xi if args.xi is not None else "1"
        try:
            if Fraction(xi) == 0:
                raise ConfigError("xi must be invertible")
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad xi {xi!r}") from None
        return TargetSpec("q", str(Fraction(xi)))
    if kind == "fp":
        if args.p is None:
            raise ConfigError("--field fp needs --p")
        if args.p > MAX_PRIME:
            raise ConfigError(f"--p is limited to {MAX_PRIME}")
        xi = args.xi if args.xi is not None else "1"
        try:
            spec = TargetSpec("fp", str(int(xi)), p=args.p)
            spec.build()
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        return spec
    if args.m is None:
        raise ConfigError("--field cyclo needs --m")
    if args.xi is not None:
        raise ConfigError("cyclotomic targets use xi = x; drop --xi")
    if args.m < 1:
        raise ConfigError("--m must be positive")
    return TargetSpec("cyclo", "x", m=args.m)


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(args.command)
    cfg.out = getattr(args, "out", None)
    jobs = getattr(args, "jobs", None)
    cfg.jobs = jobs if jobs else (os.cpu_count() or 1)
    if args.command == "verify-all":
        only = []
        for item in args.only or ():
            only.extend(x for x in item.split(",") if x)
        cfg.only = tuple(only)
        cfg.fault_injection = args.fault_injection
        return cfg
    sweep = _parse_sweep(args.sweep)
    if args.n is not None:
        sweep["n"] = args.n
    if args.level is not None:
        sweep["level"] = args.level
    charge = _parse_charge(args.charge) if args.charge is not None else ()
    if args.shape is not None and "n" in sweep:
        raise ConfigError("give either --lambda or a sweep, not both")
    if args.shape is None and "n" not in sweep:
        raise ConfigError("give --lambda or --sweep n=N")
    if args.shape is not None:
        cfg.shape = args.shape
        level = parse_multipartition(args.shape).level
    else:
        cfg.sweep_n = sweep["n"]
        level = sweep.get("level", len(charge) or 1)
        if cfg.sweep_n < 0:
            raise ConfigError("n must be non-negative")
    if charge and len(charge) != level:
        raise ConfigError(f"multicharge {charge} has the wrong length for level {level}")
    cfg.level = level
    cfg.charge = charge or (0,) * level
    if args.command == "enumerate":
        return cfg
    cfg.target = _target(args)
    cfg.e = _parse_e(args.e)
    if args.command == "restrict" and cfg.e is not None:
        actual = cfg.target.build().quantum_characteristic()
        if actual != cfg.e:
            raise ConfigError(f"--e {format_e(cfg.e)} does not match the target, whose e is {format_e(actual)}")
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_opts(p):
        p.add_argument("--lambda", dest="shape", help='multipartition literal such as "(2,1|1)"')
        p.add_argument("--sweep", nargs="+", metavar="KEY=VALUE", help="n=N level=L: all multipartitions of size <= N")
        p.add_argument("--n", type=int)
        p.add_argument("--level", type=int)
        p.add_argument("--charge", help="multicharge a,b,... (use --charge=-1,2 for negatives)")
        p.add_argument("--out", help="write the JSON report here")
        p.add_argument("--jobs", type=int, help="worker processes (default: all cores)")

    def target_opts(p):
        p.add_argument("--field", choices=("q", "fp", "cyclo"), default="q")
        p.add_argument("--xi")
        p.add_argument("--p", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--e")

    p = sub.add_parser("enumerate", help="multipartitions with tableau counts and removable/addable nodes")
    shape_opts(p)
    p = sub.add_parser("restrict", help="certify the restriction filtration of a Specht module")
    shape_opts(p)
    target_opts(p)
    p = sub.add_parser("graded", help="graded branching and degree-shift checks")
    shape_opts(p)
    target_opts(p)
    p = sub.add_parser("verify-all", help="run the acceptance matrix")
    p.add_argument("--only", action="append", help="criterion name (repeatable or comma separated)")
    p.add_argument("--fault-injection", action="store_true", help="run the perturbation controls and list them")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int)
    return parser


# --------------------------------------------------------------------------
# tasks (top level so worker processes can import them)


def enumerate_task(lam_text: str) -> dict:
    lam = parse_multipartition(lam_text)
    return {
        "lambda": lam.render(exponents=False),
        "tableaux": count_standard_tableaux(lam),
        "removable": [list(A) for A in removable_nodes(lam)],
        "addable": [list(A) for A in addable_nodes(lam)],
    }


def restrict_task(job) -> dict:
    from .restriction import restriction_report

    lam_text, charge, target = job
    lam = parse_multipartition(lam_text)
    if lam.size == 0:
        return {"lambda": lam.render(exponents=False), "layers": [], "pass": True}
    try:
        return restriction_report(lam, charge, target.build()).to_json()
    except (UnsupportedTargetError, NotSemisimpleError, SpecializationPoleError, CoefficientReductionError) as exc:
        return {"lambda": lam.render(exponents=False), "unsupported": str(exc), "pass": False}


def graded_task(job) -> dict:
    from .graded import branching_residues, dual_shift_check, graded_branching_check

    lam_text, charge, e = job
    lam = parse_multipartition(lam_text)
    branching = [graded_branching_check(lam, i, charge, e).to_json() for i in branching_residues(lam, charge, e)]
    dual = dual_shift_check(lam, charge, e).to_json()
    return {
        "lambda": lam.render(exponents=False),
        "e": format_e(e),
        "multicharge": list(charge),
        "branching": branching,
        "dual_shift": dual,
        "pass": all(b["pass"] for b in branching) and dual["pass"],
    }


def _fan_out(func, jobs, width: int) -> list:
    if width > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=width) as pool:
            return list(pool.map(func, jobs, chunksize=max(1, len(jobs) // (4 * width))))
    return [func(j) for j in jobs]


# --------------------------------------------------------------------------
# commands


def _emit(payload: dict, cfg: RunConfig, started: float, argv) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        meta = {
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "argv": list(argv),
            "seconds": round(time.perf_counter() - started, 3),
            "jobs": cfg.jobs,
        }
        with open(cfg.out + ".meta.json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(meta, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def cmd_enumerate(cfg: RunConfig) -> tuple[dict, int]:
    top = cfg.sweep_n if cfg.shape is None else parse_multipartition(cfg.shape).size
    if top > ENUMERATE_LIMIT:
        raise ConfigError(f"enumerate is limited to n <= {ENUMERATE_LIMIT}")
    if cfg.shape is not None:
        shapes = [parse_multipartition(cfg.shape)]
    else:
        shapes = list(multipartitions(cfg.sweep_n, cfg.level))
    rows = _fan_out(enumerate_task, [lam.render(exponents=False) for lam in shapes], cfg.jobs)
    return {"n": top, "level": cfg.level, "count": len(rows), "multipartitions": rows}, EXIT_OK


def cmd_restrict(cfg: RunConfig) -> tuple[dict, int]:
    shapes = cfg.shapes()
    runs = _fan_out(restrict_task, [(lam.render(exponents=False), cfg.charge, cfg.target) for lam in shapes], cfg.jobs)
    unsupported = [r for r in runs if "unsupported" in r]
    if unsupported:
        for r in unsupported:
            print(f"unsupported target for {r['lambda']}: {r['unsupported']}", file=sys.stderr)
        code = EXIT_UNSUPPORTED
    else:
        code = EXIT_OK if all(r["pass"] for r in runs) else EXIT_FAIL
    payload = runs[0] if cfg.shape is not None else {"runs": runs, "pass": code == EXIT_OK}
    return payload, code


def cmd_graded(cfg: RunConfig) -> tuple[dict, int]:
    e = cfg.e if cfg.e is not None else cfg.target.build().quantum_characteristic()
    shapes = cfg.shapes()
    runs = _fan_out(graded_task, [(lam.render(exponents=False), cfg.charge, e) for lam in shapes], cfg.jobs)
    ok = all(r["pass"] for r in runs)
    payload = runs[0] if cfg.shape is not None else {"e": format_e(e), "runs": runs, "pass": ok}
    return payload, EXIT_OK if ok else EXIT_FAIL


def cmd_verify_all(cfg: RunConfig) -> tuple[dict, int]:
    from . import acceptance

    names = list(cfg.only) if cfg.only else list(acceptance.CRITERIA)
    if cfg.fault_injection and "faults" not in names:
        names.append("faults")
    unknown = [n for n in names if n not in acceptance.CRITERIA]
    if unknown:
        raise ConfigError(f"unknown criteria {unknown}; choose from {list(acceptance.CRITERIA)}")
    results = acceptance.run(names, jobs=cfg.jobs)
    for res in results:
        print(res.line(), file=sys.stderr)
        if cfg.fault_injection and res.name == "fault injection":
            for note in res.notes:
                print(f"    expected failures: {note}", file=sys.stderr)
    ok = all(r.ok for r in results)
    payload = {"criteria": [r.to_json() for r in results], "pass": ok}
    return payload, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "enumerate": cmd_enumerate,
    "restrict": cmd_restrict,
    "graded": cmd_graded,
    "verify-all": cmd_verify_all,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        cfg = config_from_args(args)
        payload, code = COMMANDS[cfg.command](cfg)
    except (UnsupportedTargetError, NotSemisimpleError, SpecializationPoleError, CoefficientReductionError) as exc:
        print(f"unsupported target: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ConfigError, MultipartitionParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(payload, cfg, started, argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
