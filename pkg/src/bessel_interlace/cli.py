"""Command-line front end.

Subcommands: zeros, chain, verify, break, wronskian, counterexample.
Exit codes: 0 all checks passed, 1 mathematical violation found (or a
requested witness was not found), 2 usage or domain error. Numbers are
emitted with 17 significant digits in both CSV and JSON, which
round-trips IEEE doubles exactly; identical flags produce byte-identical
output regardless of the parallelism degree.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import interlace, wronskian
from .errors import BesselInterlaceError, DomainError, SearchError
from .zeros import ZeroKind, zeros_upto

THREADS_ENV = "BESSEL_INTERLACE_THREADS"

_SUITES = ("theorem1", "proposition", "derivative-chains", "theorem2", "all")


# --- number / structure formatting -----------------------------------------

def fmt(x) -> str:
    """17-significant-digit decimal rendering (lossless for doubles)."""
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return format(x, ".17g")
    return str(x)


def _json_render(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(f'"{k}": ')
            _json_render(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _json_render(v, out)
        out.append("]")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif obj is None:
        out.append("null")
    elif isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'"{escaped}"')
    elif isinstance(obj, float):
        if math.isfinite(obj):
            out.append(fmt(obj))
        else:
            out.append(f'"{fmt(obj)}"')
    else:
        out.append(str(obj))


def to_json(obj) -> str:
    """Deterministic JSON with insertion-ordered keys and 17-digit floats."""
    parts: list[str] = []
    _json_render(obj, parts)
    return "".join(parts) + "\n"


def _csv_cell(value) -> str:
    text = fmt(value)
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def to_csv(header: list[str], rows: list[list], trailer: str | None = None) -> str:
    lines = [",".join(header)]
    lines += [",".join(_csv_cell(c) for c in row) for row in rows]
    if trailer is not None:
        lines.append(trailer)
    return "\n".join(lines) + "\n"


# --- config -----------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    fmt: str = "csv"
    out: str = "-"
    threads: int = 1
    params: dict = field(default_factory=dict)


def parse_grid(text: str) -> list[float]:
    """Parse lo:hi:step, endpoints inclusive within half a step."""
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must be lo:hi:step, got {text!r}", code="DOMAIN_GRID")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError(f"grid components must be numbers, got {text!r}", code="DOMAIN_GRID")
    if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
        raise DomainError(f"grid components must be finite, got {text!r}", code="DOMAIN_GRID")
    if hi < lo:
        raise DomainError(f"grid needs hi >= lo, got {text!r}", code="DOMAIN_GRID")
    if hi == lo:
        return [lo]
    if step <= 0.0:
        raise DomainError(f"grid step must be positive, got {text!r}", code="DOMAIN_GRID")
    n = int(math.floor((hi - lo) / step + 0.5))
    points = [lo + i * step for i in range(n + 1)]
    if points and points[-1] > hi + 0.5 * step:
        points.pop()
    return points


def parse_nu_list(text: str) -> list[float]:
    try:
        values = [float(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise DomainError(f"--nu-list must be comma-separated numbers, got {text!r}", code="DOMAIN_NU")
    if not values:
        raise DomainError("--nu-list must be nonempty", code="DOMAIN_NU")
    return values


def resolve_threads(flag_value: int | None) -> int:
    env = os.environ.get(THREADS_ENV)
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise DomainError(f"{THREADS_ENV} must be an integer, got {env!r}", code="DOMAIN_THREADS")
        if n < 1:
            raise DomainError(f"{THREADS_ENV} must be >= 1, got {n}", code="DOMAIN_THREADS")
        return n
    if flag_value is None:
        return 1
    if flag_value < 1:
        raise DomainError(f"--threads must be >= 1, got {flag_value}", code="DOMAIN_THREADS")
    return flag_value


# --- subcommand handlers ----------------------------------------------------

def cmd_zeros(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    kind = ZeroKind.parse(p["kind"])
    records = zeros_upto(kind, p["nu"], p["smax"])
    if cfg.fmt == "json":
        body = to_json(
            {
                "kind": kind.value,
                "nu": p["nu"],
                "zeros": [
                    {
                        "s": r.id.s,
                        "value": r.value,
                        "bracket_lo": r.bracket.lo,
                        "bracket_hi": r.bracket.hi,
                        "residual": r.residual,
                    }
                    for r in records
                ],
            }
        )
    else:
        rows = [
            [kind.value, p["nu"], r.id.s, r.value, r.bracket.lo, r.bracket.hi, r.residual]
            for r in records
        ]
        body = to_csv(["kind", "nu", "s", "value", "bracket_lo", "bracket_hi", "residual"], rows)
    return 0, body


_NODE_COLUMNS = ["jp_v_s", "y_v_s", "y_ve_s", "yp_v_s", "j_v_s", "j_ve_s", "jp_v_s1"]


def cmd_chain(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    reports = [
        interlace.check_chain(interlace.build_chain(p["nu"], p["eps"], s))
        for s in range(1, p["smax"] + 1)
    ]
    all_ok = all(r.ok for r in reports)
    if cfg.fmt == "json":
        body = to_json(
            {
                "nu": p["nu"],
                "eps": p["eps"],
                "chains": [
                    {
                        "s": r.chain.s,
                        "nodes": list(r.chain.nodes),
                        "gaps": list(r.margins),
                        "ok": r.ok,
                        "first_failure": r.first_failure,
                    }
                    for r in reports
                ],
                "all_ok": all_ok,
            }
        )
    else:
        rows = [
            [p["nu"], p["eps"], r.chain.s, *r.chain.nodes, *r.margins, str(r.ok).lower()]
            for r in reports
        ]
        header = ["nu", "eps", "s", *_NODE_COLUMNS, *[f"gap_{i}" for i in range(1, 7)], "ok"]
        body = to_csv(header, rows)
    return (0 if all_ok else 1), body


def _witness_dict(w: interlace.ViolationWitness) -> dict:
    return {
        "nu": w.nu,
        "eps": w.eps,
        "s": w.s,
        "left_label": w.left_label,
        "right_label": w.right_label,
        "left_value": w.left_value,
        "right_value": w.right_value,
    }


def _verify_task(suite: str, nu: float, eps_grid: list[float], smax: int):
    violations = []
    notes = []
    if suite in ("theorem1", "all"):
        for w in interlace.check_theorem1(nu, smax):
            violations.append(("theorem1", w))
        if nu == 0.0:
            notes.append({"suite": "theorem1", "nu": nu, "note": "nu=0 exact equalities exempt"})
    if suite in ("proposition", "all"):
        for w in interlace.check_proposition(nu, smax):
            violations.append(("proposition", w))
        if nu == 0.0:
            notes.append(
                {
                    "suite": "proposition",
                    "nu": nu,
                    "note": "j(1,s)=jp(0,s+1) and y(1,s)=yp(0,s) exactly; equalities exempt",
                }
            )
    if suite in ("derivative-chains", "all"):
        for eps in eps_grid:
            for w in interlace.check_derivative_chains(nu, eps, smax):
                violations.append(("derivative-chains", w))
    if suite in ("theorem2", "all"):
        for eps in eps_grid:
            for s in range(1, smax + 1):
                rep = interlace.check_chain(interlace.build_chain(nu, eps, s))
                if not rep.ok:
                    i = rep.first_failure
                    labels = interlace.CHAIN_LABELS
                    violations.append(
                        (
                            "theorem2",
                            interlace.ViolationWitness(
                                nu,
                                eps,
                                s,
                                labels[i],
                                labels[i + 1],
                                rep.chain.nodes[i],
                                rep.chain.nodes[i + 1],
                            ),
                        )
                    )
            if nu == 0.0 and eps == 1.0:
                notes.append({"suite": "theorem2", "nu": nu, "note": "nu=0, eps=1 equality pairs exempt"})
    return violations, notes


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    suite = p["suite"]
    if suite not in _SUITES:
        raise DomainError(f"unknown suite {suite!r}; expected one of {', '.join(_SUITES)}", code="DOMAIN_SUITE")
    nu_grid = parse_grid(p["nu_grid"])
    eps_grid = parse_grid(p["eps_grid"])
    for eps in eps_grid:
        if not 0.0 < eps <= 1.0:
            raise DomainError(f"verify eps grid must lie in (0, 1], got {eps}", code="DOMAIN_EPS")
    smax = p["smax"]

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(lambda nu: _verify_task(suite, nu, eps_grid, smax), nu_grid))
    else:
        results = [_verify_task(suite, nu, eps_grid, smax) for nu in nu_grid]

    violations = [w for vs, _ in results for w in vs]
    notes = [n for _, ns in results for n in ns]
    violations.sort(key=lambda sw: (sw[0], sw[1].nu, sw[1].eps, sw[1].s, sw[1].left_label))
    notes.sort(key=lambda n: (n["suite"], n["nu"]))

    body = to_json(
        {
            "suite": suite,
            "grid": {"nu": nu_grid, "eps": eps_grid, "smax": smax},
            "violations": [dict(_witness_dict(w), suite=s) for s, w in violations],
            "exemptions": notes,
        }
    )
    return (0 if not violations else 1), body


def cmd_break(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    if not p["eps"] > 1.0:
        raise DomainError(f"--eps must exceed 1 for the breaking search, got {p['eps']}", code="DOMAIN_EPS")
    try:
        w = interlace.find_breaking(p["nu"], p["eps"], p["scap"])
    except SearchError as exc:
        msg = {"found": False, "error": str(exc), "code": exc.code}
        if cfg.fmt == "json":
            return 1, to_json(msg)
        return 1, to_csv(["found", "error"], [["false", str(exc)]])
    if cfg.fmt == "json":
        body = to_json(
            {
                "found": True,
                "nu": w.nu,
                "eps": w.eps,
                "s": w.s,
                "y_value": w.left_value,
                "j_value": w.right_value,
            }
        )
    else:
        body = to_csv(
            ["nu", "eps", "s", "y_value", "j_value"],
            [[w.nu, w.eps, w.s, w.left_value, w.right_value]],
        )
    return 0, body


def cmd_wronskian(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    if p["nu"] == p["mu"]:
        raise DomainError("--nu and --mu must differ", code="DOMAIN_NU")
    if not p["mu"] > p["nu"]:
        raise DomainError("--mu must exceed --nu for the extremal profile", code="DOMAIN_NU")
    profile = wronskian.profile_extrema(p["nu"], p["mu"], p["smax"])
    first_zero = wronskian.has_positive_zero(p["nu"], p["mu"], p["xmax"])
    if cfg.fmt == "json":
        body = to_json(
            {
                "nu": p["nu"],
                "mu": p["mu"],
                "samples": [{"x": x, "w": w, "source": src} for x, w, src in profile.samples],
                "all_same_sign": profile.all_same_sign,
                "min_abs": profile.min_abs,
                "first_zero": first_zero,
            }
        )
    else:
        rows = [[x, w, src] for x, w, src in profile.samples]
        trailer = (
            f"# all_same_sign={str(profile.all_same_sign).lower()}"
            f" min_abs={fmt(profile.min_abs)}"
            f" first_zero={fmt(first_zero) if first_zero is not None else 'none'}"
        )
        body = to_csv(["x", "w", "source"], rows, trailer=trailer)
    return 0, body


def cmd_counterexample(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.params
    try:
        greater, less = interlace.counterexample_scan(p["eps"], p["nu_list"], p["s"], pair=p["pair"])
    except SearchError as exc:
        msg = {"found": False, "error": str(exc), "code": exc.code}
        if cfg.fmt == "json":
            return 1, to_json(msg)
        return 1, to_csv(["found", "error"], [["false", str(exc)]])
    witnesses = [("greater", greater), ("less", less)]
    if cfg.fmt == "json":
        body = to_json(
            {
                "pair": p["pair"],
                "eps": p["eps"],
                "s": p["s"],
                "witnesses": [dict(_witness_dict(w), ordering=tag) for tag, w in witnesses],
            }
        )
    else:
        rows = [
            [tag, w.nu, w.eps, w.s, w.left_label, w.left_value, w.right_label, w.right_value]
            for tag, w in witnesses
        ]
        header = ["ordering", "nu", "eps", "s", "left_label", "left_value", "right_label", "right_value"]
        body = to_csv(header, rows)
    return 0, body


_HANDLERS = {
    "zeros": cmd_zeros,
    "chain": cmd_chain,
    "verify": cmd_verify,
    "break": cmd_break,
    "wronskian": cmd_wronskian,
    "counterexample": cmd_counterexample,
}

# Best-effort mapping from domain-error codes to the offending flag.
_CODE_FLAGS = {
    "DOMAIN_NU": "--nu",
    "OVERFLOW_NU": "--nu",
    "DOMAIN_X": "--xmax",
    "DOMAIN_S": "--smax",
    "DOMAIN_EPS": "--eps",
    "DOMAIN_KIND": "--kind",
    "DOMAIN_STEP": "--step",
    "DOMAIN_GRID": "--nu-grid",
    "DOMAIN_SUITE": "--suite",
    "DOMAIN_PAIR": "--pair",
    "DOMAIN_THREADS": "--threads",
    "DOMAIN_FORMAT": "--format",
}
_CODE_FLAGS_PER_COMMAND = {
    ("break", "DOMAIN_S"): "--scap",
    ("counterexample", "DOMAIN_S"): "--s",
    ("counterexample", "DOMAIN_NU"): "--nu-list",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bessel-interlace",
        description="Bessel zero tables, interlacing verification, and Wronskian profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, default_fmt="csv"):
        sp.add_argument("--format", choices=("csv", "json"), default=default_fmt)
        sp.add_argument("--out", default="-", help="output path, or - for stdout")
        sp.add_argument("--threads", type=int, default=None, help=f"parallelism (env {THREADS_ENV} overrides)")

    sp = sub.add_parser("zeros", help="tabulate zeros of one kind and order")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--nu", type=float, required=True)
    sp.add_argument("--smax", type=int, required=True)
    common(sp)

    sp = sub.add_parser("chain", help="seven-node interlacing chains for s = 1..smax")
    sp.add_argument("--nu", type=float, required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--smax", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify", help="run inequality sweeps over an order grid")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--nu-grid", dest="nu_grid", required=True, help="lo:hi:step")
    sp.add_argument("--eps-grid", dest="eps_grid", default="0.25:1.0:0.25", help="lo:hi:step, in (0,1]")
    sp.add_argument("--smax", type=int, default=20)
    common(sp, default_fmt="json")

    sp = sub.add_parser("break", help="find the rank where an eps>1 chain breaks")
    sp.add_argument("--nu", type=float, required=True)
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--scap", type=int, default=500)
    common(sp)

    sp = sub.add_parser("wronskian", help="cross-order Wronskian extremal profile")
    sp.add_argument("--nu", type=float, required=True)
    sp.add_argument("--mu", type=float, required=True)
    sp.add_argument("--smax", type=int, default=10)
    sp.add_argument("--xmax", type=float, default=60.0)
    common(sp)

    sp = sub.add_parser("counterexample", help="witness both orderings of an unchained pair")
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--nu-list", dest="nu_list", required=True, help="comma-separated orders")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--pair", choices=("jp-vs-y", "yp-vs-j"), default="jp-vs-y")
    common(sp)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "out", "threads")}
    if "nu_list" in params and isinstance(params["nu_list"], str):
        params["nu_list"] = parse_nu_list(params["nu_list"])
    cfg = RunConfig(
        command=args.command,
        fmt=args.format,
        out=args.out,
        threads=resolve_threads(args.threads),
        params=params,
    )
    if cfg.command == "verify" and cfg.fmt != "json":
        raise DomainError("verify emits a JSON summary; use --format json", code="DOMAIN_FORMAT")
    return cfg


def _emit(cfg: RunConfig, body: str) -> None:
    if cfg.out == "-":
        sys.stdout.write(body)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help.
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        code, body = _HANDLERS[cfg.command](cfg)
    except DomainError as exc:
        flag = _CODE_FLAGS_PER_COMMAND.get((args.command, exc.code)) or _CODE_FLAGS.get(exc.code, "")
        where = f" ({flag})" if flag else ""
        print(f"bessel-interlace {args.command}: error{where}: {exc}", file=sys.stderr)
        return 2
    except BesselInterlaceError as exc:
        print(f"bessel-interlace {args.command}: error ({exc.code}): {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # malformed input must never escape as a traceback
        print(f"bessel-interlace {args.command}: internal error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, body)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
