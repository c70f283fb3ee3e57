"""Command-line front end: ``autoseq <command> --spec FILE [options]``.

Exit codes: 0 success, 1 invalid input (bad spec, bad flags, kernel not
closed at the requested horizon), 2 a verification that must hold failed,
which points at a bug rather than at the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .automata import automaticity_report, export_dot, kernel_explore, run_dfao, synthesize_dfao
from .christol import rationality_gap_witness, rationality_report, theta_series, verify_hyperquadratic
from .contfrac import cf_alpha_series, cf_expand
from .errors import AutoseqError, VerificationFailure
from .recurrences import CFSequenceSpec, PowerRecurrenceSpec, TermOracle, generate
from .specfile import load_spec, spec_to_dict

COMMANDS = ("gen", "certify", "prop3", "kernel", "dfao-dot", "cf", "report")
FORMATS = ("json", "text", "dot")


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec_path: Path
    order: int = 1000
    horizon: int = 1024
    terms: int = 32
    base: int | None = None
    out: Path | None = None
    format: str = "text"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        for name in ("order", "horizon", "terms"):
            if getattr(self, name) < 1:
                raise ValueError(f"--{name} must be >= 1")
        if self.base is not None and self.base < 2:
            raise ValueError("--base must be >= 2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autoseq", description=__doc__.split("\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", required=True, type=Path, help="spec file (.toml or .json)")
    parser.add_argument("--order", type=int, default=1000, help="truncation order for series checks")
    parser.add_argument("--horizon", type=int, default=1024, help="window length for kernel comparisons")
    parser.add_argument("--terms", type=int, default=32, help="number of terms or quotients")
    parser.add_argument("--base", type=int, help="kernel base (default: p, or r for power recurrences)")
    parser.add_argument("--out", type=Path, help="write output here instead of stdout")
    parser.add_argument("--format", choices=FORMATS, default="text")
    return parser


def _kernel_base(spec, cfg: RunConfig) -> int:
    if cfg.base is not None:
        return cfg.base
    return spec.r if isinstance(spec, PowerRecurrenceSpec) else spec.field.p


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _gen(spec, cfg):
    terms = [str(x) for x in generate(spec, cfg.terms)]
    if cfg.format == "json":
        return _dump({"spec": spec_to_dict(spec), "terms": terms}), 0
    return "".join(t + "\n" for t in terms), 0


def _certify(spec, cfg):
    if isinstance(spec, PowerRecurrenceSpec):
        raise AutoseqError("certify needs a thm2 or prop1 spec")
    cert = verify_hyperquadratic(spec, cfg.order)
    status = 0 if cert.ok else 2
    if cfg.format == "json":
        return _dump(cert.to_json()), status
    text = (
        f"A = {cert.A}\nB = {cert.B}\nC = {cert.C}\n"
        f"order_checked = {cert.order_checked}\n"
        f"residual_theta = {str(cert.residual_theta).lower()}\n"
        f"residual_rho = {str(cert.residual_rho).lower()}\n"
    )
    return text, status


def _prop3(spec, cfg):
    if not isinstance(spec, CFSequenceSpec):
        raise AutoseqError("prop3 needs a prop1 spec")
    rep = rationality_report(spec, order=cfg.order)
    payload = rep.to_json()
    ok = rep.ok
    if not rep.rational:
        gaps = rationality_gap_witness(rep, cfg.order)
        payload["gap_witness"] = {"ok": gaps.ok, "gaps_checked": gaps.gaps_checked, "gap_lengths": gaps.gap_lengths}
        ok = ok and gaps.ok
    status = 0 if ok else 2
    if cfg.format == "json":
        return _dump(payload), status
    lines = [f"verdict = {rep.verdict}", "u = " + " ".join(payload["u_coeffs"])]
    lines += [f"{key} = {json.dumps(payload[key])}" for key in (
        "u_formula_agrees", "alpha_beta_identity", "sigma_fixed_point", "fixed_point_order",
        "theta_identity", "provable_order",
    )]
    if "gap_witness" in payload:
        lines.append(f"gap_witness = {json.dumps(payload['gap_witness'], sort_keys=True)}")
    return "\n".join(lines) + "\n", status


def _kernel(spec, cfg):
    r = _kernel_base(spec, cfg)
    k = kernel_explore(TermOracle(spec), r, cfg.horizon)
    if cfg.format == "json":
        return _dump(k.to_json()), 0
    lines = [f"r = {r}", f"horizon = {cfg.horizon}", f"closed = {str(k.closed).lower()}", f"classes = {k.class_count}"]
    for c in range(k.class_count):
        a, b = k.origins[c]
        row = " ".join(str(k.transitions.get((c, j))) for j in range(r))
        lines.append(f"s{c} (n -> v({r}^{a} n + {b})): {row}")
    return "\n".join(lines) + "\n", 0


def _dfao_dot(spec, cfg):
    r = _kernel_base(spec, cfg)
    oracle = TermOracle(spec)
    dfao = synthesize_dfao(kernel_explore(oracle, r, cfg.horizon))
    for n in range(1, cfg.horizon + 1):
        if run_dfao(dfao, n) != oracle(n):
            raise VerificationFailure(f"automaton disagrees with the sequence at n = {n}")
    return export_dot(dfao), 0


def _cf(spec, cfg):
    # prop1 specs: the continued fraction [l1 T, l2 T, ...]; otherwise theta
    if isinstance(spec, CFSequenceSpec):
        series = cf_alpha_series(generate(spec, cfg.order // 2 + 3), cfg.order)
    else:
        series = theta_series(spec, cfg.order)
    cf = cf_expand(series, cfg.terms)
    if cfg.format == "json":
        return _dump({"quotients": cf.to_json(), "exact": cf.exact, "truncated": cf.truncated}), 0
    return "".join(f"{a}\n" for a in cf.quotients), 0


def _report(spec, cfg):
    r = _kernel_base(spec, cfg)
    oracle = TermOracle(spec)
    prefix = generate(spec, r * cfg.horizon + r)
    rep = automaticity_report(prefix, r, horizon=cfg.horizon, oracle=oracle)
    payload = rep.to_json()
    if not isinstance(spec, PowerRecurrenceSpec):
        cert = verify_hyperquadratic(spec, cfg.order)
        payload["hyperquadratic"] = cert.to_json()
        status = 0 if cert.ok else 2
    else:
        status = 0
    if cfg.format == "json":
        return _dump(payload), status
    lines = list(rep.notes)
    if "hyperquadratic" in payload:
        lines.append(f"hyperquadratic identities hold to order {cfg.order}: {str(status == 0).lower()}")
    return "\n".join(lines) + "\n", status


HANDLERS = {
    "gen": _gen,
    "certify": _certify,
    "prop3": _prop3,
    "kernel": _kernel,
    "dfao-dot": _dfao_dot,
    "cf": _cf,
    "report": _report,
}


def cmd_run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            spec_path=args.spec,
            order=args.order,
            horizon=args.horizon,
            terms=args.terms,
            base=args.base,
            out=args.out,
            format=args.format,
        )
        spec = load_spec(cfg.spec_path)
        text, status = HANDLERS[cfg.command](spec, cfg)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (AutoseqError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.out is not None:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)
    if status == 2:
        print("verification failed: an identity that must hold did not", file=sys.stderr)
    return status


def main() -> None:
    sys.exit(cmd_run())


if __name__ == "__main__":
    main()
