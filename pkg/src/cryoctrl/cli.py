"""Command-line interface: bounds, estimate, sweep, capacity, simulate.

Exit codes: 0 success, 1 validation/usage error, 2 runtime error. Errors go
to stderr, data to the requested file or stdout. All outputs are
deterministic: repeated invocations are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import noise
from .config import ConfigError, DacArchitecture, Scenario, load_scenario
from .report import (
    SWEEP_PARAMS,
    assemble,
    dac_sweep,
    dac_sweep_csv,
    qubit_capacity,
    sweep,
    sweep_csv,
)
from .sim import SimulationConfigError, StimulusError, parse_duration_ns, run_simulation


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="cryoctrl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command")

    def add_scenario(sp):
        sp.add_argument("--scenario", required=True, help="scenario JSON file")

    def add_format(sp, choices=("json", "csv", "text")):
        sp.add_argument("--format", choices=choices, default=choices[0])

    sp = sub.add_parser("bounds", help="thermal-noise sizing bounds for a scenario")
    add_scenario(sp)
    add_format(sp, ("text", "csv", "json"))

    sp = sub.add_parser("estimate", help="per-unit area/power report")
    add_scenario(sp)
    sp.add_argument("--include-data-input", action="store_true",
                    help="count data-input-control power (memory-load regime)")
    sp.add_argument("--out", help="write the report to this file instead of stdout")
    add_format(sp)

    sp = sub.add_parser("sweep", help="parameter sweep emitting CSV rows")
    add_scenario(sp)
    sp.add_argument("--param", choices=SWEEP_PARAMS)
    sp.add_argument("--points", help="comma-separated values, e.g. 1,0.5,0.1,0.01")
    sp.add_argument("--unit", choices=("dac",),
                    help="sweep a single unit instead of the whole system")
    sp.add_argument("--conditions", choices=("bias", "rf"), default="bias",
                    help="operating conditions for --unit dac")
    sp.add_argument("--csv", help="write CSV to this file instead of stdout")

    sp = sub.add_parser("capacity", help="qubits controllable within a cooling budget")
    add_scenario(sp)
    sp.add_argument("--budget", required=True, type=float, help="cooling budget [W]")
    sp.add_argument("--exact", action="store_true",
                    help="divide by the exact total instead of the 2-significant-figure value")
    add_format(sp, ("text", "json"))

    sp = sub.add_parser("simulate", help="run the behavioral simulator")
    add_scenario(sp)
    sp.add_argument("--stimulus", required=True, help="stimulus file")
    sp.add_argument("--until", required=True, help="simulated time, e.g. 200us")
    sp.add_argument("--trace", help="write the trace CSV to this file")
    sp.add_argument("--vcd", help="write a value-change dump text file")
    return p


def _scenario(args) -> Scenario:
    path = Path(args.scenario)
    if not path.is_file():
        raise ConfigError(f"scenario file not found: {path}")
    return load_scenario(path)


def _write_out(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_bounds(args) -> int:
    sc = _scenario(args)
    s, op = sc.spec, sc.op
    rows = [
        ("bias_dac_min_unit_cap", noise.min_unit_cap(s.n_bias, s.dv_bias, op.t_el)),
        ("bias_dac_max_unit_res_ladder",
         noise.max_unit_res(DacArchitecture.LADDER, s.n_bias, s.dv_bias, op.t_el, op.b_bias)),
        ("bias_dac_max_unit_res_kelvin",
         noise.max_unit_res(DacArchitecture.KELVIN, s.n_bias, s.dv_bias, op.t_el, op.b_bias)),
        ("sh_min_hold_cap", noise.min_hold_cap(s.n_bias_signals, s.dv_bias, op.t_el)),
        ("rf_dac_min_unit_cap", noise.min_unit_cap(s.n_rf, s.dv_rf, op.t_el)),
        ("rf_dac_max_unit_res_ladder",
         noise.max_unit_res(DacArchitecture.LADDER, s.n_rf, s.dv_rf, op.t_el, op.b_rf)),
        ("rf_dac_max_unit_res_kelvin",
         noise.max_unit_res(DacArchitecture.KELVIN, s.n_rf, s.dv_rf, op.t_el, op.b_rf)),
    ]
    if args.format == "json":
        data = {name: {"kind": b.kind.value, "value": b.value, "binding": b.binding_spec}
                for name, b in rows}
        _write_out(json.dumps(data, indent=2, sort_keys=True) + "\n", None)
    elif args.format == "csv":
        lines = ["bound,kind,value,binding"]
        lines += [f"{name},{b.kind.value},{b.value!r},\"{b.binding_spec}\"" for name, b in rows]
        _write_out("\n".join(lines) + "\n", None)
    else:
        width = max(len(name) for name, _ in rows)
        lines = [f"{name:<{width}}  {b.kind.value:<16} {b.value:.6g}  ({b.binding_spec})"
                 for name, b in rows]
        _write_out("\n".join(lines) + "\n", None)
    return 0


def _report_text(rep) -> str:
    d = rep.to_dict()
    lines = [f"{'unit':<10} {'area/um^2':>12} {'power/W':>12}"]
    for unit in ("bias_gen", "rf_gen", "memory", "managing"):
        lines.append(f"{unit:<10} {d[unit]['area_um2']:>12.4g} {d[unit]['power_w']:>12.4g}")
    t = d["totals"]
    lines.append(f"{'total':<10} {t['area_um2']:>12.4g} {t['power_w']:>12.4g}")
    return "\n".join(lines) + "\n"


def _report_csv(rep) -> str:
    d = rep.to_dict()
    lines = ["unit,area_um2,power_w"]
    for unit in ("bias_gen", "rf_gen", "memory", "managing"):
        lines.append(f"{unit},{d[unit]['area_um2']!r},{d[unit]['power_w']!r}")
    lines.append(f"total,{d['totals']['area_um2']!r},{d['totals']['power_w']!r}")
    return "\n".join(lines) + "\n"


def _cmd_estimate(args) -> int:
    rep = assemble(_scenario(args), include_data_input=args.include_data_input)
    if args.format == "json":
        text = json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _report_csv(rep)
    else:
        text = _report_text(rep)
    _write_out(text, args.out)
    return 0


def _cmd_sweep(args) -> int:
    sc = _scenario(args)
    if args.unit == "dac":
        text = dac_sweep_csv(dac_sweep(sc, condition=args.conditions))
    else:
        if not args.param or not args.points:
            raise UsageError("sweep requires --param and --points (or --unit dac)")
        try:
            values = [float(v) for v in args.points.split(",") if v.strip()]
        except ValueError:
            raise UsageError("--points must be a comma-separated list of numbers")
        if not values:
            raise UsageError("--points is empty")
        text = sweep_csv(sweep(sc, args.param, values))
    _write_out(text, args.csv)
    return 0


def _cmd_capacity(args) -> int:
    rep = assemble(_scenario(args))
    result = qubit_capacity(rep, args.budget, sig_figs=None if args.exact else 2)
    if args.format == "json":
        out = {
            "budget_w": result.budget_w,
            "per_qubit_w": result.per_qubit_w,
            "n_qubits": result.n_qubits,
        }
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(f"{result.n_qubits}\n")
    return 0


def _cmd_simulate(args) -> int:
    sc = _scenario(args)
    stim_path = Path(args.stimulus)
    if not stim_path.is_file():
        raise ConfigError(f"stimulus file not found: {stim_path}")
    t_end = parse_duration_ns(args.until)
    trace = run_simulation(sc, stim_path, t_end)
    if args.trace:
        Path(args.trace).write_text(trace.to_csv())
    if args.vcd:
        Path(args.vcd).write_text(trace.to_vcd_text())
    if not args.trace and not args.vcd:
        sys.stdout.write(trace.to_csv())
    summary = {
        "events": len(trace.events),
        "max_refresh_deviation_v": max(trace.stats["max_refresh_deviation_v"]),
        "rf_samples_emitted": trace.stats["rf_samples_emitted"],
        "backpressure_count": trace.stats["backpressure_count"],
    }
    sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
    return 0


_COMMANDS = {
    "bounds": _cmd_bounds,
    "estimate": _cmd_estimate,
    "sweep": _cmd_sweep,
    "capacity": _cmd_capacity,
    "simulate": _cmd_simulate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_usage(sys.stderr)
            return 1
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 1
    except (ConfigError, StimulusError, SimulationConfigError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"runtime error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"runtime error: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
