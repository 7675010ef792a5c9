"""System assembly: per-unit reports, sweeps, and cooling-budget capacity."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import noise
from .analog import (
    GenReport,
    bias_dac_design,
    derived_clocks,
    bias_gen_report,
    rf_dac_design,
    rf_gen_report,
)
from .config import DacArchitecture, Scenario, scenario_to_dict
from .digital import UnitReport, managing_report, memory_design, memory_report


@dataclass(frozen=True)
class Report:
    """Per-unit area/power breakdown plus totals for one scenario."""

    scenario: Scenario
    bias_gen: GenReport
    rf_gen: GenReport
    memory: UnitReport
    managing: UnitReport
    f_refresh: float
    f_clk_bias: float
    f_clk_rf: float
    include_data_input: bool
    notes: tuple[str, ...] = ()

    @property
    def total_area_um2(self) -> float:
        return (self.bias_gen.area_um2 + self.rf_gen.area_um2
                + self.memory.area_um2 + self.managing.area_um2)

    @property
    def total_power_w(self) -> float:
        return (self.bias_gen.power_w + self.rf_gen.power_w
                + self.memory.power_w + self.managing.power_w)

    def unit_powers(self) -> dict:
        return {
            "bias_gen": self.bias_gen.power_w,
            "rf_gen": self.rf_gen.power_w,
            "memory": self.memory.power_w,
            "managing": self.managing.power_w,
        }

    def to_dict(self) -> dict:
        return {
            "bias_gen": {
                "area_um2": self.bias_gen.area_um2,
                "p_analog_w": self.bias_gen.p_analog_w,
                "p_digital_w": self.bias_gen.p_digital_w,
                "power_w": self.bias_gen.power_w,
            },
            "rf_gen": {
                "area_um2": self.rf_gen.area_um2,
                "p_analog_w": self.rf_gen.p_analog_w,
                "p_digital_w": self.rf_gen.p_digital_w,
                "power_w": self.rf_gen.power_w,
            },
            "memory": {"area_um2": self.memory.area_um2, "power_w": self.memory.power_w},
            "managing": {"area_um2": self.managing.area_um2, "power_w": self.managing.power_w},
            "totals": {"area_um2": self.total_area_um2, "power_w": self.total_power_w},
            "clocks_hz": {
                "f_refresh": self.f_refresh,
                "f_clk_bias": self.f_clk_bias,
                "f_clk_rf": self.f_clk_rf,
            },
            "include_data_input": self.include_data_input,
            "notes": list(self.notes),
            "scenario": scenario_to_dict(self.scenario),
        }


def assemble(sc: Scenario, include_data_input: bool = False) -> Report:
    """Evaluate all four unit models for one scenario.

    Per-unit digital figures rest on calibrated gate budgets; the analog
    terms are closed forms. By default the power refers to the operation
    regime, i.e. the data-input subunit contributes area but no power.
    """
    sc.validate()
    clocks = derived_clocks(sc)
    notes = []
    if not include_data_input:
        notes.append("operation regime: data input control excluded from power")
    notes.append("digital unit figures use calibrated gate budgets")
    return Report(
        scenario=sc,
        bias_gen=bias_gen_report(sc),
        rf_gen=rf_gen_report(sc),
        memory=memory_report(memory_design(sc), sc),
        managing=managing_report(sc, include_data_input=include_data_input),
        f_refresh=clocks.f_refresh,
        f_clk_bias=clocks.f_clk_bias,
        f_clk_rf=clocks.f_clk_rf,
        include_data_input=include_data_input,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Sweeps

SWEEP_PARAMS = ("n_bias", "n_rf", "v_dd")

SWEEP_CSV_HEADER = (
    "param,value,bias_gen_area_um2,bias_gen_power_w,rf_gen_area_um2,rf_gen_power_w,"
    "memory_area_um2,memory_power_w,managing_area_um2,managing_power_w,"
    "total_area_um2,total_power_w,status"
)


@dataclass(frozen=True)
class SweepRow:
    param: str
    value: float
    report: Report | None
    status: str  # "ok" or "invalid: <reason>"


def _with_param(sc: Scenario, param: str, value) -> Scenario:
    if param == "n_bias":
        return replace(sc, spec=replace(sc.spec, n_bias=int(value)))
    if param == "n_rf":
        return replace(sc, spec=replace(sc.spec, n_rf=int(value)))
    if param == "v_dd":
        return replace(sc, op=replace(sc.op, v_dd=float(value)))
    raise ValueError(f"unknown sweep parameter '{param}' (one of {SWEEP_PARAMS})")


def sweep(sc: Scenario, param: str, values) -> list[SweepRow]:
    """One report per parameter value, ordered by value; a value that fails
    validation yields an invalid row instead of aborting the sweep."""
    rows = []
    for value in sorted(values):
        try:
            rows.append(SweepRow(param, value, assemble(_with_param(sc, param, value)), "ok"))
        except ValueError as exc:
            rows.append(SweepRow(param, value, None, f"invalid: {exc}"))
    return rows


def sweep_csv(rows: list[SweepRow]) -> str:
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        if row.report is None:
            cells = [row.param, repr(row.value)] + [""] * 10 + [row.status]
        else:
            r = row.report
            cells = [
                row.param, repr(row.value),
                repr(r.bias_gen.area_um2), repr(r.bias_gen.power_w),
                repr(r.rf_gen.area_um2), repr(r.rf_gen.power_w),
                repr(r.memory.area_um2), repr(r.memory.power_w),
                repr(r.managing.area_um2), repr(r.managing.power_w),
                repr(r.total_area_um2), repr(r.total_power_w),
                row.status,
            ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


DAC_SWEEP_CSV_HEADER = "arch,n,area_um2,p_analog_w,p_switch_w,noise_vrms"


def dac_sweep(sc: Scenario, n_values=range(2, 17), condition: str = "bias") -> list[dict]:
    """Single-DAC comparison rows for all three architectures.

    ``condition`` selects the operating point: "bias" (full range at the
    refresh rate) or "rf" (pulse amplitude at the sample rate). Switches are
    clocked at twice the conversion rate.
    """
    from .dac import dac_analog_power, dac_area, dac_output_noise, dac_switch_power, design_dac

    s = sc.spec
    clocks = derived_clocks(sc)
    if condition == "bias":
        v_range, f_conv, t, b = s.v_range_bias, clocks.f_refresh, sc.op.t_el, sc.op.b_bias
    elif condition == "rf":
        v_range, f_conv, t, b = s.v_range_rf, s.f_sample_rf, sc.op.t_el, sc.op.b_rf
    else:
        raise ValueError("condition must be 'bias' or 'rf'")

    rows = []
    for arch in DacArchitecture:
        for n in n_values:
            d = design_dac(arch, n, sc.tech)
            rows.append({
                "arch": arch.value,
                "n": n,
                "area_um2": dac_area(d, sc.tech),
                "p_analog_w": dac_analog_power(d, v_range, f_conv),
                "p_switch_w": dac_switch_power(d, sc.op.v_dd, 2.0 * f_conv,
                                               sc.op.sigma_con, sc.tech),
                "noise_vrms": dac_output_noise(d, t, b),
            })
    return rows


def dac_sweep_csv(rows: list[dict]) -> str:
    lines = [DAC_SWEEP_CSV_HEADER]
    for r in rows:
        lines.append(",".join([
            r["arch"], str(r["n"]), repr(r["area_um2"]),
            repr(r["p_analog_w"]), repr(r["p_switch_w"]), repr(r["noise_vrms"]),
        ]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cooling-budget capacity

@dataclass(frozen=True)
class CapacityResult:
    budget_w: float
    per_qubit_w: float
    n_qubits: int


def round_sig(x: float, sig: int) -> float:
    """Round to ``sig`` significant figures."""
    if x == 0:
        return 0.0
    return round(x, -int(math.floor(math.log10(abs(x)))) + sig - 1)


def qubit_capacity(report, budget_w: float, sig_figs: int | None = 2) -> CapacityResult:
    """Number of controllable qubits, floor(budget / per-qubit dissipation).

    ``report`` is a :class:`Report` or a per-qubit power in watts. The
    dissipation is quantized to ``sig_figs`` significant figures first
    (default 2, the presentation precision of the reference tables, making
    the published capacities reproducible); pass ``sig_figs=None`` for exact
    division.
    """
    per_qubit = report.total_power_w if isinstance(report, Report) else float(report)
    if per_qubit <= 0:
        raise ValueError("per-qubit power must be positive")
    if budget_w <= 0:
        raise ValueError("budget must be positive")
    if sig_figs is not None:
        per_qubit = round_sig(per_qubit, sig_figs)
    return CapacityResult(budget_w, per_qubit, math.floor(budget_w / per_qubit))


# ---------------------------------------------------------------------------
# Operating-temperature adjustment

def temperature_adjust(sc: Scenario, t_el: float) -> Scenario:
    """Re-size the analog components for a different electronics temperature.

    Thermal-noise minimums scale linearly with temperature. The bias path
    (hold capacitor and bias DAC unit) keeps its margin ratio above the
    bound, i.e. scales by t_el / t_old; the refresh rate and bias clock
    follow automatically. The RF DAC unit is only raised to its new minimum
    if the current value would violate it (the pulse path has no derived
    rates that benefit from extra margin).
    """
    if t_el <= 0:
        raise ValueError("t_el must be positive")
    if t_el == sc.op.t_el:
        return sc
    ratio = t_el / sc.op.t_el
    s = sc.spec

    c_h = sc.c_h * ratio

    def scaled_bias_unit() -> float:
        d = bias_dac_design(sc)
        if d.arch is DacArchitecture.CAP:
            return d.unit_value * ratio
        return d.unit_value / ratio  # resistive bound shrinks with T

    def adjusted_rf_unit() -> float:
        d = rf_dac_design(sc)
        if d.arch is DacArchitecture.CAP:
            bound = noise.min_unit_cap(s.n_rf, s.dv_rf, t_el).value
            return max(d.unit_value, bound)
        bound = noise.max_unit_res(d.arch, s.n_rf, s.dv_rf, t_el, sc.op.b_rf).value
        return min(d.unit_value, bound)

    return replace(
        sc,
        c_h=c_h,
        bias_dac_unit=scaled_bias_unit(),
        rf_dac_unit=adjusted_rf_unit(),
        op=replace(sc.op, t_el=t_el, f_clk_bias=None),
    )
