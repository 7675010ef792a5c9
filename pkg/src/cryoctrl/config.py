"""Scenario configuration: qubit-side requirements, process parameters, operating point.

A :class:`Scenario` bundles everything the estimator and the behavioral
simulator need: the signal requirements (``SystemSpec``), the CMOS process
constants (``TechnologyParams``), the chosen operating point
(``OperatingPoint``), and the architecture selections (memory type, DAC
types, unit-component sizes).

Scenario files are JSON with the same field names as the dataclasses below.
All physical quantities are SI units (volts, farads, ohms, hertz, kelvin);
areas are in square micrometres. Unknown keys are a hard error so that a
typo cannot silently fall back to a default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path


class ConfigError(ValueError):
    """A scenario file failed to parse or violated an invariant."""


class MemoryArch(str, Enum):
    FLIP_FLOP = "ff"
    SRAM = "sram"


class DacArchitecture(str, Enum):
    KELVIN = "kelvin"
    LADDER = "ladder"
    CAP = "cap"


class Node(str, Enum):
    NODE_65NM = "65nm"
    NODE_14NM = "14nm"


# Unit resistor of an R-2R ladder when no explicit value is given. Smaller
# values drive static power up; this is the comparison value used throughout
# the reference design point.
DEFAULT_LADDER_UNIT_RES = 150.0


@dataclass(frozen=True)
class SystemSpec:
    """Qubit-side signal requirements.

    n_bias_signals : number of DC electrodes served by the bias path
    v_range_bias   : full-scale bias output range [V]
    dv_bias        : allowed RMS fluctuation on a bias electrode [V]
    n_bias         : bias DAC resolution [bits]
    n_rf_signals   : number of fast pulse electrodes
    v_range_rf     : full-scale pulse amplitude [V]
    n_rf           : pulse DAC resolution [bits]
    dv_rf          : allowed RMS fluctuation on a pulse electrode [V]
    f_sample_rf    : pulse sample rate [Hz]
    l_pulse        : samples per stored pulse sequence
    n_pulses       : number of stored pulse sequences
    """

    n_bias_signals: int = 8
    v_range_bias: float = 1.0
    dv_bias: float = 3e-6
    n_bias: int = 12
    n_rf_signals: int = 2
    v_range_rf: float = 4e-3
    n_rf: int = 10
    dv_rf: float = 8e-6
    f_sample_rf: float = 300e6
    l_pulse: int = 16
    n_pulses: int = 16

    def validate(self) -> None:
        for name in (
            "n_bias_signals", "v_range_bias", "dv_bias", "n_bias",
            "n_rf_signals", "v_range_rf", "n_rf", "dv_rf", "f_sample_rf",
            "l_pulse", "n_pulses",
        ):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        for name in ("n_bias", "n_rf"):
            if not 1 <= getattr(self, name) <= 24:
                raise ConfigError(f"{name} must be in [1, 24]")
        for name in ("l_pulse", "n_pulses"):
            v = getattr(self, name)
            if v & (v - 1) != 0:
                raise ConfigError(f"{name} must be a power of two")


@dataclass(frozen=True)
class TechnologyParams:
    """Process constants of the CMOS technology, 65 nm baseline.

    The first group are effective densities and typical device figures; the
    second group are process limits and the nominal digital supply. The
    calibration capacitances ``c_ff_equiv`` (equivalent switching capacitance
    of one flip-flop incl. local clocking/logic) and ``c_sram_bit`` are fitted
    against the reference memory power figures. The ``*_scale`` factors are
    1.0 at the 65 nm baseline and set by :func:`apply_node` for other nodes.
    """

    rho_r: float = 21.4            # ohm per um^2, effective resistive density
    rho_c: float = 1.75e-15        # F per um^2, effective capacitive density
    a_mos: float = 0.375           # um^2, mean transistor area
    c_mos: float = 150e-18         # F, mean transistor gate capacitance
    r_off: float = 1e12            # ohm, switch off-resistance
    r_on: float = 5e3              # ohm, switch on-resistance
    r_min: float = 15.0            # ohm, minimum poly resistor
    c_min: float = 10e-15          # F, minimum MIM capacitor
    v_dd: float = 1.0              # V, nominal digital supply
    c_ff_equiv: float = 3.25e-15   # F per flip-flop, calibration
    a_ff: float = 10.0             # um^2 per flip-flop
    c_sram_bit: float = 1.25e-15   # F per SRAM bit, calibration
    a_sram_cell: float = 0.5       # um^2 per SRAM cell
    logic_area_scale: float = 1.0
    sram_area_scale: float = 1.0
    cap_density_scale: float = 1.0
    digital_cap_scale: float = 1.0
    r_off_multiplier: float = 1.0

    def r_off_effective(self) -> float:
        return self.r_off * self.r_off_multiplier

    def validate(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ConfigError(f"{f.name} must be positive")


@dataclass(frozen=True)
class OperatingPoint:
    """Operating temperature, supply, clocks, bandwidths, and activities.

    The clocks are normally left as ``None`` and derived: logic is edge
    triggered and runs at twice the conversion rate of its analog
    counterpart, so ``f_clk_bias`` becomes twice the refresh rate and
    ``f_clk_rf`` twice the pulse sample rate (600 MHz at the defaults).
    """

    t_el: float = 0.2              # K, electronics temperature
    v_dd: float = 1.0              # V, operating digital supply
    f_clk_bias: float | None = None
    f_clk_rf: float | None = None
    b_bias: float = 10e6           # Hz, bias-path effective bandwidth
    b_rf: float = 600e6            # Hz, pulse-path effective bandwidth
    sigma_biasmem: float = 0.306
    sigma_rfmem: float = 0.026
    sigma_con: float = 0.5

    def validate(self) -> None:
        if self.t_el <= 0:
            raise ConfigError("t_el must be positive")
        if self.v_dd <= 0:
            raise ConfigError("v_dd must be positive")
        for name in ("f_clk_bias", "f_clk_rf"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ConfigError(f"{name} must be positive")
        for name in ("b_bias", "b_rf"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        for name in ("sigma_biasmem", "sigma_rfmem", "sigma_con"):
            s = getattr(self, name)
            if not 0 < s <= 0.5:
                raise ConfigError(f"{name} must be in (0, 0.5]")


@dataclass(frozen=True)
class Scenario:
    """A complete technology + architecture + operating-point choice."""

    spec: SystemSpec = field(default_factory=SystemSpec)
    tech: TechnologyParams = field(default_factory=TechnologyParams)
    op: OperatingPoint = field(default_factory=OperatingPoint)
    memory_arch: MemoryArch = MemoryArch.FLIP_FLOP
    bias_dac_arch: DacArchitecture = DacArchitecture.CAP
    rf_dac_arch: DacArchitecture = DacArchitecture.CAP
    c_h: float = 307e-15           # F, per-electrode hold capacitor
    bias_dac_unit: float | None = None   # None = architecture default
    rf_dac_unit: float | None = None

    def validate(self) -> None:
        from . import noise  # deferred: noise imports the enums above

        self.spec.validate()
        self.tech.validate()
        self.op.validate()
        if self.c_h <= 0:
            raise ConfigError("c_h must be positive")
        hold_min = noise.min_hold_cap(
            self.spec.n_bias_signals, self.spec.dv_bias, self.op.t_el
        ).value
        if self.c_h < hold_min:
            raise ConfigError(
                f"c_h={self.c_h:.3e} F is below the thermal-noise minimum "
                f"{hold_min:.3e} F at t_el={self.op.t_el} K"
            )
        for name in ("bias_dac_unit", "rf_dac_unit"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ConfigError(f"{name} must be positive")


def apply_node(tech: TechnologyParams, node: Node | str) -> TechnologyParams:
    """Return ``tech`` rescaled to the given technology node.

    The input must be an unscaled 65 nm baseline. ``Node.NODE_65NM`` is the
    identity. ``Node.NODE_14NM`` shrinks logic by 24x and SRAM cells by 7x,
    raises the capacitive density by 200x (trench capacitors), and scales the
    digital switching capacitance by 0.75 (calibrated against the reference
    14 nm power figures). Individual factors can be overridden afterwards
    with :func:`dataclasses.replace`.
    """
    node = Node(node)
    if node is Node.NODE_65NM:
        return tech
    for name in ("logic_area_scale", "sram_area_scale", "cap_density_scale",
                 "digital_cap_scale"):
        if getattr(tech, name) != 1.0:
            raise ConfigError(f"apply_node expects a 65 nm baseline; {name} != 1")
    return replace(
        tech,
        logic_area_scale=1.0 / 24.0,
        sram_area_scale=1.0 / 7.0,
        cap_density_scale=200.0,
        digital_cap_scale=0.75,
    )


# ---------------------------------------------------------------------------
# JSON loading / saving

_ENUM_FIELDS = {
    "memory_arch": MemoryArch,
    "bias_dac_arch": DacArchitecture,
    "rf_dac_arch": DacArchitecture,
}


def _merge_dataclass(cls, defaults, data: dict, path: str):
    known = {f.name for f in fields(cls)}
    for key in data:
        if key not in known:
            raise ConfigError(f"unknown key '{path}.{key}' in scenario file")
    return replace(defaults, **data)


def scenario_from_dict(data: dict) -> Scenario:
    """Build a validated Scenario from a dict, filling defaults.

    Recognized top-level keys: ``defaults`` (optional, must be ``"paper"``),
    ``node`` (optional shorthand that applies :func:`apply_node` before any
    explicit ``tech`` overrides), and the Scenario field names.
    """
    if not isinstance(data, dict):
        raise ConfigError("scenario file must contain a JSON object")
    data = dict(data)

    defaults = data.pop("defaults", "paper")
    if defaults != "paper":
        raise ConfigError(f"unsupported defaults '{defaults}' (only \"paper\")")

    sc = Scenario()
    node = data.pop("node", None)
    tech = apply_node(sc.tech, node) if node is not None else sc.tech

    known = {f.name for f in fields(Scenario)}
    for key in data:
        if key not in known:
            raise ConfigError(f"unknown key '{key}' in scenario file")

    spec = _merge_dataclass(SystemSpec, sc.spec, data.pop("spec", {}), "spec")
    tech = _merge_dataclass(TechnologyParams, tech, data.pop("tech", {}), "tech")
    op = _merge_dataclass(OperatingPoint, sc.op, data.pop("op", {}), "op")

    simple: dict = {}
    for key, value in data.items():
        if key in _ENUM_FIELDS:
            try:
                value = _ENUM_FIELDS[key](value)
            except ValueError:
                choices = ", ".join(e.value for e in _ENUM_FIELDS[key])
                raise ConfigError(f"{key} must be one of: {choices}") from None
        simple[key] = value

    sc = replace(sc, spec=spec, tech=tech, op=op, **simple)
    sc.validate()
    return sc


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(data)


def scenario_to_dict(sc: Scenario) -> dict:
    """Serialize a Scenario to a plain dict (inverse of scenario_from_dict)."""

    def dc(obj):
        return {f.name: getattr(obj, f.name) for f in fields(obj)}

    out = {
        "spec": dc(sc.spec),
        "tech": dc(sc.tech),
        "op": dc(sc.op),
        "memory_arch": sc.memory_arch.value,
        "bias_dac_arch": sc.bias_dac_arch.value,
        "rf_dac_arch": sc.rf_dac_arch.value,
        "c_h": sc.c_h,
        "bias_dac_unit": sc.bias_dac_unit,
        "rf_dac_unit": sc.rf_dac_unit,
    }
    return out


def save_scenario(sc: Scenario, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scenario_to_dict(sc), indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# Built-in reference scenarios

def baseline_scenario() -> Scenario:
    """65 nm, flip-flop memory, 1 V supply: the reference design point."""
    return Scenario()


def scenario_65nm_sram() -> Scenario:
    return replace(Scenario(), memory_arch=MemoryArch.SRAM)


def scenario_65nm_sram_100mv() -> Scenario:
    sc = Scenario()
    return replace(sc, memory_arch=MemoryArch.SRAM, op=replace(sc.op, v_dd=0.1))


def scenario_14nm_sram_10mv() -> Scenario:
    sc = Scenario()
    return replace(
        sc,
        tech=apply_node(sc.tech, Node.NODE_14NM),
        memory_arch=MemoryArch.SRAM,
        op=replace(sc.op, v_dd=0.01),
    )


REFERENCE_SCENARIOS = {
    "65nm-ff-1v": baseline_scenario,
    "65nm-sram-1v": scenario_65nm_sram,
    "65nm-sram-100mv": scenario_65nm_sram_100mv,
    "14nm-sram-10mv": scenario_14nm_sram_10mv,
}
