"""Thermal-noise formulas and the component sizing bounds they impose.

Two noise mechanisms size the analog components: kT/C noise of switched
capacitors and Johnson-Nyquist noise of resistors within the circuit
bandwidth. Each bound is returned as an exact value; rounding up to process
minimums (``r_min``/``c_min``) is left to the DAC design layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import scipy.constants

from .config import DacArchitecture

K_B = scipy.constants.Boltzmann


class BoundKind(str, Enum):
    MIN_CAPACITANCE = "min_capacitance"
    MAX_RESISTANCE = "max_resistance"


@dataclass(frozen=True)
class SizingBound:
    """A single component bound and the requirement that produced it."""

    kind: BoundKind
    value: float
    binding_spec: str

    def __post_init__(self):
        if self.value <= 0:
            raise ValueError("bound value must be positive")


def _require_positive(**values: float) -> None:
    for name, v in values.items():
        if v <= 0:
            raise ValueError(f"{name} must be positive, got {v!r}")


def ktc_rms(c: float, t: float) -> float:
    """RMS voltage noise sqrt(kT/C) of a capacitance ``c`` [F] at ``t`` [K]."""
    _require_positive(c=c, t=t)
    return math.sqrt(K_B * t / c)


def johnson_rms(r: float, t: float, b: float) -> float:
    """RMS voltage noise sqrt(4kTRB) of ``r`` [ohm] over bandwidth ``b`` [Hz]."""
    _require_positive(r=r, t=t, b=b)
    return math.sqrt(4.0 * K_B * t * r * b)


def min_unit_cap(n: int, dv: float, t: float) -> SizingBound:
    """Minimum DAC unit capacitor so that kT/C output noise stays below ``dv``.

    The output capacitance of the capacitive divider is approximately
    2^(n/2) unit capacitors; odd resolutions use the real-valued power.
    """
    _require_positive(n=n, dv=dv, t=t)
    value = K_B * t / (2.0 ** (n / 2.0) * dv * dv)
    return SizingBound(
        BoundKind.MIN_CAPACITANCE,
        value,
        f"kT/C <= ({dv:g} V)^2 at {t:g} K, n={n}",
    )


def max_unit_res(
    arch: DacArchitecture, n: int, dv: float, t: float, b: float
) -> SizingBound:
    """Maximum DAC unit resistor so that 4kTRB output noise stays below ``dv``.

    The ladder presents its unit resistance at the output; the divider-string
    converter is code dependent and in the worst case presents 2^(n-2) units.
    """
    arch = DacArchitecture(arch)
    _require_positive(n=n, dv=dv, t=t, b=b)
    if arch is DacArchitecture.CAP:
        raise ValueError("capacitive DAC has no resistive noise bound")
    value = dv * dv / (4.0 * K_B * t * b)
    if arch is DacArchitecture.KELVIN:
        value /= 2.0 ** (n - 2)
    return SizingBound(
        BoundKind.MAX_RESISTANCE,
        value,
        f"4kTRB <= ({dv:g} V)^2 at {t:g} K, B={b:g} Hz, n={n}, {arch.value}",
    )


def min_hold_cap(n_channels: int, dv: float, t: float) -> SizingBound:
    """Minimum per-electrode hold capacitor of the sample-and-hold.

    The pooled output capacitance of ``n_channels`` hold capacitors sets the
    kT/C noise seen at the electrodes.
    """
    _require_positive(n_channels=n_channels, dv=dv, t=t)
    value = K_B * t / (n_channels * dv * dv)
    return SizingBound(
        BoundKind.MIN_CAPACITANCE,
        value,
        f"kT/(N*C) <= ({dv:g} V)^2 at {t:g} K, N={n_channels}",
    )
