"""Evaluate the four bundled technology/architecture design points.

From the conservative 65 nm flip-flop baseline to a 14 nm SRAM variant at a
10 mV digital supply, area shrinks by two orders of magnitude and power by
almost three; at the low-supply end the analog bias generation (set by
leakage, range, and stability, not by the supply) is all that remains.
"""

from cryoctrl import REFERENCE_SCENARIOS, assemble

UNITS = ("bias_gen", "rf_gen", "memory", "managing")

reports = {name: assemble(build()) for name, build in REFERENCE_SCENARIOS.items()}

print(f"{'':16}" + "".join(f"{name:>18}" for name in reports))
print("area / um^2")
for unit in UNITS:
    row = [getattr(reports[name], unit).area_um2 for name in reports]
    print(f"  {unit:<14}" + "".join(f"{v:>18.3g}" for v in row))
print(f"  {'total':<14}" + "".join(f"{r.total_area_um2:>18.3g}" for r in reports.values()))

print("power / W")
for unit in UNITS:
    row = [getattr(reports[name], unit).power_w for name in reports]
    print(f"  {unit:<14}" + "".join(f"{v:>18.3g}" for v in row))
print(f"  {'total':<14}" + "".join(f"{r.total_power_w:>18.3g}" for r in reports.values()))

base = reports["65nm-ff-1v"]
digital = base.memory.power_w + base.managing.power_w
print(f"\nat the baseline, digital circuits draw "
      f"{100 * digital / base.total_power_w:.1f} % of the total power")
end = reports["14nm-sram-10mv"]
print(f"at 14 nm / 10 mV the bias generation dominates: "
      f"{100 * end.bias_gen.power_w / end.total_power_w:.1f} % of "
      f"{end.total_power_w * 1e9:.0f} nW")
