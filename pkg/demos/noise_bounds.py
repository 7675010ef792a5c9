"""Walk through the thermal-noise sizing bounds for the default design point.

Every analog component is sized so that its thermal noise stays inside the
stability budget of the electrode it drives: kT/C noise for switched
capacitors, 4kTRB noise for resistive converters.
"""

from cryoctrl import (
    DacArchitecture,
    baseline_scenario,
    johnson_rms,
    ktc_rms,
    max_unit_res,
    min_hold_cap,
    min_unit_cap,
)

sc = baseline_scenario()
s, op = sc.spec, sc.op

print(f"stage temperature      {op.t_el} K")
print(f"bias budget            {s.dv_bias * 1e6:.1f} uV RMS over {s.n_bias_signals} electrodes")
print(f"pulse budget           {s.dv_rf * 1e6:.1f} uV RMS at B = {op.b_rf / 1e6:.0f} MHz")
print()

c_u = min_unit_cap(s.n_bias, s.dv_bias, op.t_el)
c_h = min_hold_cap(s.n_bias_signals, s.dv_bias, op.t_el)
print(f"bias DAC unit cap     >= {c_u.value * 1e15:.2f} fF   ({c_u.binding_spec})")
print(f"hold capacitor        >= {c_h.value * 1e15:.2f} fF   ({c_h.binding_spec})")

for arch in (DacArchitecture.LADDER, DacArchitecture.KELVIN):
    r = max_unit_res(arch, s.n_bias, s.dv_bias, op.t_el, op.b_bias)
    print(f"bias {arch.value:14s} <= {r.value:10.4g} ohm")

c_u_rf = min_unit_cap(s.n_rf, s.dv_rf, op.t_el)
print(f"pulse DAC unit cap    >= {c_u_rf.value * 1e15:.2f} fF")
for arch in (DacArchitecture.LADDER, DacArchitecture.KELVIN):
    r = max_unit_res(arch, s.n_rf, s.dv_rf, op.t_el, op.b_rf)
    print(f"pulse {arch.value:13s} <= {r.value:10.4g} ohm")

print()
print("sanity: evaluating the noise at the bound recovers the budget")
r_max = max_unit_res(DacArchitecture.LADDER, s.n_bias, s.dv_bias, op.t_el, op.b_bias).value
print(f"  johnson({r_max:.0f} ohm) = {johnson_rms(r_max, op.t_el, op.b_bias) * 1e6:.3f} uV")
print(f"  ktc(8 x {c_h.value * 1e15:.1f} fF) = {ktc_rms(8 * c_h.value, op.t_el) * 1e6:.3f} uV")
print()
print(f"chosen values: hold cap {sc.c_h * 1e15:.0f} fF (margin "
      f"{sc.c_h / c_h.value:.1f}x), unit cap 10 fF (process minimum, margin "
      f"{10e-15 / c_u.value:.1f}x)")
