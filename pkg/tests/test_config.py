import json
from dataclasses import replace

import pytest

from cryoctrl import (
    ConfigError,
    Node,
    Scenario,
    apply_node,
    load_scenario,
    save_scenario,
    scenario_from_dict,
)
from cryoctrl.config import MemoryArch, OperatingPoint, SystemSpec, TechnologyParams


def test_defaults_only_file(tmp_path):
    p = tmp_path / "s.json"
    p.write_text('{"defaults": "paper"}')
    assert load_scenario(p) == Scenario()


def test_negative_vdd_rejected(tmp_path):
    p = tmp_path / "s.json"
    p.write_text('{"op": {"v_dd": -1}}')
    with pytest.raises(ConfigError, match="v_dd must be positive"):
        load_scenario(p)


def test_idempotent_override(tmp_path):
    p = tmp_path / "s.json"
    p.write_text('{"spec": {"n_bias": 12}}')
    assert load_scenario(p) == Scenario()


def test_unknown_key_is_hard_error(tmp_path):
    p = tmp_path / "s.json"
    p.write_text('{"spec": {"n_bais": 12}}')
    with pytest.raises(ConfigError, match="unknown key"):
        load_scenario(p)
    p.write_text('{"memory_architecture": "ff"}')
    with pytest.raises(ConfigError, match="unknown key"):
        load_scenario(p)


def test_parse_error_carries_line(tmp_path):
    p = tmp_path / "s.json"
    p.write_text('{\n  "spec": {,}\n}')
    with pytest.raises(ConfigError, match="line 2"):
        load_scenario(p)


def test_round_trip(tmp_path):
    sc = scenario_from_dict({
        "memory_arch": "sram",
        "node": "14nm",
        "op": {"v_dd": 0.01},
        "spec": {"n_bias": 10},
    })
    p = tmp_path / "round.json"
    save_scenario(sc, p)
    assert load_scenario(p) == sc


def test_round_trip_of_every_reference_file(scenario_dir, tmp_path):
    for f in scenario_dir.glob("*.json"):
        sc = load_scenario(f)
        p = tmp_path / f.name
        save_scenario(sc, p)
        assert load_scenario(p) == sc, f.name


def test_apply_node_identity_and_idempotence():
    tech = TechnologyParams()
    assert apply_node(tech, Node.NODE_65NM) == tech
    assert apply_node(apply_node(tech, Node.NODE_65NM), Node.NODE_65NM) == tech


def test_apply_node_14nm_factors():
    t14 = apply_node(TechnologyParams(), Node.NODE_14NM)
    assert t14.a_mos * t14.logic_area_scale == pytest.approx(0.375 / 24)
    assert t14.rho_c * t14.cap_density_scale == pytest.approx(350e-15)
    assert t14.sram_area_scale == pytest.approx(1 / 7)


def test_apply_node_rejects_scaled_input():
    t14 = apply_node(TechnologyParams(), Node.NODE_14NM)
    with pytest.raises(ConfigError, match="baseline"):
        apply_node(t14, Node.NODE_14NM)


def test_node_shorthand_with_override(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"node": "14nm", "tech": {"digital_cap_scale": 0.5}}))
    sc = load_scenario(p)
    assert sc.tech.logic_area_scale == pytest.approx(1 / 24)
    assert sc.tech.digital_cap_scale == 0.5


def test_spec_invariants():
    with pytest.raises(ConfigError, match="power of two"):
        replace(SystemSpec(), l_pulse=12).validate()
    with pytest.raises(ConfigError, match=r"\[1, 24\]"):
        replace(SystemSpec(), n_bias=25).validate()
    with pytest.raises(ConfigError, match="must be positive"):
        replace(SystemSpec(), dv_bias=0).validate()


def test_operating_point_invariants():
    with pytest.raises(ConfigError, match="sigma_con"):
        replace(OperatingPoint(), sigma_con=0.6).validate()
    with pytest.raises(ConfigError, match="t_el"):
        replace(OperatingPoint(), t_el=0).validate()


def test_hold_cap_below_noise_floor_rejected():
    sc = replace(Scenario(), c_h=10e-15)
    with pytest.raises(ConfigError, match="thermal-noise minimum"):
        sc.validate()


def test_every_requirement_and_process_symbol_has_one_field():
    spec_fields = {f for f in SystemSpec.__dataclass_fields__}
    assert spec_fields == {
        "n_bias_signals", "v_range_bias", "dv_bias", "n_bias",
        "n_rf_signals", "v_range_rf", "n_rf", "dv_rf",
        "f_sample_rf", "l_pulse", "n_pulses",
    }
    tech_fields = set(TechnologyParams.__dataclass_fields__)
    expected = {
        "rho_r", "rho_c", "a_mos", "c_mos", "r_off", "r_on", "r_min", "c_min",
        "v_dd", "c_ff_equiv", "a_ff", "c_sram_bit", "a_sram_cell",
        "logic_area_scale", "sram_area_scale", "cap_density_scale",
        "digital_cap_scale", "r_off_multiplier",
    }
    assert tech_fields == expected


def test_reference_scenario_files_match_builders(scenario_dir):
    from cryoctrl.config import REFERENCE_SCENARIOS

    for name, builder in REFERENCE_SCENARIOS.items():
        loaded = load_scenario(scenario_dir / f"{name}.json")
        assert loaded == builder(), name


def test_memory_arch_values():
    assert MemoryArch("ff") is MemoryArch.FLIP_FLOP
    assert MemoryArch("sram") is MemoryArch.SRAM
    with pytest.raises(ConfigError, match="memory_arch"):
        scenario_from_dict({"memory_arch": "dram"})
