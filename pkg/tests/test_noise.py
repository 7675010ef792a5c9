import pytest
from hypothesis import given, strategies as st

from cryoctrl import (
    DacArchitecture,
    johnson_rms,
    ktc_rms,
    max_unit_res,
    min_hold_cap,
    min_unit_cap,
)
from cryoctrl.noise import K_B, BoundKind

# Frozen oracle values: each is sqrt(kT/C), sqrt(4kTRB), or the algebraic
# inverse thereof, evaluated independently with k_B = 1.380649e-23 J/K.


def test_ktc_examples():
    assert ktc_rms(2.456e-12, 0.2) == pytest.approx(1.0603334e-6, rel=1e-6)
    # pooled hold capacitance at the minimum bound gives back the budget
    assert ktc_rms(38.35136e-15 * 8, 0.2) == pytest.approx(3.0e-6, rel=1e-6)
    assert ktc_rms(1e6, 0.2) == pytest.approx(0.0, abs=1e-12)


def test_ktc_domain_errors():
    with pytest.raises(ValueError):
        ktc_rms(0.0, 0.2)
    with pytest.raises(ValueError):
        ktc_rms(1e-12, -1.0)


def test_johnson_examples():
    assert johnson_rms(81.4834183e3, 0.2, 10e6) == pytest.approx(3.0e-6, rel=1e-6)
    assert johnson_rms(9.6572940e3, 0.2, 600e6) == pytest.approx(8.0e-6, rel=1e-6)
    with pytest.raises(ValueError):
        johnson_rms(0.0, 0.2, 10e6)


def test_min_unit_cap_examples():
    assert min_unit_cap(12, 3e-6, 0.2).value == pytest.approx(4.7939201e-15, rel=1e-6)
    assert min_unit_cap(10, 8e-6, 0.2).value == pytest.approx(1.3482900e-15, rel=1e-6)
    # temperature enters linearly: x9 from 0.2 K to 1.8 K
    assert min_unit_cap(12, 3e-6, 1.8).value == pytest.approx(4.3145281e-14, rel=1e-6)
    b = min_unit_cap(12, 3e-6, 0.2)
    assert b.kind is BoundKind.MIN_CAPACITANCE
    assert "3e-06" in b.binding_spec


def test_min_unit_cap_odd_resolution_uses_real_power():
    v = min_unit_cap(11, 3e-6, 0.2).value
    assert v == pytest.approx(K_B * 0.2 / (2 ** 5.5 * 9e-12), rel=1e-12)


def test_max_unit_res_examples():
    ladder = max_unit_res(DacArchitecture.LADDER, 12, 3e-6, 0.2, 10e6)
    assert ladder.value == pytest.approx(81483.42, rel=1e-4)
    kelvin16 = max_unit_res(DacArchitecture.KELVIN, 16, 3e-6, 0.2, 10e6)
    assert kelvin16.value == pytest.approx(4.97335, rel=1e-4)
    kelvin10 = max_unit_res(DacArchitecture.KELVIN, 10, 8e-6, 0.2, 600e6)
    assert kelvin10.value == pytest.approx(37.7238, rel=1e-4)
    rf_ladder = max_unit_res(DacArchitecture.LADDER, 10, 8e-6, 0.2, 600e6)
    assert rf_ladder.value == pytest.approx(9657.29, rel=1e-4)


def test_max_unit_res_rejects_cap():
    with pytest.raises(ValueError, match="no resistive"):
        max_unit_res(DacArchitecture.CAP, 12, 3e-6, 0.2, 10e6)


def test_min_hold_cap_examples():
    assert min_hold_cap(8, 3e-6, 0.2).value == pytest.approx(3.8351361e-14, rel=1e-6)
    # linear in 1/N
    assert min_hold_cap(1, 3e-6, 0.2).value == pytest.approx(3.0681089e-13, rel=1e-6)
    assert min_hold_cap(8, 3e-6, 1.8).value == pytest.approx(3.4516225e-13, rel=1e-6)


positive = st.floats(min_value=1e-9, max_value=1e9, allow_nan=False)
bits = st.integers(min_value=2, max_value=24)


@given(n=bits, dv=st.floats(1e-9, 1e-3), t=st.floats(1e-3, 300.0))
def test_min_unit_cap_monotonicity(n, dv, t):
    base = min_unit_cap(n, dv, t).value
    assert min_unit_cap(n, dv, t * 2).value > base          # hotter -> bigger cap
    assert min_unit_cap(n, dv * 2, t).value < base          # looser budget -> smaller
    assert min_unit_cap(n + 1 if n < 24 else n, dv, t).value <= base


@given(n=bits, dv=st.floats(1e-9, 1e-3), t=st.floats(1e-3, 300.0), b=st.floats(1e3, 1e10))
def test_max_unit_res_monotonicity(n, dv, t, b):
    base = max_unit_res(DacArchitecture.KELVIN, n, dv, t, b).value
    assert max_unit_res(DacArchitecture.KELVIN, n, dv, t * 2, b).value < base
    assert max_unit_res(DacArchitecture.KELVIN, n, dv, t, b * 2).value < base
    if n < 24:
        assert max_unit_res(DacArchitecture.KELVIN, n + 1, dv, t, b).value < base


@given(dv=st.floats(1e-9, 1e-3), t=st.floats(1e-3, 300.0), b=st.floats(1e3, 1e10))
def test_ladder_bound_consistency(dv, t, b):
    r = max_unit_res(DacArchitecture.LADDER, 12, dv, t, b).value
    assert johnson_rms(r, t, b) == pytest.approx(dv, rel=1e-12)


@given(n=st.integers(1, 64), dv=st.floats(1e-9, 1e-3), t=st.floats(1e-3, 300.0))
def test_hold_cap_bound_consistency(n, dv, t):
    c = min_hold_cap(n, dv, t).value
    assert ktc_rms(c * n, t) == pytest.approx(dv, rel=1e-12)
