import random

import pytest
from hypothesis import given, settings, strategies as st

from cryoctrl.sim import MemoryBank


def test_serial_write_parallel_read_identity_all_registers():
    # all 9+256 registers, 100 random codes each
    rng = random.Random(1234)
    mem = MemoryBank(n_bias=12, n_rf=10)
    for addr in range(9):
        for _ in range(100):
            code = rng.randrange(1 << 12)
            mem.write_bias(addr, code)
            assert mem.read_bias(addr) == code
    for addr in range(256):
        for _ in range(100):
            code = rng.randrange(1 << 10)
            mem.write_rf(addr, code)
            assert mem.read_rf(addr) == code


def test_serial_write_displaces_old_contents():
    mem = MemoryBank(n_bias=12, n_rf=10)
    mem.write_bias(0, 0xFFF)
    mem.write_bias(0, 0x001)
    assert mem.read_bias(0) == 0x001


def test_write_is_per_register():
    mem = MemoryBank(n_bias=12, n_rf=10)
    mem.write_bias(3, 0x5A5)
    assert mem.read_bias(3) == 0x5A5
    assert all(mem.read_bias(a) == 0 for a in range(9) if a != 3)


@settings(max_examples=300, deadline=None)
@given(
    a1=st.integers(0, 255),
    a2=st.integers(0, 255),
    w1=st.integers(0, 1023),
    w2=st.integers(0, 1023),
)
def test_dual_port_reads_do_not_interfere(a1, a2, w1, w2):
    mem = MemoryBank(n_bias=12, n_rf=10)
    mem.write_rf(a1, w1)
    if a2 != a1:
        mem.write_rf(a2, w2)
    expect1 = mem.read_rf(a1)
    expect2 = mem.read_rf(a2)
    assert mem.read_rf_dual(a1, a2) == (expect1, expect2)
    assert mem.read_rf_dual(a2, a1) == (expect2, expect1)
    # reading changes nothing
    assert mem.read_rf(a1) == expect1
    assert mem.read_rf(a2) == expect2


def test_address_bounds():
    mem = MemoryBank()
    with pytest.raises(IndexError):
        mem.read_bias(9)
    with pytest.raises(IndexError):
        mem.read_rf(256)
    with pytest.raises(IndexError):
        mem.shift_in_bias(-1, 1)
