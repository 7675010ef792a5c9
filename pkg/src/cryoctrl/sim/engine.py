"""Deterministic event-level simulation of the digital control system.

Two clock domains drive the machine: the bias domain (sample-and-hold
refresh and ramp generation) and the RF domain (serial data input and pulse
playback). The event queue is ordered by (time, domain priority, sequence
number); the bias domain has priority at equal times, and the sequence
number makes ordering total, so a given stimulus always produces a
bit-identical trace.

Analog behaviour is idealized: DACs convert straight-binary unipolar codes
with zero settling time, and hold capacitors droop exponentially through
the switch off-resistance between refreshes. Trace events for electrode
voltages are emitted on change only (value-change semantics); pulse DAC
outputs are emitted once per sample.

Stimulus files are line based, times in nanoseconds, ``#`` comments::

    <time_ns> write-bias <reg 0-8> <code>
    <time_ns> write-rf <addr 0-255> <code>
    <time_ns> play <idA> <idB> <idC> <idD>
    <time_ns> ramp-mode <on|off>
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from pathlib import Path

from ..analog import derived_clocks
from ..config import Scenario
from .memory import MemoryBank
from .protocol import (
    DataInputController,
    DataWord,
    ProtocolError,
    RfCommandWord,
    WordType,
    encode_dataword,
    encode_rf_command,
    RfCommandReceiver,
)

PRIORITY_BIAS = 0
PRIORITY_RF = 1


class StimulusError(ValueError):
    """Stimulus file failed to parse; message carries the line number."""


class SimulationConfigError(ValueError):
    """Scenario not representable by the digital control system."""


@dataclass(frozen=True)
class TraceEvent:
    t_ns: float
    signal: str
    value: float


@dataclass
class Trace:
    """Time-ordered signal events plus simulation statistics."""

    events: list[TraceEvent] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    _last: dict = field(default_factory=dict, repr=False)

    def emit(self, t_ns: float, signal: str, value: float, on_change: bool = False):
        if on_change and self._last.get(signal) == value:
            return
        self._last[signal] = value
        self.events.append(TraceEvent(t_ns, signal, value))

    def signals(self) -> set[str]:
        return {e.signal for e in self.events}

    def of(self, signal: str) -> list[TraceEvent]:
        return [e for e in self.events if e.signal == signal]

    def to_csv(self) -> str:
        lines = ["t_ns,signal,value"]
        lines += [f"{e.t_ns!r},{e.signal},{e.value!r}" for e in self.events]
        return "\n".join(lines) + "\n"

    def to_vcd_text(self) -> str:
        """Minimal value-change dump: one '#<t_ns> <signal> <value>' per event."""
        return "\n".join(f"#{e.t_ns!r} {e.signal} {e.value!r}" for e in self.events) + "\n"


# ---------------------------------------------------------------------------
# Stimulus

@dataclass(frozen=True)
class Command:
    t_ns: float
    op: str
    args: tuple
    line: int


def parse_stimulus(source) -> list[Command]:
    """Parse a stimulus file (path, text, or iterable of lines)."""
    if isinstance(source, Path):
        lines = source.read_text().splitlines()
    elif isinstance(source, str):
        p = Path(source)
        text = p.read_text() if ("\n" not in source and p.is_file()) else source
        lines = text.splitlines()
    else:
        lines = [str(l) for l in source]

    commands: list[Command] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()

        def fail(msg):
            raise StimulusError(f"stimulus line {lineno}: {msg}: '{raw.strip()}'")

        try:
            t_ns = float(parts[0])
        except ValueError:
            fail("expected a time in ns")
        if t_ns < 0:
            fail("time must be non-negative")
        op, args = parts[1] if len(parts) > 1 else "", parts[2:]
        if op == "write-bias" or op == "write-rf":
            if len(args) != 2:
                fail(f"{op} takes <addr> <code>")
            try:
                addr, code = int(args[0]), int(args[1], 0)
            except ValueError:
                fail("address and code must be integers")
            commands.append(Command(t_ns, op, (addr, code), lineno))
        elif op == "play":
            if len(args) != 4:
                fail("play takes four sequence ids")
            try:
                ids = tuple(int(a) for a in args)
            except ValueError:
                fail("sequence ids must be integers")
            commands.append(Command(t_ns, op, ids, lineno))
        elif op == "ramp-mode":
            if len(args) != 1 or args[0] not in ("on", "off"):
                fail("ramp-mode takes on|off")
            commands.append(Command(t_ns, op, (args[0] == "on",), lineno))
        else:
            fail(f"unknown command '{op}'")
    commands.sort(key=lambda c: (c.t_ns, c.line))
    return commands


# ---------------------------------------------------------------------------
# Controllers

@dataclass
class HoldCap:
    """One electrode's hold capacitor: value set at refresh, droops after."""

    v: float = 0.0
    t_set_ns: float = 0.0
    code: int | None = None

    def voltage(self, t_ns: float, tau_s: float) -> float:
        dt_s = max(0.0, t_ns - self.t_set_ns) * 1e-9
        return self.v * math.exp(-dt_s / tau_s)


class BiasController:
    """Round-robin refresh, or a stepwise ramp to one electrode.

    In refresh mode the electrode counter walks all electrodes and the DAC
    recharges one hold capacitor per conversion; the counter wraps
    automatically. In ramp mode the electrode counter freezes, the ramp
    counter feeds the DAC, and the target electrode index is read from the
    extra bias register (which never drives an electrode in refresh mode).
    """

    def __init__(self, sim):
        self.sim = sim
        self.ramp_mode = False
        self.electrode_counter = 0
        self.ramp_counter = 0

    def conversion(self, t_ns: float):
        sim = self.sim
        if self.ramp_mode:
            target = sim.memory.read_bias(sim.n_electrodes) % sim.n_electrodes
            code = self.ramp_counter
            self.ramp_counter = (self.ramp_counter + 1) % (1 << sim.n_bias)
        else:
            target = self.electrode_counter
            code = sim.memory.read_bias(target)
            self.electrode_counter = (self.electrode_counter + 1) % sim.n_electrodes
        sim.refresh_electrode(t_ns, target, code)


class RfController:
    """Double-buffered pulse playback.

    A received command word sits in staging flip-flops; when the previously
    latched sets have finished (or the unit is idle) both of its sets move
    to the latch array, freeing staging for the next command immediately.
    Per sample, the two read addresses are built from the active pair of
    sequence ids and the sample counter; the pair advances at the sequence
    boundary without a gap.
    """

    def __init__(self, sim):
        self.sim = sim
        self.staging: RfCommandWord | None = None
        self.latched: list[tuple[int, int]] = []
        self.active: tuple[int, int] | None = None
        self.sample_counter = 0
        self.playing = False

    @property
    def staging_full(self) -> bool:
        return self.staging is not None

    def command_received(self, t_ns: float, cmd: RfCommandWord):
        sim = self.sim
        if self.staging_full:
            sim.trace.emit(t_ns, "rf_cmd_ignored", 1.0)
            sim.backpressure_count += 1
            return
        self.staging = cmd
        if not self.playing and not self.latched:
            self._latch_from_staging(t_ns)
            sim.schedule_sample_edges()

    def _latch_from_staging(self, t_ns: float):
        if self.staging is None:
            return
        self.latched.extend(self.staging.pairs())
        self.staging = None
        self.sim.trace.emit(t_ns, "latch_transfer", 1.0)

    def sample_edge(self, t_ns: float):
        sim = self.sim
        if self.active is None:
            if not self.latched:
                self.playing = False
                return
            self.active = self.latched.pop(0)
            self.sample_counter = 0
            self.playing = True

        id_a, id_b = self.active
        addr_a = id_a * sim.l_pulse + self.sample_counter
        addr_b = id_b * sim.l_pulse + self.sample_counter
        code_a, code_b = sim.memory.read_rf_dual(addr_a, addr_b)
        lsb = sim.v_range_rf / (1 << sim.n_rf)
        sim.trace.emit(t_ns, "rf_a", code_a * lsb)
        sim.trace.emit(t_ns, "rf_b", code_b * lsb)
        sim.rf_samples_emitted += 1

        self.sample_counter += 1
        if self.sample_counter == sim.l_pulse:
            sim.trace.emit(t_ns, "end_sequ", 1.0)
            self.active = None
            # the latch array holds one command word; staging transfers in
            # only once both of its sets have been consumed
            if not self.latched:
                self._latch_from_staging(t_ns)
            if not self.latched:
                self.playing = False


# ---------------------------------------------------------------------------
# Simulator

class Simulator:
    """Event loop over the two clock domains; see the module docstring."""

    def __init__(self, scenario: Scenario):
        scenario.validate()
        s = scenario.spec
        if s.n_pulses * s.l_pulse > 256:
            raise SimulationConfigError(
                "n_pulses * l_pulse exceeds the 256-register address space "
                "of the 8-bit word address"
            )
        self.scenario = scenario
        self.n_electrodes = s.n_bias_signals
        self.n_bias = s.n_bias
        self.n_rf = s.n_rf
        self.l_pulse = s.l_pulse
        self.v_range_bias = s.v_range_bias
        self.v_range_rf = s.v_range_rf

        clocks = derived_clocks(scenario)
        self.f_clk_bias = clocks.f_clk_bias
        self.f_clk_rf = clocks.f_clk_rf
        self.t_bias_ns = 1e9 / self.f_clk_bias
        self.t_rf_ns = 1e9 / self.f_clk_rf
        # Logic is edge triggered: one DAC conversion / output sample every
        # second clock of its domain.
        self.conversion_period_ns = 2.0 * self.t_bias_ns
        self.sample_period_ns = 2.0 * self.t_rf_ns

        self.tau_s = scenario.tech.r_off_effective() * scenario.c_h

        self.memory = MemoryBank(
            n_bias=s.n_bias, n_rf=s.n_rf,
            bias_registers=s.n_bias_signals + 1,
            rf_registers=s.n_pulses * s.l_pulse,
        )
        try:
            # rejects payloads the 5-bit reception counter cannot time
            self.data_input = DataInputController(self.memory, s.n_bias, s.n_rf)
        except ProtocolError as exc:
            raise SimulationConfigError(str(exc)) from exc
        self.rf_receiver = RfCommandReceiver()
        self.bias_ctrl = BiasController(self)
        self.rf_ctrl = RfController(self)
        self.caps = [HoldCap() for _ in range(self.n_electrodes)]

        self.trace = Trace()
        for e in range(self.n_electrodes):
            self.trace._last[f"bias_e{e}"] = 0.0  # electrodes start discharged
        self.max_refresh_deviation = [0.0] * self.n_electrodes
        self.backpressure_count = 0
        self.rf_samples_emitted = 0

        self._queue: list = []
        self._seq = 0
        self._now = 0.0
        self._t_end_ns = 0.0
        self._write_queue: list[DataWord] = []
        self._word_bits: str = ""
        self._word_pos = 0
        self._word_in_flight = False
        self._sample_edges_scheduled = False

    # event queue -----------------------------------------------------------

    def _push(self, t_ns: float, priority: int, fn, arg=None):
        if t_ns > self._t_end_ns:
            return
        self._seq += 1
        heapq.heappush(self._queue, (t_ns, priority, self._seq, fn, arg))

    # electrode handling ----------------------------------------------------

    def refresh_electrode(self, t_ns: float, electrode: int, code: int):
        cap = self.caps[electrode]
        v_pre = cap.voltage(t_ns, self.tau_s)
        v_ideal = code / (1 << self.n_bias) * self.v_range_bias
        if cap.code == code:
            dev = abs(v_ideal - v_pre)
            if dev > self.max_refresh_deviation[electrode]:
                self.max_refresh_deviation[electrode] = dev
        cap.v = v_ideal
        cap.t_set_ns = t_ns
        cap.code = code
        self.trace.emit(t_ns, f"bias_e{electrode}", v_ideal, on_change=True)

    def electrode_voltage(self, electrode: int, t_ns: float) -> float:
        return self.caps[electrode].voltage(t_ns, self.tau_s)

    # bias domain -----------------------------------------------------------

    def _conversion_event(self, t_ns: float, _):
        self.bias_ctrl.conversion(t_ns)
        self._push(t_ns + self.conversion_period_ns, PRIORITY_BIAS,
                   self._conversion_event)

    # rf domain: serial data input -------------------------------------------

    def _start_next_word(self, t_ns: float):
        if self._word_in_flight or not self._write_queue:
            return
        word = self._write_queue.pop(0)
        self._word_bits = encode_dataword(word)
        self._word_pos = 0
        self._word_in_flight = True
        self._push(t_ns, PRIORITY_RF, self._word_clock_event)

    def _word_clock_event(self, t_ns: float, _):
        bit = int(self._word_bits[self._word_pos]) if self._word_pos < len(self._word_bits) else 0
        self._word_pos += 1
        for signal, value in self.data_input.step(bit):
            self.trace.emit(t_ns, signal, value)
        if self.data_input.busy or self._word_pos < len(self._word_bits):
            self._push(t_ns + self.t_rf_ns, PRIORITY_RF, self._word_clock_event)
        else:
            # feedback issued; the next queued word may start on the next clock
            self._word_in_flight = False
            self._start_next_word(t_ns + self.t_rf_ns)

    # rf domain: playback ----------------------------------------------------

    def schedule_sample_edges(self):
        if self._sample_edges_scheduled:
            return
        self._sample_edges_scheduled = True
        t = self._next_sample_grid(self._now)
        self._push(t, PRIORITY_RF, self._sample_event)

    def _next_sample_grid(self, t_ns: float) -> float:
        k = math.ceil(t_ns / self.sample_period_ns - 1e-9)
        return k * self.sample_period_ns

    def _sample_event(self, t_ns: float, _):
        self.rf_ctrl.sample_edge(t_ns)
        if self.rf_ctrl.playing or self.rf_ctrl.latched or self.rf_ctrl.staging_full:
            self._push(t_ns + self.sample_period_ns, PRIORITY_RF, self._sample_event)
        else:
            self._sample_edges_scheduled = False

    # stimulus ---------------------------------------------------------------

    def _command_event(self, t_ns: float, cmd: Command):
        if cmd.op == "write-bias":
            addr, code = cmd.args
            self._enqueue_word(WordType.BIAS, addr, code, self.n_bias, cmd, t_ns)
        elif cmd.op == "write-rf":
            addr, code = cmd.args
            self._enqueue_word(WordType.RF, addr, code, self.n_rf, cmd, t_ns)
        elif cmd.op == "play":
            try:
                word = RfCommandWord(*cmd.args)
            except ProtocolError as exc:
                raise StimulusError(f"stimulus line {cmd.line}: {exc}") from exc
            # 17-bit serial reception precedes staging
            bits = encode_rf_command(word)
            done = self.rf_receiver.feed(bits)
            t_done = t_ns + len(bits) * self.t_rf_ns
            self._push(t_done, PRIORITY_RF,
                       lambda t, _a, w=done: self.rf_ctrl.command_received(t, w))
        elif cmd.op == "ramp-mode":
            self.bias_ctrl.ramp_mode = cmd.args[0]
            self.trace.emit(t_ns, "ramp_mode", 1.0 if cmd.args[0] else 0.0)

    def _enqueue_word(self, kind: WordType, addr: int, code: int,
                      width: int, cmd: Command, t_ns: float):
        try:
            word = DataWord(kind, addr, code, width)
        except ProtocolError as exc:
            raise StimulusError(f"stimulus line {cmd.line}: {exc}") from exc
        self._write_queue.append(word)
        self._start_next_word(t_ns)

    # run ---------------------------------------------------------------------

    def run(self, stimulus=None, t_end_ns: float = 0.0) -> Trace:
        if t_end_ns <= 0:
            raise ValueError("t_end_ns must be positive")
        self._t_end_ns = t_end_ns
        self._now = 0.0

        self.trace.emit(0.0, "clk_bias_hz", self.f_clk_bias)
        self.trace.emit(0.0, "clk_rf_hz", self.f_clk_rf)

        commands = parse_stimulus(stimulus) if stimulus is not None else []
        for cmd in commands:
            if cmd.t_ns <= t_end_ns:
                self._push(cmd.t_ns, PRIORITY_RF, self._command_event, cmd)

        self._push(0.0, PRIORITY_BIAS, self._conversion_event)

        while self._queue:
            t_ns, _prio, _seq, fn, arg = heapq.heappop(self._queue)
            self._now = t_ns
            fn(t_ns, arg)

        self.trace.stats = {
            "t_end_ns": t_end_ns,
            "max_refresh_deviation_v": list(self.max_refresh_deviation),
            "backpressure_count": self.backpressure_count,
            "rf_samples_emitted": self.rf_samples_emitted,
            "final_electrode_voltages_v": [
                self.electrode_voltage(e, t_end_ns) for e in range(self.n_electrodes)
            ],
        }
        return self.trace


def run_simulation(scenario: Scenario, stimulus=None, t_end_ns: float = 0.0) -> Trace:
    """Run one deterministic simulation and return its trace (with stats)."""
    return Simulator(scenario).run(stimulus, t_end_ns)


_TIME_SUFFIXES = {"ns": 1.0, "us": 1e3, "ms": 1e6, "s": 1e9}


def parse_duration_ns(text: str) -> float:
    """Parse '200us', '1.5ms', '5000' (bare = ns) into nanoseconds."""
    text = text.strip()
    for suffix, scale in _TIME_SUFFIXES.items():
        if text.endswith(suffix):
            return float(text[: -len(suffix)]) * scale
    return float(text)
