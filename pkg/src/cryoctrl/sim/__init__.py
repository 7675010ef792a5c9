"""Behavioral simulation of the digital control system."""

from .engine import (
    Simulator,
    StimulusError,
    SimulationConfigError,
    Trace,
    TraceEvent,
    parse_duration_ns,
    parse_stimulus,
    run_simulation,
)
from .memory import MemoryBank
from .protocol import (
    DataInputController,
    DataWord,
    ProtocolError,
    RfCommandReceiver,
    RfCommandWord,
    WordType,
    decode_dataword,
    decode_rf_command,
    encode_dataword,
    encode_rf_command,
)

__all__ = [
    "DataInputController",
    "DataWord",
    "MemoryBank",
    "ProtocolError",
    "RfCommandReceiver",
    "RfCommandWord",
    "Simulator",
    "SimulationConfigError",
    "StimulusError",
    "Trace",
    "TraceEvent",
    "WordType",
    "decode_dataword",
    "decode_rf_command",
    "encode_dataword",
    "encode_rf_command",
    "parse_duration_ns",
    "parse_stimulus",
    "run_simulation",
]
