#pragma once

#include <stdexcept>
#include <string>

#include "lockstep/types.hpp"

namespace lockstep {

/// Base class for all harness errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration or input-document problems (bad paths, bad schema, bad values).
struct ConfigError : Error {
    using Error::Error;
};

/// Condition code 0xF: the subset excludes the unconditional-encoding space.
struct InvalidCondition : Error {
    explicit InvalidCondition(unsigned cond)
        : Error("invalid condition code 0x" + std::to_string(cond)) {}
};

/// Knob name not present in the catalog.
struct UnknownKnob : Error {
    explicit UnknownKnob(const std::string& name)
        : Error("unknown knob: " + name) {}
};

/// Score weight vector rejected (negative entry or sum != 1).
struct InvalidWeights : Error {
    using Error::Error;
};

/// Fault location outside the addressable state.
struct InvalidLocation : Error {
    using Error::Error;
};

/// Transport- or framing-level RSP failure (timeout, closed connection,
/// malformed frame, retransmission budget exhausted).
struct ProtocolError : Error {
    using Error::Error;
};

struct ProtocolTimeout : ProtocolError {
    ProtocolTimeout() : ProtocolError("protocol timeout") {}
};

/// 'Exx' reply from the remote target.
struct TargetError : ProtocolError {
    explicit TargetError(unsigned code_)
        : ProtocolError("target error E" + std::to_string(code_)), code(code_) {}
    unsigned code;
};

/// Memory access outside a target's mapped range.
struct MemoryRangeError : Error {
    explicit MemoryRangeError(u32 addr)
        : Error("memory access out of range at 0x" + std::to_string(addr)), addr(addr) {}
    u32 addr;
};

/// Reference and candidate disagreed before the first step.
struct SetupMismatch : Error {
    using Error::Error;
};

/// External synthesizer misbehaved (timeout, nonzero exit, unparseable output).
struct SynthesizerFailure : Error {
    using Error::Error;
};

} // namespace lockstep
