#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lockstep/types.hpp"

namespace lockstep {

/// One executed instruction as observed from outside: which registers were
/// written, which memory words were stored, the resulting flags, and the
/// cycles consumed. Sequence numbers in a trace are consecutive from 0.
struct TraceEvent {
    u64 seq = 0;
    u32 pc = 0;
    u32 instr_word = 0;
    std::string disasm;
    std::map<u8, u32> regs_written;                // R0..R14 destinations, post values
    std::vector<std::pair<u32, u32>> mem_writes;   // (address, word stored)
    Flags flags_after;
    u32 cycles = 1;

    bool operator==(const TraceEvent&) const = default;
};

} // namespace lockstep
