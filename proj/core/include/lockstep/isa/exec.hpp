#pragma once

#include "lockstep/isa/decode.hpp"
#include "lockstep/trace.hpp"

namespace lockstep::isa {

/// How a step ended. Anything except `ok` is a simulation fault: recorded by
/// the diff engine as data, never thrown.
enum class ExecStatus : u8 {
    ok = 0,
    undefined_instruction,
    unaligned_access,
    out_of_range_access,
};

const char* exec_status_name(ExecStatus s);

struct StepResult {
    ExecStatus status = ExecStatus::ok;
    u32 fault_addr = 0;   // faulting word (undefined) or address (memory faults)
    ArchState state;      // next state; on fault, the input state unchanged
    TraceEvent event;     // valid when status == ok
};

/// Cold state: all registers zero, flags clear, cycle count zero.
ArchState reset();

/// A32 condition truth table. Throws InvalidCondition for cond 0xF.
bool evaluate_condition(const Flags& flags, u8 cond);

/// NZCV of a 32-bit subtraction a - b: n = bit 31 of the result, z = result
/// is zero, c = no borrow (a >= b unsigned), v = signed overflow.
Flags alu_flags_sub(u32 a, u32 b);

/// NZCV of a 32-bit addition a + b (carry = unsigned carry-out).
Flags alu_flags_add(u32 a, u32 b);

/// Executes one decoded instruction. Pure: identical inputs produce identical
/// outputs. A failed condition advances pc and the cycle count only.
StepResult execute(const ArchState& state, MemoryImage& mem, const DecodedInstr& instr);

/// Fetch at R15, decode, execute. Fetch faults (unaligned or out-of-range pc,
/// undefined word) are reported with the faulting pc in `fault_addr` context.
StepResult step(const ArchState& state, MemoryImage& mem);

} // namespace lockstep::isa
