#pragma once

#include <optional>
#include <string>

#include "lockstep/isa/instr.hpp"

namespace lockstep::isa {

/// Decodes one instruction word. Returns nullopt when the word is outside
/// the supported subset (the undefined-instruction case).
std::optional<DecodedInstr> decode(u32 word);

/// Re-encodes a decoded instruction from its fields. On the supported subset,
/// encode(decode(w)) == w.
u32 encode(const DecodedInstr& instr);

/// Disassembly text. When pc is supplied, branch targets are printed as
/// absolute addresses; otherwise as relative offsets.
std::string disassemble(const DecodedInstr& instr, std::optional<u32> pc = std::nullopt);

const char* register_name(u8 index); // R0..R12, SP, LR, PC

} // namespace lockstep::isa
