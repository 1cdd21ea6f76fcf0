#pragma once

#include <span>
#include <string>

#include "lockstep/types.hpp"

namespace lockstep {

/// SHA-256 as a lowercase hex string.
std::string sha256_hex(std::span<const u8> data);
std::string sha256_hex(const std::string& data);

} // namespace lockstep
