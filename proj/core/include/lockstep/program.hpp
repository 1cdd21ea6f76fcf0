#pragma once

#include <string>
#include <vector>

#include "lockstep/types.hpp"

namespace lockstep {

/// A loaded guest program: memory image, entry point, and a content digest
/// used as the program identity in reports and file names.
struct Program {
    std::string name;
    MemoryImage image;
    u32 entry = 0;
    std::string digest; // sha256 over base/entry/image bytes

    static Program from_words(std::string name, const std::vector<u32>& words,
                              u32 base = 0, u32 entry = 0);
    static Program from_image(std::string name, MemoryImage image, u32 entry);
};

/// Loads a flat binary image file.
Program load_program_binary(const std::string& path, u32 base, u32 entry);

/// Loads a text listing: one 8-hex-digit word per line, '#' comments.
Program load_program_hex(const std::string& path, u32 base = 0, u32 entry = 0);
Program parse_hex_listing(const std::string& text, std::string name, u32 base = 0,
                          u32 entry = 0);

/// Seeded random program generation. Programs are self-contained: register
/// operands stay in R0..R7, branches are forward-only within the image, the
/// last slot is a self-loop, and memory accesses go through a just-loaded
/// base register into a scratch data region, so a run never leaves the image.
struct RandomProgramOptions {
    u64 seed = 0;
    u32 length = 1000;      // instruction slots, including the final self-loop
    u32 data_words = 64;    // scratch region appended after the code
};

inline constexpr u32 kProgramGeneratorVersion = 1;

Program generate_random_program(const RandomProgramOptions& opt);

} // namespace lockstep
