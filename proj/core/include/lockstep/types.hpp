#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lockstep {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i8 = std::int8_t;
using i16 = std::int16_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

/// A32 condition flags, bits 31..28 of the program status word.
struct Flags {
    bool n = false;
    bool z = false;
    bool c = false;
    bool v = false;

    u32 to_cpsr() const {
        return (u32(n) << 31) | (u32(z) << 30) | (u32(c) << 29) | (u32(v) << 28);
    }
    static Flags from_cpsr(u32 cpsr) {
        return Flags{(cpsr >> 31 & 1) != 0, (cpsr >> 30 & 1) != 0,
                     (cpsr >> 29 & 1) != 0, (cpsr >> 28 & 1) != 0};
    }
    bool operator==(const Flags&) const = default;
};

/// Full observable CPU state: 16 general registers (R15 = program counter),
/// NZCV flags, and the cycle counter (one cycle per instruction).
struct ArchState {
    std::array<u32, 16> regs{};
    Flags flags;
    u64 cycle_count = 0;

    u32 pc() const { return regs[15]; }
    void set_pc(u32 value) { regs[15] = value; }

    bool operator==(const ArchState&) const = default;
};

/// Flat little-endian memory image with a fixed base address.
class MemoryImage {
public:
    MemoryImage() = default;
    MemoryImage(u32 base, std::vector<u8> bytes)
        : m_base(base), m_bytes(std::move(bytes)) {}

    static MemoryImage zeroed(u32 base, u32 size) {
        return MemoryImage(base, std::vector<u8>(size, 0));
    }

    u32 base() const { return m_base; }
    u32 size() const { return static_cast<u32>(m_bytes.size()); }
    u32 end() const { return m_base + size(); }

    bool in_range(u32 addr, u32 len) const {
        return addr >= m_base && len <= size() && addr - m_base <= size() - len;
    }

    // pre: in_range(addr, 4) and addr word-aligned
    u32 word_at(u32 addr) const {
        u32 off = addr - m_base;
        return u32(m_bytes[off]) | u32(m_bytes[off + 1]) << 8 |
               u32(m_bytes[off + 2]) << 16 | u32(m_bytes[off + 3]) << 24;
    }
    void set_word(u32 addr, u32 value) {
        u32 off = addr - m_base;
        m_bytes[off] = u8(value);
        m_bytes[off + 1] = u8(value >> 8);
        m_bytes[off + 2] = u8(value >> 16);
        m_bytes[off + 3] = u8(value >> 24);
    }

    u8 byte_at(u32 addr) const { return m_bytes[addr - m_base]; }
    void set_byte(u32 addr, u8 value) { m_bytes[addr - m_base] = value; }

    const std::vector<u8>& bytes() const { return m_bytes; }
    std::vector<u8>& bytes() { return m_bytes; }

    bool operator==(const MemoryImage&) const = default;

private:
    u32 m_base = 0;
    std::vector<u8> m_bytes;
};

} // namespace lockstep
