#include "lockstep/isa/decode.hpp"

#include <cstdio>

namespace lockstep::isa {

namespace {

// Data-processing opcode field (bits 24:21). ADC/SBC/RSC/BIC are outside
// the subset and decode as undefined.
enum DpOpcode : u32 {
    dp_and = 0x0, dp_eor = 0x1, dp_sub = 0x2, dp_rsb = 0x3,
    dp_add = 0x4, dp_tst = 0x8, dp_teq = 0x9, dp_cmp = 0xA,
    dp_cmn = 0xB, dp_orr = 0xC, dp_mov = 0xD, dp_mvn = 0xF,
};

std::optional<Mnemonic> dp_mnemonic(u32 opcode) {
    switch (opcode) {
    case dp_and: return Mnemonic::and_;
    case dp_eor: return Mnemonic::eor;
    case dp_sub: return Mnemonic::sub;
    case dp_rsb: return Mnemonic::rsb;
    case dp_add: return Mnemonic::add;
    case dp_tst: return Mnemonic::tst;
    case dp_teq: return Mnemonic::teq;
    case dp_cmp: return Mnemonic::cmp;
    case dp_cmn: return Mnemonic::cmn;
    case dp_orr: return Mnemonic::orr;
    case dp_mov: return Mnemonic::mov;
    case dp_mvn: return Mnemonic::mvn;
    default: return std::nullopt;
    }
}

u32 dp_opcode(Mnemonic m) {
    switch (m) {
    case Mnemonic::and_: return dp_and;
    case Mnemonic::eor: return dp_eor;
    case Mnemonic::sub: return dp_sub;
    case Mnemonic::rsb: return dp_rsb;
    case Mnemonic::add: return dp_add;
    case Mnemonic::tst: return dp_tst;
    case Mnemonic::teq: return dp_teq;
    case Mnemonic::cmp: return dp_cmp;
    case Mnemonic::cmn: return dp_cmn;
    case Mnemonic::orr: return dp_orr;
    case Mnemonic::mov: return dp_mov;
    case Mnemonic::mvn: return dp_mvn;
    default: return 0;
    }
}

} // namespace

const char* mnemonic_name(Mnemonic m) {
    switch (m) {
    case Mnemonic::mov: return "MOV";
    case Mnemonic::mvn: return "MVN";
    case Mnemonic::add: return "ADD";
    case Mnemonic::sub: return "SUB";
    case Mnemonic::rsb: return "RSB";
    case Mnemonic::and_: return "AND";
    case Mnemonic::orr: return "ORR";
    case Mnemonic::eor: return "EOR";
    case Mnemonic::cmp: return "CMP";
    case Mnemonic::cmn: return "CMN";
    case Mnemonic::tst: return "TST";
    case Mnemonic::teq: return "TEQ";
    case Mnemonic::b: return "B";
    case Mnemonic::bl: return "BL";
    case Mnemonic::bx: return "BX";
    case Mnemonic::ldr: return "LDR";
    case Mnemonic::str: return "STR";
    }
    return "?";
}

bool is_compare(Mnemonic m) {
    return m == Mnemonic::cmp || m == Mnemonic::cmn || m == Mnemonic::tst ||
           m == Mnemonic::teq;
}

bool is_sub_arithmetic(Mnemonic m) {
    return m == Mnemonic::sub || m == Mnemonic::rsb || m == Mnemonic::cmp;
}

bool is_add_arithmetic(Mnemonic m) {
    return m == Mnemonic::add || m == Mnemonic::cmn;
}

bool is_logical(Mnemonic m) {
    switch (m) {
    case Mnemonic::mov: case Mnemonic::mvn: case Mnemonic::and_:
    case Mnemonic::orr: case Mnemonic::eor: case Mnemonic::tst:
    case Mnemonic::teq:
        return true;
    default:
        return false;
    }
}

bool is_branch(Mnemonic m) {
    return m == Mnemonic::b || m == Mnemonic::bl || m == Mnemonic::bx;
}

bool is_memory(Mnemonic m) {
    return m == Mnemonic::ldr || m == Mnemonic::str;
}

bool is_data_processing(Mnemonic m) {
    return !is_branch(m) && !is_memory(m);
}

const char* cond_name(u8 cond) {
    static const char* names[] = {"EQ", "NE", "CS", "CC", "MI", "PL", "VS", "VC",
                                  "HI", "LS", "GE", "LT", "GT", "LE", "", ""};
    return names[cond & 0xF];
}

const char* register_name(u8 index) {
    static const char* names[] = {"R0", "R1", "R2",  "R3",  "R4",  "R5", "R6", "R7",
                                  "R8", "R9", "R10", "R11", "R12", "SP", "LR", "PC"};
    return names[index & 0xF];
}

std::optional<DecodedInstr> decode(u32 word) {
    const u8 cond = u8(word >> 28);
    if (cond == 0xF)
        return std::nullopt; // unconditional encoding space excluded

    DecodedInstr d;
    d.cond = cond;
    d.raw_word = word;

    // BX sits inside the miscellaneous hole of the data-processing space;
    // it must be matched before the opcode-field dispatch.
    if ((word & 0x0FFFFFF0u) == 0x012FFF10u) {
        d.mnemonic = Mnemonic::bx;
        d.rn = u8(word & 0xF);
        return d;
    }

    const u32 op1 = (word >> 25) & 0x7;

    if (op1 == 0b101) { // B / BL
        d.mnemonic = (word & (1u << 24)) ? Mnemonic::bl : Mnemonic::b;
        u32 imm24 = word & 0x00FFFFFFu;
        i32 off = i32(imm24 << 8) >> 6; // sign-extend and scale by 4
        d.branch_offset = off;
        return d;
    }

    if (op1 == 0b000 || op1 == 0b001) { // data-processing
        const bool imm_form = op1 == 0b001;
        const u32 opcode = (word >> 21) & 0xF;
        auto m = dp_mnemonic(opcode);
        if (!m)
            return std::nullopt;
        d.mnemonic = *m;
        d.sets_flags = (word & (1u << 20)) != 0;
        d.rn = u8((word >> 16) & 0xF);
        d.rd = u8((word >> 12) & 0xF);
        if (imm_form) {
            d.op2.is_imm = true;
            d.op2.rot = u8((word >> 8) & 0xF);
            d.op2.imm8 = u8(word & 0xFF);
        } else {
            if ((word >> 4 & 0xFF) != 0)
                return std::nullopt; // shifted-register forms excluded
            d.op2.reg = u8(word & 0xF);
        }
        if (is_compare(d.mnemonic)) {
            if (!d.sets_flags || d.rd != 0)
                return std::nullopt; // S=0 compares live in the MSR/MRS space
        }
        if ((d.mnemonic == Mnemonic::mov || d.mnemonic == Mnemonic::mvn) && d.rn != 0)
            return std::nullopt;
        return d;
    }

    if (op1 == 0b010) { // LDR/STR word, immediate offset
        const bool p = word & (1u << 24);
        const bool b = word & (1u << 22);
        const bool w = word & (1u << 21);
        if (!p || b || w)
            return std::nullopt; // byte/post-index/writeback forms excluded
        d.mnemonic = (word & (1u << 20)) ? Mnemonic::ldr : Mnemonic::str;
        d.up = (word & (1u << 23)) != 0;
        d.rn = u8((word >> 16) & 0xF);
        d.rd = u8((word >> 12) & 0xF);
        d.offset12 = u16(word & 0xFFF);
        return d;
    }

    return std::nullopt;
}

u32 encode(const DecodedInstr& d) {
    u32 word = u32(d.cond) << 28;
    switch (d.mnemonic) {
    case Mnemonic::bx:
        return word | 0x012FFF10u | d.rn;
    case Mnemonic::b:
    case Mnemonic::bl: {
        u32 imm24 = u32(d.branch_offset >> 2) & 0x00FFFFFFu;
        word |= 0b101u << 25;
        if (d.mnemonic == Mnemonic::bl)
            word |= 1u << 24;
        return word | imm24;
    }
    case Mnemonic::ldr:
    case Mnemonic::str:
        word |= 0b010u << 25;
        word |= 1u << 24; // P
        if (d.up)
            word |= 1u << 23;
        if (d.mnemonic == Mnemonic::ldr)
            word |= 1u << 20;
        return word | u32(d.rn) << 16 | u32(d.rd) << 12 | d.offset12;
    default: {
        word |= dp_opcode(d.mnemonic) << 21;
        if (d.sets_flags)
            word |= 1u << 20;
        word |= u32(d.rn) << 16 | u32(d.rd) << 12;
        if (d.op2.is_imm) {
            word |= 1u << 25;
            word |= u32(d.op2.rot) << 8 | d.op2.imm8;
        } else {
            word |= d.op2.reg;
        }
        return word;
    }
    }
}

std::string disassemble(const DecodedInstr& d, std::optional<u32> pc) {
    char buf[64];
    std::string head = mnemonic_name(d.mnemonic);
    head += cond_name(d.cond);
    if (d.sets_flags && !is_compare(d.mnemonic))
        head += "S";

    auto imm_text = [](u32 v) {
        char b[16];
        if (v < 256)
            std::snprintf(b, sizeof b, "#%u", v);
        else
            std::snprintf(b, sizeof b, "#0x%X", v);
        return std::string(b);
    };
    auto op2_text = [&] {
        return d.op2.is_imm ? imm_text(d.op2.imm_value())
                            : std::string(register_name(d.op2.reg));
    };

    switch (d.mnemonic) {
    case Mnemonic::mov:
    case Mnemonic::mvn:
        return head + " " + register_name(d.rd) + ", " + op2_text();
    case Mnemonic::cmp:
    case Mnemonic::cmn:
    case Mnemonic::tst:
    case Mnemonic::teq:
        return head + " " + register_name(d.rn) + ", " + op2_text();
    case Mnemonic::b:
    case Mnemonic::bl:
        if (pc) {
            std::snprintf(buf, sizeof buf, " 0x%X", *pc + 8 + u32(d.branch_offset));
            return head + buf;
        }
        std::snprintf(buf, sizeof buf, " .%+d", d.branch_offset + 8);
        return head + buf;
    case Mnemonic::bx:
        return head + " " + register_name(d.rn);
    case Mnemonic::ldr:
    case Mnemonic::str:
        std::snprintf(buf, sizeof buf, " %s, [%s, #%s%u]", register_name(d.rd),
                      register_name(d.rn), d.up ? "" : "-", d.offset12);
        return head + buf;
    default:
        return head + " " + register_name(d.rd) + ", " + register_name(d.rn) +
               ", " + op2_text();
    }
}

} // namespace lockstep::isa
