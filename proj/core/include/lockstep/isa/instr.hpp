#pragma once

#include <string>

#include "lockstep/types.hpp"

namespace lockstep::isa {

// Supported A32 subset: data-processing (immediate and plain register forms),
// B/BL/BX, and LDR/STR word with immediate offset, all conditional.
enum class Mnemonic : u8 {
    mov, mvn,
    add, sub, rsb,
    and_, orr, eor,
    cmp, cmn, tst, teq,
    b, bl, bx,
    ldr, str,
};

const char* mnemonic_name(Mnemonic m);
bool is_compare(Mnemonic m);            // cmp, cmn, tst, teq
bool is_sub_arithmetic(Mnemonic m);     // sub, rsb, cmp (borrow-style carry)
bool is_add_arithmetic(Mnemonic m);     // add, cmn
bool is_logical(Mnemonic m);            // mov, mvn, and, orr, eor, tst, teq
bool is_branch(Mnemonic m);             // b, bl, bx
bool is_memory(Mnemonic m);             // ldr, str
bool is_data_processing(Mnemonic m);

// A32 condition codes 0x0..0xE. 0xF is not part of the subset.
enum Cond : u8 {
    cond_eq = 0x0, cond_ne = 0x1, cond_cs = 0x2, cond_cc = 0x3,
    cond_mi = 0x4, cond_pl = 0x5, cond_vs = 0x6, cond_vc = 0x7,
    cond_hi = 0x8, cond_ls = 0x9, cond_ge = 0xA, cond_lt = 0xB,
    cond_gt = 0xC, cond_le = 0xD, cond_al = 0xE,
};

const char* cond_name(u8 cond); // "" for AL

/// Second operand of a data-processing instruction: either a plain register
/// or an 8-bit immediate rotated right by 2*rot.
struct Operand2 {
    bool is_imm = false;
    u8 reg = 0;   // valid when !is_imm
    u8 imm8 = 0;  // valid when is_imm
    u8 rot = 0;   // rotate amount field (rotation = 2*rot)

    u32 imm_value() const {
        u32 amount = u32(rot) * 2;
        u32 v = imm8;
        return amount == 0 ? v : (v >> amount) | (v << (32 - amount));
    }
    bool operator==(const Operand2&) const = default;
};

struct DecodedInstr {
    Mnemonic mnemonic = Mnemonic::mov;
    u8 cond = cond_al;
    bool sets_flags = false;
    u8 rd = 0;          // destination (data-processing, ldr/str data register)
    u8 rn = 0;          // first operand / base register; rm for bx
    Operand2 op2;       // data-processing second operand
    u16 offset12 = 0;   // ldr/str immediate offset
    bool up = true;     // ldr/str offset sign (U bit)
    i32 branch_offset = 0; // b/bl byte offset relative to pc+8
    u32 raw_word = 0;

    bool operator==(const DecodedInstr&) const = default;
};

} // namespace lockstep::isa
