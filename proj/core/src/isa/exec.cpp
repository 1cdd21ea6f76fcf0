#include "lockstep/isa/exec.hpp"

#include "lockstep/error.hpp"

namespace lockstep::isa {

const char* exec_status_name(ExecStatus s) {
    switch (s) {
    case ExecStatus::ok: return "ok";
    case ExecStatus::undefined_instruction: return "undefined-instruction";
    case ExecStatus::unaligned_access: return "unaligned-access";
    case ExecStatus::out_of_range_access: return "out-of-range-access";
    }
    return "?";
}

ArchState reset() {
    return ArchState{};
}

bool evaluate_condition(const Flags& f, u8 cond) {
    switch (cond) {
    case cond_eq: return f.z;
    case cond_ne: return !f.z;
    case cond_cs: return f.c;
    case cond_cc: return !f.c;
    case cond_mi: return f.n;
    case cond_pl: return !f.n;
    case cond_vs: return f.v;
    case cond_vc: return !f.v;
    case cond_hi: return f.c && !f.z;
    case cond_ls: return !f.c || f.z;
    case cond_ge: return f.n == f.v;
    case cond_lt: return f.n != f.v;
    case cond_gt: return !f.z && f.n == f.v;
    case cond_le: return f.z || f.n != f.v;
    case cond_al: return true;
    default:
        throw InvalidCondition(cond);
    }
}

Flags alu_flags_sub(u32 a, u32 b) {
    u32 r = a - b;
    Flags f;
    f.n = (r >> 31) != 0;
    f.z = r == 0;
    f.c = a >= b;
    f.v = (((a ^ b) & (a ^ r)) >> 31) != 0;
    return f;
}

Flags alu_flags_add(u32 a, u32 b) {
    u32 r = a + b;
    Flags f;
    f.n = (r >> 31) != 0;
    f.z = r == 0;
    f.c = r < a;
    f.v = ((~(a ^ b) & (a ^ r)) >> 31) != 0;
    return f;
}

namespace {

StepResult fault(const ArchState& state, ExecStatus status, u32 addr) {
    StepResult res;
    res.status = status;
    res.fault_addr = addr;
    res.state = state;
    return res;
}

} // namespace

StepResult execute(const ArchState& state, MemoryImage& mem, const DecodedInstr& d) {
    StepResult res;
    res.state = state;
    ArchState& next = res.state;
    const u32 pc = state.pc();

    TraceEvent& ev = res.event;
    ev.pc = pc;
    ev.instr_word = d.raw_word;
    ev.disasm = disassemble(d, pc);
    ev.cycles = 1;

    // R15 reads as the current instruction address + 8 during operand
    // evaluation (A32 pipeline convention).
    auto reg_read = [&](u8 r) { return r == 15 ? pc + 8 : state.regs[r]; };

    if (!evaluate_condition(state.flags, d.cond)) {
        next.set_pc(pc + 4);
        next.cycle_count += 1;
        ev.flags_after = next.flags;
        return res;
    }

    bool branched = false;
    auto reg_write = [&](u8 r, u32 value) {
        if (r == 15) {
            next.set_pc(value);
            branched = true;
        } else {
            next.regs[r] = value;
            ev.regs_written[r] = value;
        }
    };

    switch (d.mnemonic) {
    case Mnemonic::b:
    case Mnemonic::bl:
        if (d.mnemonic == Mnemonic::bl)
            reg_write(14, pc + 4);
        next.set_pc(pc + 8 + u32(d.branch_offset));
        branched = true;
        break;
    case Mnemonic::bx:
        next.set_pc(reg_read(d.rn));
        branched = true;
        break;
    case Mnemonic::ldr:
    case Mnemonic::str: {
        u32 base = reg_read(d.rn);
        u32 ea = d.up ? base + d.offset12 : base - d.offset12;
        if (ea % 4 != 0)
            return fault(state, ExecStatus::unaligned_access, ea);
        if (!mem.in_range(ea, 4))
            return fault(state, ExecStatus::out_of_range_access, ea);
        if (d.mnemonic == Mnemonic::ldr) {
            reg_write(d.rd, mem.word_at(ea));
        } else {
            u32 value = reg_read(d.rd);
            mem.set_word(ea, value);
            ev.mem_writes.emplace_back(ea, value);
        }
        break;
    }
    default: { // data-processing
        u32 op2;
        bool shifter_carry = state.flags.c;
        if (d.op2.is_imm) {
            op2 = d.op2.imm_value();
            if (d.op2.rot != 0)
                shifter_carry = (op2 >> 31) != 0;
        } else {
            op2 = reg_read(d.op2.reg);
        }
        u32 rn_val = reg_read(d.rn);

        u32 result = 0;
        Flags nf = state.flags;
        switch (d.mnemonic) {
        case Mnemonic::mov: result = op2; break;
        case Mnemonic::mvn: result = ~op2; break;
        case Mnemonic::and_:
        case Mnemonic::tst: result = rn_val & op2; break;
        case Mnemonic::eor:
        case Mnemonic::teq: result = rn_val ^ op2; break;
        case Mnemonic::orr: result = rn_val | op2; break;
        case Mnemonic::add:
        case Mnemonic::cmn:
            result = rn_val + op2;
            nf = alu_flags_add(rn_val, op2);
            break;
        case Mnemonic::sub:
        case Mnemonic::cmp:
            result = rn_val - op2;
            nf = alu_flags_sub(rn_val, op2);
            break;
        case Mnemonic::rsb:
            result = op2 - rn_val;
            nf = alu_flags_sub(op2, rn_val);
            break;
        default: break;
        }
        if (is_logical(d.mnemonic)) {
            nf.n = (result >> 31) != 0;
            nf.z = result == 0;
            nf.c = shifter_carry;
            // v unchanged by logical operations
        }
        if (d.sets_flags)
            next.flags = nf;
        if (!is_compare(d.mnemonic))
            reg_write(d.rd, result);
        break;
    }
    }

    if (!branched)
        next.set_pc(pc + 4);
    next.cycle_count += 1;
    ev.flags_after = next.flags;
    return res;
}

StepResult step(const ArchState& state, MemoryImage& mem) {
    const u32 pc = state.pc();
    if (pc % 4 != 0)
        return fault(state, ExecStatus::unaligned_access, pc);
    if (!mem.in_range(pc, 4))
        return fault(state, ExecStatus::out_of_range_access, pc);
    u32 word = mem.word_at(pc);
    auto d = decode(word);
    if (!d)
        return fault(state, ExecStatus::undefined_instruction, word);
    return execute(state, mem, *d);
}

} // namespace lockstep::isa
