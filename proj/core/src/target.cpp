#include "lockstep/target.hpp"

#include "lockstep/error.hpp"

namespace lockstep {

void GoldenTarget::prepare(const Program& program) {
    m_state = isa::reset();
    m_mem = program.image;
    m_state.set_pc(program.entry);
    m_seq = 0;
}

StepInfo GoldenTarget::step() {
    isa::StepResult r = isa::step(m_state, m_mem);
    StepInfo info;
    info.status = r.status;
    info.fault_addr = r.fault_addr;
    if (r.status == isa::ExecStatus::ok) {
        m_state = r.state;
        info.event = std::move(r.event);
        info.event.seq = m_seq++;
    }
    return info;
}

std::vector<u8> GoldenTarget::read_memory(u32 addr, u32 len) {
    if (!m_mem.in_range(addr, len))
        throw MemoryRangeError(addr);
    std::vector<u8> out(len);
    for (u32 i = 0; i < len; ++i)
        out[i] = m_mem.byte_at(addr + i);
    return out;
}

void GoldenTarget::write_memory(u32 addr, std::span<const u8> data) {
    if (!m_mem.in_range(addr, u32(data.size())))
        throw MemoryRangeError(addr);
    for (u32 i = 0; i < data.size(); ++i)
        m_mem.set_byte(addr + i, data[i]);
}

void GoldenTarget::write_register(u8 index, u32 value) {
    if (index > 15)
        throw InvalidLocation("register index out of range");
    m_state.regs[index] = value;
}

void GoldenTarget::write_flags(Flags flags) {
    m_state.flags = flags;
}

} // namespace lockstep
