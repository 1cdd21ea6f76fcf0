#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lockstep/isa/exec.hpp"
#include "lockstep/program.hpp"
#include "lockstep/trace.hpp"

namespace lockstep {

struct StepInfo {
    isa::ExecStatus status = isa::ExecStatus::ok;
    u32 fault_addr = 0;
    TraceEvent event; // valid when status == ok
};

/// One side of a lockstep run: a steppable machine whose architectural state
/// can be read and written from outside. Implemented by the in-process golden
/// interpreter, the candidate model, and the RSP client adapter.
class Target {
public:
    virtual ~Target() = default;

    /// Brings the target to the program's entry state. The golden and RSP
    /// implementations force-write registers, flags, and memory; the
    /// candidate model goes through its own reset path, so reset defects
    /// stay observable.
    virtual void prepare(const Program& program) = 0;

    virtual ArchState read_state() = 0;
    virtual StepInfo step() = 0;

    /// Throws MemoryRangeError (or TargetError over RSP) outside the image.
    virtual std::vector<u8> read_memory(u32 addr, u32 len) = 0;
    virtual void write_memory(u32 addr, std::span<const u8> data) = 0;

    virtual void write_register(u8 index, u32 value) = 0;
    virtual void write_flags(Flags flags) = 0;
};

/// The trusted in-process reference interpreter.
class GoldenTarget final : public Target {
public:
    GoldenTarget() = default;
    explicit GoldenTarget(MemoryImage memory) : m_mem(std::move(memory)) {}

    void prepare(const Program& program) override;
    ArchState read_state() override { return m_state; }
    StepInfo step() override;
    std::vector<u8> read_memory(u32 addr, u32 len) override;
    void write_memory(u32 addr, std::span<const u8> data) override;
    void write_register(u8 index, u32 value) override;
    void write_flags(Flags flags) override;

    const MemoryImage& memory() const { return m_mem; }

private:
    ArchState m_state;
    MemoryImage m_mem;
    u64 m_seq = 0;
};

} // namespace lockstep
