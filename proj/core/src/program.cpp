#include "lockstep/program.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "lockstep/digest.hpp"
#include "lockstep/error.hpp"
#include "lockstep/isa/decode.hpp"

namespace lockstep {

namespace {

std::string program_digest(const MemoryImage& image, u32 entry) {
    std::vector<u8> blob;
    blob.reserve(image.size() + 8);
    for (u32 v : {image.base(), entry})
        for (int i = 0; i < 4; ++i)
            blob.push_back(u8(v >> (8 * i)));
    blob.insert(blob.end(), image.bytes().begin(), image.bytes().end());
    return sha256_hex(blob);
}

} // namespace

Program Program::from_image(std::string name, MemoryImage image, u32 entry) {
    Program p;
    p.name = std::move(name);
    p.entry = entry;
    p.digest = program_digest(image, entry);
    p.image = std::move(image);
    return p;
}

Program Program::from_words(std::string name, const std::vector<u32>& words,
                            u32 base, u32 entry) {
    MemoryImage image = MemoryImage::zeroed(base, u32(words.size()) * 4);
    for (u32 i = 0; i < words.size(); ++i)
        image.set_word(base + i * 4, words[i]);
    return from_image(std::move(name), std::move(image), entry);
}

Program load_program_binary(const std::string& path, u32 base, u32 entry) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open program file: " + path);
    std::vector<u8> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
    if (bytes.empty())
        throw ConfigError("empty program image: " + path);
    return Program::from_image(path, MemoryImage(base, std::move(bytes)), entry);
}

Program parse_hex_listing(const std::string& text, std::string name, u32 base,
                          u32 entry) {
    std::vector<u32> words;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        if (tok.starts_with("0x") || tok.starts_with("0X"))
            tok.erase(0, 2);
        if (tok.empty() || tok.size() > 8 ||
            tok.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": expected one hex word per line, got '" + tok + "'");
        words.push_back(u32(std::stoul(tok, nullptr, 16)));
    }
    if (words.empty())
        throw ConfigError(name + ": no instruction words");
    return Program::from_words(std::move(name), words, base, entry);
}

Program load_program_hex(const std::string& path, u32 base, u32 entry) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open program file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_hex_listing(ss.str(), path, base, entry);
}

Program generate_random_program(const RandomProgramOptions& opt) {
    using namespace isa;
    if (opt.length < 2)
        throw ConfigError("random program length must be >= 2");

    std::mt19937_64 rng(opt.seed);
    auto pick = [&](u32 n) { return u32(rng() % n); };

    const u32 n = opt.length;
    const u32 data_base = ((n * 4 + 4095) / 4096) * 4096;
    const u32 data_key = data_base >> 12;
    if (data_key == 0 || data_key > 255)
        throw ConfigError("random program too long for the scratch-region layout");

    // Pass 1: place memory pairs. The second slot of each pair must never be
    // a branch target (the base register is loaded immediately before it).
    enum SlotKind : u8 { single, mem_setup, mem_access, halt };
    std::vector<SlotKind> kind(n, single);
    kind[n - 1] = halt;
    for (u32 i = 0; i + 2 < n; ++i) {
        if (kind[i] == single && pick(8) == 0) {
            kind[i] = mem_setup;
            kind[i + 1] = mem_access;
        }
    }

    auto rand_cond = [&]() -> u8 { return pick(10) < 8 ? cond_al : u8(pick(14)); };

    std::vector<u32> words(n + opt.data_words, 0);
    for (u32 i = 0; i < n; ++i) {
        DecodedInstr d;
        switch (kind[i]) {
        case halt: { // B .
            d.mnemonic = Mnemonic::b;
            d.cond = cond_al;
            d.branch_offset = -8;
            break;
        }
        case mem_setup: { // MOV R7, #data_base
            d.mnemonic = Mnemonic::mov;
            d.cond = cond_al;
            d.rd = 7;
            d.op2 = Operand2{true, 0, u8(data_key), 10};
            break;
        }
        case mem_access: {
            d.mnemonic = pick(2) ? Mnemonic::ldr : Mnemonic::str;
            d.cond = rand_cond();
            d.rd = u8(pick(8));
            d.rn = 7;
            d.offset12 = u16(4 * pick(opt.data_words));
            d.up = true;
            break;
        }
        case single: {
            u32 roll = pick(10);
            if (roll == 0) { // forward branch to a safe slot
                std::vector<u32> targets;
                for (u32 t = i + 1; t < n; ++t)
                    if (kind[t] != mem_access)
                        targets.push_back(t);
                u32 t = targets[pick(u32(targets.size()))];
                d.mnemonic = pick(8) == 0 ? Mnemonic::bl : Mnemonic::b;
                d.cond = rand_cond();
                d.branch_offset = i32(t - i) * 4 - 8;
            } else {
                static const Mnemonic menu[] = {
                    Mnemonic::mov, Mnemonic::mvn, Mnemonic::add, Mnemonic::sub,
                    Mnemonic::rsb, Mnemonic::and_, Mnemonic::orr, Mnemonic::eor,
                    Mnemonic::cmp, Mnemonic::cmn, Mnemonic::tst, Mnemonic::teq};
                d.mnemonic = menu[pick(12)];
                d.cond = rand_cond();
                d.sets_flags = is_compare(d.mnemonic) || pick(3) == 0;
                d.rd = is_compare(d.mnemonic) ? 0 : u8(pick(8));
                d.rn = (d.mnemonic == Mnemonic::mov || d.mnemonic == Mnemonic::mvn)
                           ? 0
                           : u8(pick(8));
                if (pick(2))
                    d.op2 = Operand2{true, 0, u8(pick(256)), u8(pick(16))};
                else
                    d.op2 = Operand2{false, u8(pick(8)), 0, 0};
            }
            break;
        }
        }
        words[i] = encode(d);
    }

    // Scratch region sits at data_base; pad the image up to it.
    u32 image_words = data_base / 4 + opt.data_words;
    std::vector<u32> image(image_words, 0);
    for (u32 i = 0; i < n; ++i)
        image[i] = words[i];

    std::ostringstream name;
    name << "random-g" << kProgramGeneratorVersion << "-s" << opt.seed << "-n" << n;
    return Program::from_words(name.str(), image, 0, 0);
}

} // namespace lockstep
