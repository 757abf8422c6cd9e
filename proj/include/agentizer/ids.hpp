#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace agentizer {

// 64-bit FNV-1a. Used for context dedup keys and deterministic ids.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// splitmix64 finalizer, spreads FNV output over all bits
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string to_hex(uint64_t v);

// Deterministic id generator: every id is a pure function of
// (run seed, parent id, ordinal), so replayed runs are bit-identical.
class IdGen {
public:
    explicit IdGen(std::string seed) : seed_(std::move(seed)) {}

    // tag is a short kind prefix: "t" trajectory, "n" node, "g" goal, "vc" case
    std::string derive(std::string_view tag, std::string_view parent, uint64_t ordinal) const;

    const std::string& seed() const { return seed_; }

private:
    std::string seed_;
};

} // namespace agentizer
