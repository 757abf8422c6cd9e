#include "agentizer/ids.hpp"

#include <array>
#include <cstdio>

namespace agentizer {

std::string to_hex(uint64_t v) {
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf.data(), 16);
}

std::string IdGen::derive(std::string_view tag, std::string_view parent, uint64_t ordinal) const {
    std::string key;
    key.reserve(seed_.size() + parent.size() + tag.size() + 24);
    key.append(seed_);
    key.push_back('\x1f');
    key.append(parent);
    key.push_back('\x1f');
    key.append(std::to_string(ordinal));
    key.push_back('\x1f');
    key.append(tag);
    uint64_t h = mix64(fnv1a64(key));
    std::string id(tag);
    id.push_back('-');
    id.append(to_hex(h));
    return id;
}

} // namespace agentizer
