/*
Copyright 2026 The bridgesim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "bridgesim/flowmap.hpp"

namespace bridgesim {

namespace {

std::optional<std::uint16_t> payload_word(const Frame& f, std::size_t offset) {
    if (f.payload.size() < offset + 2) return std::nullopt;
    return static_cast<std::uint16_t>((f.payload[offset] << 8) | f.payload[offset + 1]);
}

std::optional<Vid> tag_vid(const Frame& f, std::size_t idx) {
    if (f.tags.size() <= idx) return std::nullopt;
    return f.tags[idx].vid;
}

}  // namespace

std::optional<std::uint16_t> payload_type_of(const Frame& f) { return payload_word(f, 0); }
std::optional<std::uint16_t> upper_selector_of(const Frame& f) { return payload_word(f, 2); }

const FlowRule* classify(std::span<const FlowRule> rules, const Frame& f) {
    const FlowRule* best = nullptr;
    for (const auto& rule : rules) {
        if (best && rule.priority <= best->priority) continue;
        const FlowKey& k = rule.key;
        if (k.dst && *k.dst != f.dst) continue;
        if (k.src && *k.src != f.src) continue;
        if (k.outer_vid && tag_vid(f, 0) != k.outer_vid) continue;
        if (k.inner_vid && tag_vid(f, 1) != k.inner_vid) continue;
        if (k.payload_type && payload_type_of(f) != k.payload_type) continue;
        if (k.upper_selector && upper_selector_of(f) != k.upper_selector) continue;
        best = &rule;
    }
    return best;
}

Vid flow_hash(const Frame& f, HashRange range) {
    if (range.last.value < range.first.value) throw EmptyHashRange();
    // Knuth-style multiplicative mix over the flow fields.
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDULL;
    };
    for (auto b : f.dst.octets) mix(b);
    for (auto b : f.src.octets) mix(b);
    if (auto v = tag_vid(f, 0)) mix(v->value);
    if (auto v = tag_vid(f, 1)) mix(v->value);
    if (auto v = payload_type_of(f)) mix(*v);
    if (auto v = upper_selector_of(f)) mix(*v);
    std::uint64_t span = static_cast<std::uint64_t>(range.last.value - range.first.value) + 1;
    return Vid{static_cast<std::uint16_t>(range.first.value + (h >> 16) % span)};
}

}  // namespace bridgesim
