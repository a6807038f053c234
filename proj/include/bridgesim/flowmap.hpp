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

#ifndef BRIDGESIM_FLOWMAP_HPP
#define BRIDGESIM_FLOWMAP_HPP

#include <optional>
#include <span>
#include <vector>

#include "bridgesim/frames.hpp"

namespace bridgesim {

/// n-tuple match key for edge flow classification. All fields are optional;
/// a rule matches when every specified field equals the frame's value.
/// The payload-type field is the 16-bit word at payload offset 0 and the
/// upper-layer selector the word at offset 2 (stand-ins for an EtherType and
/// e.g. a TCP port; frames shorter than the offset never match).
struct FlowKey {
    std::optional<MacAddress> dst;
    std::optional<MacAddress> src;
    std::optional<Vid> outer_vid;
    std::optional<Vid> inner_vid;
    std::optional<std::uint16_t> payload_type;
    std::optional<std::uint16_t> upper_selector;

    bool empty() const {
        return !dst && !src && !outer_vid && !inner_vid && !payload_type && !upper_selector;
    }
};

enum class FlowActionKind : std::uint8_t { MapToIsid, MapToBvid, MapToFlowHash };

struct FlowAction {
    FlowActionKind kind = FlowActionKind::MapToBvid;
    Isid isid;  // MapToIsid
    Vid bvid;   // MapToIsid, MapToBvid
};

struct FlowRule {
    int priority = 0;  // unique within a port's rule set
    FlowKey key;
    FlowAction action;
};

std::optional<std::uint16_t> payload_type_of(const Frame& f);
std::optional<std::uint16_t> upper_selector_of(const Frame& f);

/// Highest-priority rule all of whose specified fields match, or nullptr.
const FlowRule* classify(std::span<const FlowRule> rules, const Frame& f);

struct HashRange {
    Vid first;
    Vid last;  // inclusive
};

/// Deterministic flow hash: a multiplicative hash over the frame's flow
/// fields, reduced into the configured VID range. Identical frames always
/// map to the same VID. Throws EmptyHashRange.
Vid flow_hash(const Frame& f, HashRange range);

}  // namespace bridgesim

#endif
