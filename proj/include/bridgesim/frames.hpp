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

#ifndef BRIDGESIM_FRAMES_HPP
#define BRIDGESIM_FRAMES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bridgesim/common.hpp"

namespace bridgesim {

/// 48-bit MAC address. The group bit is the LSB of the first octet;
/// all-ones is broadcast.
struct MacAddress {
    std::array<std::uint8_t, 6> octets{};

    static MacAddress parse(const std::string& text);  // "xx:xx:xx:xx:xx:xx"
    std::string str() const;

    bool is_group() const { return (octets[0] & 0x01) != 0; }
    bool is_broadcast() const;

    auto operator<=>(const MacAddress&) const = default;
};

constexpr MacAddress kBroadcastMac{{0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF}};

/// 12-bit VLAN identifier. 0 and 4095 are never assigned to a service VLAN;
/// the valid service range is 1..4094.
struct Vid {
    std::uint16_t value = 0;
    auto operator<=>(const Vid&) const = default;
};

constexpr bool is_service_vid(Vid v) { return v.value >= 1 && v.value <= 4094; }

/// 24-bit backbone service instance identifier. 2^24 distinct services are
/// representable per backbone VLAN.
struct Isid {
    std::uint32_t value = 0;
    auto operator<=>(const Isid&) const = default;
};

constexpr std::uint32_t kIsidMax = 0xFFFFFF;

// Identifier widths of the full encapsulation stack. A frame carrying all
// four exposes 12+12+12+24 = 60 bits of virtualization space.
constexpr int kCVidBits = 12;
constexpr int kSVidBits = 12;
constexpr int kBVidBits = 12;
constexpr int kIsidBits = 24;

enum class TagKind : std::uint8_t { C, S, B };

const char* to_string(TagKind k);

struct VlanTag {
    TagKind kind = TagKind::C;
    std::uint8_t pcp = 0;  // 3-bit priority
    std::uint8_t dei = 0;  // 1-bit drop eligibility
    Vid vid;

    bool operator==(const VlanTag&) const = default;
};

struct ITag {
    std::uint8_t pcp = 0;
    std::uint8_t dei = 0;
    Isid isid;

    bool operator==(const ITag&) const = default;
};

/// An Ethernet frame as a recursive header stack: MAC header, ordered VLAN
/// tags (outermost first), an optional backbone encapsulation holding a full
/// inner frame, and an opaque payload.
///
/// Invariants (checked by validate()):
///  - tag kinds strictly decrease in rank outermost-to-innermost (B > S > C),
///    which implies at most one tag of each kind;
///  - a B tag appears only as the outermost tag of an encapsulating header;
///  - an encapsulated frame carries exactly one B tag and an empty payload
///    (the payload belongs to the innermost frame);
///  - encapsulation depth is at most 1.
///
/// Frames are immutable values after construction; every operation returns a
/// new frame. The inner frame of an encapsulation is shared read-only.
struct Frame {
    MacAddress dst;
    MacAddress src;
    std::vector<VlanTag> tags;  // outermost first

    struct Encap {
        ITag itag;
        std::shared_ptr<const Frame> inner;
    };
    std::optional<Encap> encap;

    std::vector<std::uint8_t> payload;

    bool operator==(const Frame& other) const;
    const VlanTag* outermost_tag() const { return tags.empty() ? nullptr : &tags.front(); }
};

/// Throws MalformedEncoding when a frame violates the header-stack invariants.
void validate(const Frame& f);

/// Adds `tag` as the new outermost tag. The resulting tag order must keep
/// S outside C; B tags are only created by encapsulation.
/// Throws OrderViolation or DuplicateTagKind.
Frame push_tag(const Frame& f, VlanTag tag);

/// Removes and returns the outermost tag. Throws NoTagPresent.
std::pair<Frame, VlanTag> pop_tag(const Frame& f);

/// Replaces the outermost tag's VID through `table`; a VID absent from the
/// table is left unchanged. Inner tags are never touched.
/// Throws NoTagPresent.
Frame translate_vid(const Frame& f, const std::map<Vid, Vid>& table);

/// Wraps `f` in a full backbone MAC header: outer addresses, a single B tag
/// and an I-tag. The inner frame is preserved bit-exactly.
/// Throws NestedEncapsulation if `f` is already encapsulated; OrderViolation
/// if `btag` is not B-kind.
Frame encapsulate_pbb(const Frame& f, MacAddress bdst, MacAddress bsrc,
                      VlanTag btag, ITag itag);

struct Decapsulated {
    Frame inner;
    MacAddress bdst;
    MacAddress bsrc;
    VlanTag btag;
    ITag itag;
};

/// Unwraps one level of backbone encapsulation. Throws NotEncapsulated.
Decapsulated decapsulate_pbb(const Frame& f);

/// Simulator-canonical codec. Layout (all multi-byte fields big-endian):
///
///   [version:1][dst:6][src:6][tag count:1]
///   [per tag: kind marker:1, tci:2]          kind markers: C=0x81 S=0xA8 B=0xB8
///   [encap flag:1]
///   [if encapsulated: i-tag pcp/dei/isid:4, inner frame recursively]
///   [payload len:2][payload]
///
/// The tci packs pcp(3) | dei(1) | vid(12). The i-tag word packs
/// pcp(3) | dei(1) | reserved(4) | isid(24). decode() rejects truncation,
/// unknown markers and any invariant violation with MalformedEncoding, and
/// round-trips every valid frame exactly.
std::vector<std::uint8_t> encode(const Frame& f);
Frame decode(std::span<const std::uint8_t> bytes);
std::size_t encoded_size(const Frame& f);

constexpr std::uint8_t kCodecVersion = 0x01;

/// Backbone group address for a service instance: a fixed local+group 24-bit
/// prefix (53:50:42) followed by the 24-bit I-SID.
MacAddress group_mac(Isid isid);

/// FNV-1a, used for frame digests in traces.
std::uint64_t fnv1a(std::span<const std::uint8_t> bytes);

}  // namespace bridgesim

#endif
