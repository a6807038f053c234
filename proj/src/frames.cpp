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

#include "bridgesim/frames.hpp"

#include <algorithm>
#include <cstdio>

namespace bridgesim {

namespace {

int rank(TagKind k) {
    switch (k) {
        case TagKind::C: return 0;
        case TagKind::S: return 1;
        case TagKind::B: return 2;
    }
    return -1;
}

constexpr std::uint8_t kMarkerC = 0x81;
constexpr std::uint8_t kMarkerS = 0xA8;
constexpr std::uint8_t kMarkerB = 0xB8;

std::uint8_t marker_of(TagKind k) {
    switch (k) {
        case TagKind::C: return kMarkerC;
        case TagKind::S: return kMarkerS;
        case TagKind::B: return kMarkerB;
    }
    return 0;
}

}  // namespace

MacAddress MacAddress::parse(const std::string& text) {
    MacAddress m;
    unsigned v[6];
    if (std::sscanf(text.c_str(), "%2x:%2x:%2x:%2x:%2x:%2x",
                    &v[0], &v[1], &v[2], &v[3], &v[4], &v[5]) != 6) {
        throw MalformedEncoding("bad mac address '" + text + "'");
    }
    for (int i = 0; i < 6; ++i) m.octets[i] = static_cast<std::uint8_t>(v[i]);
    return m;
}

std::string MacAddress::str() const {
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x",
                  octets[0], octets[1], octets[2], octets[3], octets[4], octets[5]);
    return buf;
}

bool MacAddress::is_broadcast() const { return *this == kBroadcastMac; }

const char* to_string(TagKind k) {
    switch (k) {
        case TagKind::C: return "C";
        case TagKind::S: return "S";
        case TagKind::B: return "B";
    }
    return "?";
}

bool Frame::operator==(const Frame& other) const {
    if (dst != other.dst || src != other.src || tags != other.tags ||
        payload != other.payload || encap.has_value() != other.encap.has_value()) {
        return false;
    }
    if (encap) {
        if (!(encap->itag == other.encap->itag)) return false;
        return *encap->inner == *other.encap->inner;
    }
    return true;
}

void validate(const Frame& f) {
    int prev = 3;
    for (const auto& tag : f.tags) {
        int r = rank(tag.kind);
        if (r >= prev) {
            throw MalformedEncoding(r == prev ? "duplicate tag kind" : "tag order violation");
        }
        if (tag.kind == TagKind::B && (&tag != &f.tags.front() || !f.encap)) {
            throw MalformedEncoding("B tag outside an encapsulating header");
        }
        if (tag.vid.value > 4095) throw MalformedEncoding("vid exceeds 12 bits");
        if (tag.pcp > 7 || tag.dei > 1) throw MalformedEncoding("tci field out of range");
        prev = r;
    }
    if (f.encap) {
        if (f.tags.empty() || f.tags.front().kind != TagKind::B) {
            throw MalformedEncoding("encapsulated frame lacks a B tag");
        }
        if (!f.payload.empty()) {
            throw MalformedEncoding("payload on an encapsulating header");
        }
        if (f.encap->itag.isid.value > kIsidMax) throw MalformedEncoding("isid exceeds 24 bits");
        if (f.encap->itag.pcp > 7 || f.encap->itag.dei > 1) {
            throw MalformedEncoding("i-tag field out of range");
        }
        if (!f.encap->inner) throw MalformedEncoding("missing inner frame");
        if (f.encap->inner->encap) throw MalformedEncoding("nested encapsulation");
        validate(*f.encap->inner);
    }
    if (f.payload.size() > 0xFFFF) throw MalformedEncoding("payload exceeds length field");
}

Frame push_tag(const Frame& f, VlanTag tag) {
    if (tag.kind == TagKind::B) {
        throw OrderViolation("B tags are created by encapsulation only");
    }
    for (const auto& t : f.tags) {
        if (t.kind == tag.kind) throw DuplicateTagKind(to_string(tag.kind));
    }
    if (!f.tags.empty() && rank(tag.kind) <= rank(f.tags.front().kind)) {
        throw OrderViolation(std::string(to_string(tag.kind)) + " outside " +
                             to_string(f.tags.front().kind));
    }
    Frame out = f;
    out.tags.insert(out.tags.begin(), tag);
    return out;
}

std::pair<Frame, VlanTag> pop_tag(const Frame& f) {
    if (f.tags.empty()) throw NoTagPresent();
    Frame out = f;
    VlanTag tag = out.tags.front();
    out.tags.erase(out.tags.begin());
    return {std::move(out), tag};
}

Frame translate_vid(const Frame& f, const std::map<Vid, Vid>& table) {
    if (f.tags.empty()) throw NoTagPresent();
    Frame out = f;
    auto it = table.find(out.tags.front().vid);
    if (it != table.end()) out.tags.front().vid = it->second;
    return out;
}

Frame encapsulate_pbb(const Frame& f, MacAddress bdst, MacAddress bsrc,
                      VlanTag btag, ITag itag) {
    if (f.encap) throw NestedEncapsulation();
    if (btag.kind != TagKind::B) throw OrderViolation("outer tag must be B kind");
    Frame out;
    out.dst = bdst;
    out.src = bsrc;
    out.tags = {btag};
    out.encap = Frame::Encap{itag, std::make_shared<const Frame>(f)};
    return out;
}

Decapsulated decapsulate_pbb(const Frame& f) {
    if (!f.encap) throw NotEncapsulated();
    Decapsulated d{*f.encap->inner, f.dst, f.src,
                   f.tags.empty() ? VlanTag{TagKind::B, 0, 0, Vid{0}} : f.tags.front(),
                   f.encap->itag};
    return d;
}

namespace {

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void encode_body(const Frame& f, std::vector<std::uint8_t>& out) {
    out.push_back(kCodecVersion);
    out.insert(out.end(), f.dst.octets.begin(), f.dst.octets.end());
    out.insert(out.end(), f.src.octets.begin(), f.src.octets.end());
    out.push_back(static_cast<std::uint8_t>(f.tags.size()));
    for (const auto& tag : f.tags) {
        out.push_back(marker_of(tag.kind));
        put16(out, static_cast<std::uint16_t>((tag.pcp << 13) | (tag.dei << 12) |
                                              (tag.vid.value & 0x0FFF)));
    }
    out.push_back(f.encap ? 0x01 : 0x00);
    if (f.encap) {
        const ITag& it = f.encap->itag;
        out.push_back(static_cast<std::uint8_t>((it.pcp << 5) | (it.dei << 4)));
        out.push_back(static_cast<std::uint8_t>((it.isid.value >> 16) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((it.isid.value >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>(it.isid.value & 0xFF));
        encode_body(*f.encap->inner, out);
    }
    put16(out, static_cast<std::uint16_t>(f.payload.size()));
    out.insert(out.end(), f.payload.begin(), f.payload.end());
}

struct Reader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos + 1 > bytes.size()) throw MalformedEncoding("truncated");
        return bytes[pos++];
    }
    std::uint16_t u16() {
        std::uint16_t hi = u8();
        return static_cast<std::uint16_t>((hi << 8) | u8());
    }
    void take(std::uint8_t* dst, std::size_t n) {
        if (pos + n > bytes.size()) throw MalformedEncoding("truncated");
        std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(pos), n, dst);
        pos += n;
    }
};

Frame decode_body(Reader& r) {
    if (r.u8() != kCodecVersion) throw MalformedEncoding("unsupported version");
    Frame f;
    r.take(f.dst.octets.data(), 6);
    r.take(f.src.octets.data(), 6);
    std::uint8_t ntags = r.u8();
    for (int i = 0; i < ntags; ++i) {
        VlanTag tag;
        switch (r.u8()) {
            case kMarkerC: tag.kind = TagKind::C; break;
            case kMarkerS: tag.kind = TagKind::S; break;
            case kMarkerB: tag.kind = TagKind::B; break;
            default: throw MalformedEncoding("unknown tag marker");
        }
        std::uint16_t tci = r.u16();
        tag.pcp = static_cast<std::uint8_t>(tci >> 13);
        tag.dei = static_cast<std::uint8_t>((tci >> 12) & 1);
        tag.vid = Vid{static_cast<std::uint16_t>(tci & 0x0FFF)};
        f.tags.push_back(tag);
    }
    if (r.u8() == 0x01) {
        ITag itag;
        std::uint8_t head = r.u8();
        itag.pcp = static_cast<std::uint8_t>(head >> 5);
        itag.dei = static_cast<std::uint8_t>((head >> 4) & 1);
        std::uint32_t isid = r.u8();
        isid = (isid << 8) | r.u8();
        isid = (isid << 8) | r.u8();
        itag.isid = Isid{isid};
        Frame inner = decode_body(r);
        f.encap = Frame::Encap{itag, std::make_shared<const Frame>(std::move(inner))};
    }
    std::uint16_t plen = r.u16();
    f.payload.resize(plen);
    r.take(f.payload.data(), plen);
    return f;
}

}  // namespace

std::vector<std::uint8_t> encode(const Frame& f) {
    validate(f);
    std::vector<std::uint8_t> out;
    out.reserve(encoded_size(f));
    encode_body(f, out);
    return out;
}

Frame decode(std::span<const std::uint8_t> bytes) {
    Reader r{bytes};
    Frame f = decode_body(r);
    if (r.pos != bytes.size()) throw MalformedEncoding("trailing bytes");
    validate(f);
    return f;
}

std::size_t encoded_size(const Frame& f) {
    std::size_t n = 1 + 6 + 6 + 1 + 3 * f.tags.size() + 1 + 2 + f.payload.size();
    if (f.encap) n += 4 + encoded_size(*f.encap->inner);
    return n;
}

MacAddress group_mac(Isid isid) {
    return MacAddress{{0x53, 0x50, 0x42,
                       static_cast<std::uint8_t>((isid.value >> 16) & 0xFF),
                       static_cast<std::uint8_t>((isid.value >> 8) & 0xFF),
                       static_cast<std::uint8_t>(isid.value & 0xFF)}};
}

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace bridgesim
