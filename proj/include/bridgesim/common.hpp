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

#ifndef BRIDGESIM_COMMON_HPP
#define BRIDGESIM_COMMON_HPP

#include <cstdint>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace bridgesim {

// Simulated time in integer nanoseconds. All externally visible times are
// derived from this representation so that traces and dumps are bit-stable
// across runs and platforms.
using SimTime = std::int64_t;
constexpr SimTime kSecond = 1'000'000'000;
constexpr SimTime kMillisecond = 1'000'000;

SimTime seconds(double s);
// Fixed-point "s.nnnnnnnnn" rendering used in traces.
std::string format_time(SimTime t);

using BridgeId = std::uint16_t;

struct PortId {
    BridgeId bridge = 0;
    std::uint16_t port = 0;
    auto operator<=>(const PortId&) const = default;
};

using MstiId = std::uint16_t;

// The MSTI reserved for External Agents; distributed control never touches
// VLANs allocated to it.
constexpr MstiId kExtMsti = 0xFFE;

enum class PlaneOwner : std::uint8_t { Spb, ExternalAgent };
enum class Actor : std::uint8_t { SpbPlane, SdnController, Management };

const char* to_string(PlaneOwner o);
const char* to_string(Actor a);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BRIDGESIM_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                                   \
        Name() : Error(#Name) {}                                            \
        explicit Name(const std::string& m) : Error(std::string(#Name) + ": " + m) {} \
    }

BRIDGESIM_DEFINE_ERROR(OrderViolation);
BRIDGESIM_DEFINE_ERROR(DuplicateTagKind);
BRIDGESIM_DEFINE_ERROR(NoTagPresent);
BRIDGESIM_DEFINE_ERROR(NestedEncapsulation);
BRIDGESIM_DEFINE_ERROR(NotEncapsulated);
BRIDGESIM_DEFINE_ERROR(MalformedEncoding);
BRIDGESIM_DEFINE_ERROR(UnknownLink);
BRIDGESIM_DEFINE_ERROR(UnknownMsti);
BRIDGESIM_DEFINE_ERROR(UnknownVid);
BRIDGESIM_DEFINE_ERROR(UnknownBridge);
BRIDGESIM_DEFINE_ERROR(UnknownPort);
BRIDGESIM_DEFINE_ERROR(UnknownBinding);
BRIDGESIM_DEFINE_ERROR(UnknownAttachment);
BRIDGESIM_DEFINE_ERROR(UnknownHost);
BRIDGESIM_DEFINE_ERROR(VlanInUse);
BRIDGESIM_DEFINE_ERROR(OwnershipViolation);
BRIDGESIM_DEFINE_ERROR(InvalidPath);
BRIDGESIM_DEFINE_ERROR(CycleRefused);
BRIDGESIM_DEFINE_ERROR(ResourceExhausted);
BRIDGESIM_DEFINE_ERROR(PathRequired);
BRIDGESIM_DEFINE_ERROR(PathsNotDisjoint);
BRIDGESIM_DEFINE_ERROR(InstallFailed);
BRIDGESIM_DEFINE_ERROR(NoSpbAvailable);
BRIDGESIM_DEFINE_ERROR(EmptyHashRange);
BRIDGESIM_DEFINE_ERROR(MaMismatch);
BRIDGESIM_DEFINE_ERROR(ScenarioError);

#undef BRIDGESIM_DEFINE_ERROR

// Named event/violation counters, dumped with deterministic ordering.
struct Counters {
    std::map<std::string, std::uint64_t> values;

    void bump(const std::string& name, std::uint64_t n = 1) { values[name] += n; }
    std::uint64_t get(const std::string& name) const {
        auto it = values.find(name);
        return it == values.end() ? 0 : it->second;
    }
};

using NameMap = std::map<BridgeId, std::string>;

std::string bridge_name(const NameMap& names, BridgeId id);
std::string port_name(const NameMap& names, PortId p);

}  // namespace bridgesim

#endif
