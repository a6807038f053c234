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

#include "bridgesim/common.hpp"

#include <cmath>
#include <cstdio>

namespace bridgesim {

SimTime seconds(double s) {
    return static_cast<SimTime>(std::llround(s * static_cast<double>(kSecond)));
}

std::string format_time(SimTime t) {
    char buf[40];
    const char* sign = t < 0 ? "-" : "";
    std::uint64_t abs = t < 0 ? static_cast<std::uint64_t>(-t) : static_cast<std::uint64_t>(t);
    std::snprintf(buf, sizeof buf, "%s%llu.%09llu", sign,
                  static_cast<unsigned long long>(abs / kSecond),
                  static_cast<unsigned long long>(abs % kSecond));
    return buf;
}

const char* to_string(PlaneOwner o) {
    return o == PlaneOwner::Spb ? "Spb" : "ExternalAgent";
}

const char* to_string(Actor a) {
    switch (a) {
        case Actor::SpbPlane: return "SpbPlane";
        case Actor::SdnController: return "SdnController";
        default: return "Management";
    }
}

std::string bridge_name(const NameMap& names, BridgeId id) {
    auto it = names.find(id);
    if (it != names.end()) return it->second;
    return "B" + std::to_string(id);
}

std::string port_name(const NameMap& names, PortId p) {
    return bridge_name(names, p.bridge) + "." + std::to_string(p.port);
}

}  // namespace bridgesim
