// irs-planner: SINR coverage and IRS placement toolkit
// Copyright (C) 2026 The irs-planner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "irsplan/linkbudget.hpp"

#include <span>

namespace irsplan {

/// A downlink transmitter whose signal counts as interference at the user.
/// The default scenario has exactly one: the macro BS.
struct InterferenceSource {
    double transmit_power = 0.0; // W
    Position3D position;
    double pathloss_exponent = 4.0;

    bool operator==(const InterferenceSource&) const = default;
};

struct SinrSample {
    double signal_power = 0.0;       // W
    double interference_power = 0.0; // W
    double noise_power = 0.0;        // W
    double sinr_linear = 0.0;
    double sinr_db = 0.0; // -inf when there is no signal
};

/// Sum of direct-link powers received from every source.
inline double interference_power(const Position3D& user, std::span<const InterferenceSource> sources,
                                 const RadioEnvironment& env) {
    double total = 0.0;
    for (const auto& s : sources) {
        detail::require_non_negative(s.transmit_power, "interferer power");
        if (!(s.pathloss_exponent >= 2.0)) throw DomainError("interferer path-loss exponent must be >= 2");
        total += conventional_rx_power({s.transmit_power, s.position, user, s.pathloss_exponent}, env);
    }
    return total;
}

inline SinrSample sinr(double signal_power, double interference_power, double noise_power) {
    detail::require_non_negative(signal_power, "signal power");
    detail::require_non_negative(interference_power, "interference power");
    detail::require_positive(noise_power, "noise power");
    SinrSample s;
    s.signal_power = signal_power;
    s.interference_power = interference_power;
    s.noise_power = noise_power;
    s.sinr_linear = signal_power / (interference_power + noise_power);
    s.sinr_db = linear_to_db(s.sinr_linear);
    return s;
}

} // namespace irsplan
