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

#include <cmath>
#include <stdexcept>
#include <string>

namespace irsplan {

/// An equation was evaluated outside its domain (zero distance, negative power, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scenario, grid or candidate specification is invalid.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be positive and finite");
}

inline void require_non_negative(double value, const char* what) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be non-negative and finite");
}

} // namespace detail
} // namespace irsplan
