// Copyright 2026 The djsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace djsim {

/// Numeric tolerances shared by every module.
///
/// Structural invariants (normalization, hermiticity, trace) are held to
/// `kStructural`; unitarity and eigenvalue checks to `kUnitary`. All the
/// arithmetic in this library is on dyadic rationals times signs, so these
/// only absorb rounding.
namespace tol {
inline constexpr double kStructural = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kEigenvalue = 1e-10;
inline constexpr double kSchmidtRank = 1e-10;
inline constexpr double kPurity = 1e-10;
inline constexpr double kVerdict = 1e-9;
}  // namespace tol

inline constexpr int kDefaultQubitCap = 10;
inline constexpr int kDefaultEnumerationCap = 4;
inline constexpr const char* kQubitCapEnv = "DJSIM_QUBIT_CAP";

namespace detail {

inline int read_qubit_cap() {
    const char* raw = std::getenv(kQubitCapEnv);
    if (raw == nullptr) {
        return kDefaultQubitCap;
    }
    std::string_view text{raw};
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    // Anything unparsable or absurd falls back to the default; dense storage
    // beyond 20 qubits would not fit in memory anyway.
    if (ec != std::errc{} || end != text.data() + text.size() || value < 1 || value > 20) {
        return kDefaultQubitCap;
    }
    return value;
}

}  // namespace detail

/// Largest qubit count accepted by dense constructions. Read once from
/// DJSIM_QUBIT_CAP, default 10.
inline int qubit_cap() {
    static const int cap = detail::read_qubit_cap();
    return cap;
}

/// Largest n for exhaustive promise-function enumeration.
inline int enumeration_cap() { return std::min(kDefaultEnumerationCap, qubit_cap()); }

/// Thrown when a requested size exceeds the configured caps.
class CapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_within_qubit_cap(int n, const char* what) {
    if (n > qubit_cap()) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(n) +
                          " qubits exceeds cap of " + std::to_string(qubit_cap()));
    }
}

}  // namespace djsim
