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

// JSON and text rendering for command output. Floats are written with 12
// significant digits in JSON and 6 decimals in text.

#pragma once

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include "djsim/dj.hpp"
#include "djsim/optics.hpp"
#include "djsim/separability.hpp"

namespace djsim::report {

using json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the emitted JSON is stable.
inline double json_number(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::stod(buf);
    return r == 0.0 ? 0.0 : r;  // drop the sign of -0
}

/// Fixed 6-decimal text, with -0.000000 printed as 0.000000.
inline std::string text_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
        s.erase(0, 1);
    }
    return s;
}

inline json complex_pair(Complex c) { return json::array({json_number(c.real()), json_number(c.imag())}); }

inline json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_pair(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json reals_json(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) {
        a.push_back(json_number(x));
    }
    return a;
}

/// {command, parameters, records, summary}
inline json envelope(std::string command, json parameters, json records, json summary) {
    json out;
    out["command"] = std::move(command);
    out["parameters"] = std::move(parameters);
    out["records"] = std::move(records);
    out["summary"] = std::move(summary);
    return out;
}

inline json outcome_json(const BooleanFunction& f, const DJOutcome& o) {
    return {{"truth_table", f.to_string()},
            {"class", to_string(classify_function(f))},
            {"amplitude", complex_pair(o.amplitude_at_zero)},
            {"probability", json_number(o.probability_at_zero())},
            {"verdict", to_string(o.verdict)}};
}

/// {truth_table, class, status, factors?, schmidt_values}
inline json oracle_record_json(const OracleRecord& r) {
    json j;
    j["truth_table"] = r.function.to_string();
    j["class"] = to_string(r.promise);
    j["status"] = to_string(r.factorization.status);
    if (r.factorization.factors) {
        json factors = json::array();
        for (const auto& f : *r.factorization.factors) {
            factors.push_back(matrix_json(f.matrix()));
        }
        j["factors"] = std::move(factors);
        j["global_phase"] = complex_pair(*r.factorization.global_phase);
    }
    j["schmidt_values"] = reals_json(r.factorization.schmidt_values);
    j["consistent"] = r.consistent();
    return j;
}

inline const char* kind_name(optics::ElementKind k) { return optics::to_string(k); }

/// {beams: [{beam, input, stages: [[{kind, axis_deg}]], elements: [{kind, axis_deg, stage}]}]}
inline json circuit_json(const optics::OpticalCircuit& c) {
    json beams = json::array();
    for (std::size_t k = 0; k < c.beams.size(); ++k) {
        const auto& beam = c.beams[k];
        json elements = json::array();
        for (std::size_t s = 0; s < beam.stages.size(); ++s) {
            for (const auto& e : beam.stages[s]) {
                json el{{"kind", kind_name(e.kind)}, {"axis_deg", json_number(optics::to_degrees(e.axis_angle))}};
                if (e.kind == optics::ElementKind::General) {
                    el["retardance_deg"] = json_number(optics::to_degrees(e.retardance));
                }
                el["stage"] = s + 1;
                elements.push_back(std::move(el));
            }
        }
        beams.push_back({{"beam", k + 1},
                         {"input", beam.input_bit ? "x" : "y"},
                         {"stages", beam.stages.size()},
                         {"elements", std::move(elements)},
                         {"terminal", "POL@y"}});
    }
    return {{"beams", std::move(beams)}};
}

}  // namespace djsim::report
