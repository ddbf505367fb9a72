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

// Jones calculus for polarization "classical qubits".
//
// Jones vectors are (E_x, E_y). Logical 0 is y-polarized light and logical 1
// is x-polarized light, so the logical basis (|0>, |1>) is the Jones basis
// in reverse order. A birefringent plate with retardance eta whose slow axis
// sits at angle phi from x acts as
//
//     W(eta, phi) = R(phi) diag(e^{i eta/2}, e^{-i eta/2}) R(-phi)
//
// with R the ordinary 2x2 rotation. Every such plate has determinant 1.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "djsim/dj.hpp"
#include "djsim/quantum_state.hpp"
#include "djsim/separability.hpp"

namespace djsim::optics {

using Jones2 = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;

enum class ElementKind { QWP, HWP, General, Rotator };

/// A single optical element. For Rotator the retardance is unused and
/// axis_angle is the rotation angle.
struct WaveplateElement {
    ElementKind kind = ElementKind::General;
    double retardance = 0.0;  // eta, radians
    double axis_angle = 0.0;  // phi, radians

    static WaveplateElement qwp(double phi) { return {ElementKind::QWP, kPi / 2, phi}; }
    static WaveplateElement hwp(double phi) { return {ElementKind::HWP, kPi, phi}; }
    static WaveplateElement general(double eta, double phi) { return {ElementKind::General, eta, phi}; }
    static WaveplateElement rotator(double theta) { return {ElementKind::Rotator, 0.0, theta}; }

    friend bool operator==(const WaveplateElement&, const WaveplateElement&) = default;
};

inline const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::QWP: return "QWP";
        case ElementKind::HWP: return "HWP";
        case ElementKind::General: return "WP";
        case ElementKind::Rotator: return "ROT";
    }
    return "?";
}

inline Jones2 rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Jones2 r;
    r << c, -s, s, c;
    return r;
}

inline Jones2 waveplate_matrix(const WaveplateElement& e) {
    if (e.kind == ElementKind::Rotator) {
        return rotation(e.axis_angle);
    }
    Jones2 d = Jones2::Zero();
    d(0, 0) = std::polar(1.0, e.retardance / 2);
    d(1, 1) = std::polar(1.0, -e.retardance / 2);
    return rotation(e.axis_angle) * d * rotation(-e.axis_angle);
}

inline UnitaryMatrix waveplate_unitary(const WaveplateElement& e) {
    return {detail::Trusted{}, CMatrix(waveplate_matrix(e))};
}

class JonesVector {
public:
    /// Validates unit intensity within 1e-12.
    JonesVector(Complex ex, Complex ey) : ex_(ex), ey_(ey) {
        if (std::abs(intensity() - 1.0) > tol::kStructural) {
            throw std::invalid_argument("JonesVector: intensity is not 1");
        }
    }

    Complex ex() const { return ex_; }
    Complex ey() const { return ey_; }
    double intensity() const { return std::norm(ex_) + std::norm(ey_); }
    /// Intensity transmitted by a y-polarizer.
    double y_intensity() const { return std::norm(ey_); }

    JonesVector transformed(const Jones2& m) const {
        return {detail::Trusted{}, m(0, 0) * ex_ + m(0, 1) * ey_, m(1, 0) * ex_ + m(1, 1) * ey_};
    }

private:
    JonesVector(detail::Trusted, Complex ex, Complex ey) : ex_(ex), ey_(ey) {}

    Complex ex_;
    Complex ey_;
};

/// 1 -> x-polarized (1, 0); 0 -> y-polarized (0, 1).
inline JonesVector encode(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("encode: bit must be 0 or 1");
    }
    return bit ? JonesVector{1.0, 0.0} : JonesVector{0.0, 1.0};
}

/// Slow-axis angles, radians in [0, pi), for QWP(qwp1) . HWP(hwp) . QWP(qwp2).
struct QhqAngles {
    double qwp1 = 0.0;
    double hwp = 0.0;
    double qwp2 = 0.0;
};

inline Jones2 qhq_matrix(const QhqAngles& a) {
    return waveplate_matrix(WaveplateElement::qwp(a.qwp1)) * waveplate_matrix(WaveplateElement::hwp(a.hwp)) *
           waveplate_matrix(WaveplateElement::qwp(a.qwp2));
}

inline double wrap_axis(double phi) {
    double w = std::fmod(phi, kPi);
    if (w < 0) {
        w += kPi;
    }
    return w >= kPi ? 0.0 : w;
}

/// Q-H-Q angles realizing a special-unitary U exactly (sign included).
///
/// With a plate at phi written as R(phi) D R(-phi) and R(phi) = exp(-i phi
/// sigma_y) = Ry(2 phi), the sandwich collapses to
///
///     Q(p1) H(p2) Q(p3) = -Ry(2 p1) Rx(4 p2 - 2 p1 - 2 p3) Ry(-2 p3)
///
/// so a Y-X-Y Euler decomposition -U = Ry(alpha) Rx(beta) Ry(gamma) fixes
/// p1 = alpha/2, p3 = -gamma/2, p2 = (beta + alpha - gamma)/4. Wrapping the
/// axes mod pi is exact: R(pi) = -I drops out of R D R^-1.
inline QhqAngles qhq_synthesize(const Jones2& u, double det_tolerance = tol::kUnitary) {
    if (std::abs(u.determinant() - Complex{1.0, 0.0}) > det_tolerance) {
        throw std::invalid_argument("qhq_synthesize: determinant is not 1");
    }
    if ((u.adjoint() * u - Jones2::Identity()).norm() > det_tolerance) {
        throw std::invalid_argument("qhq_synthesize: matrix is not unitary");
    }
    // -U = w - i (x sx + y sy + z sz) for a unit quaternion (w, x, y, z).
    const Jones2 m = -u;
    const double w = 0.5 * (m(0, 0) + m(1, 1)).real();
    const double x = -0.5 * (m(0, 1) + m(1, 0)).imag();
    const double y = 0.5 * (m(1, 0) - m(0, 1)).real();
    const double z = -0.5 * (m(0, 0) - m(1, 1)).imag();

    // Ry(a) Rx(b) Ry(g) has w + i y = cos(b/2) e^{i (a+g)/2} and
    // x - i z = sin(b/2) e^{i (a-g)/2}.
    const Complex even{w, y};
    const Complex odd{x, -z};
    const double beta = 2.0 * std::atan2(std::abs(odd), std::abs(even));
    const double sum = std::abs(even) > 1e-300 ? 2.0 * std::arg(even) : 0.0;
    const double diff = std::abs(odd) > 1e-300 ? 2.0 * std::arg(odd) : 0.0;
    const double alpha = 0.5 * (sum + diff);
    const double gamma = 0.5 * (sum - diff);

    return {wrap_axis(alpha / 2), wrap_axis((beta + alpha - gamma) / 4), wrap_axis(-gamma / 2)};
}

/// Haar-distributed element of SU(2) from a normalized Gaussian quaternion.
template <typename Rng>
Jones2 random_special_unitary(Rng& rng) {
    std::normal_distribution<double> normal;
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& v : q) {
            v = normal(rng);
            norm += v * v;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    const Complex a{q[0] / norm, q[1] / norm};
    const Complex b{q[2] / norm, q[3] / norm};
    Jones2 u;
    u << a, -std::conj(b), b, std::conj(a);
    return u;
}

/// One light beam: its input polarization bit and an ordered list of stages,
/// each stage an ordered (possibly empty) list of elements. A y-polarizer and
/// intensity detector terminate every beam.
struct OpticalBeam {
    int input_bit = 0;
    std::vector<std::vector<WaveplateElement>> stages;
};

struct OpticalCircuit {
    std::vector<OpticalBeam> beams;

    int n_beams() const { return static_cast<int>(beams.size()); }
};

class NotFactorizable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hadamard stage element. HWP at 22.5 degrees is i times the Hadamard
/// matrix in the (x, y) basis and is its own inverse up to sign.
inline WaveplateElement hadamard_element() { return WaveplateElement::hwp(kPi / 8); }

/// Beam j carries qubit j. Stages: Hadamard, oracle factor, Hadamard. A
/// diag(1, -1) oracle factor becomes an HWP with its axis on x; an identity
/// factor leaves the stage empty.
inline OpticalCircuit compile_dj_circuit(const BooleanFunction& f) {
    require_within_qubit_cap(f.n_bits(), "compile_dj_circuit");
    const auto result = factorize_oracle(build_phase_oracle(f));
    if (result.status != FactorStatus::Product) {
        throw NotFactorizable("oracle for truth table " + f.to_string() +
                              " is entangling: it is not a tensor product of single-qubit "
                              "transformations and has no per-beam waveplate realization");
    }
    OpticalCircuit circuit;
    for (const auto& factor : *result.factors) {
        OpticalBeam beam;
        beam.input_bit = 0;
        beam.stages.push_back({hadamard_element()});
        if (factor(1, 1).real() < 0) {
            beam.stages.push_back({WaveplateElement::hwp(0.0)});
        } else {
            beam.stages.emplace_back();
        }
        beam.stages.push_back({hadamard_element()});
        circuit.beams.push_back(std::move(beam));
    }
    return circuit;
}

/// Jones vector at the input and after each stage.
inline std::vector<JonesVector> propagate(const OpticalBeam& beam) {
    std::vector<JonesVector> trace{encode(beam.input_bit)};
    for (const auto& stage : beam.stages) {
        JonesVector v = trace.back();
        for (const auto& element : stage) {
            v = v.transformed(waveplate_matrix(element));
        }
        trace.push_back(v);
    }
    return trace;
}

enum class OpticalVerdictKind { Constant, Balanced, Indeterminate };

inline const char* to_string(OpticalVerdictKind v) {
    switch (v) {
        case OpticalVerdictKind::Constant: return "Constant";
        case OpticalVerdictKind::Balanced: return "Balanced";
        case OpticalVerdictKind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

struct OpticalVerdict {
    std::vector<double> intensities;          // after the y-polarizer, per beam
    std::vector<JonesVector> pre_polarizer;   // per beam
    OpticalVerdictKind verdict = OpticalVerdictKind::Indeterminate;
};

/// Light on every detector means constant; a dark detector means balanced.
/// Anything else (never produced by a compiled DJ circuit) is Indeterminate.
inline OpticalVerdict simulate_circuit(const OpticalCircuit& c) {
    if (c.beams.empty()) {
        throw std::invalid_argument("simulate_circuit: circuit has no beams");
    }
    OpticalVerdict out;
    bool all_lit = true;
    bool any_dark = false;
    for (const auto& beam : c.beams) {
        const auto trace = propagate(beam);
        const double intensity = trace.back().y_intensity();
        out.pre_polarizer.push_back(trace.back());
        out.intensities.push_back(intensity);
        all_lit = all_lit && intensity >= 1.0 - tol::kVerdict;
        any_dark = any_dark || intensity <= tol::kVerdict;
    }
    if (any_dark) {
        out.verdict = OpticalVerdictKind::Balanced;
    } else if (all_lit) {
        out.verdict = OpticalVerdictKind::Constant;
    }
    return out;
}

inline double to_degrees(double radians) { return radians * 180.0 / kPi; }

inline std::string format_degrees(double radians) {
    char buf[64];
    double deg = to_degrees(radians);
    if (std::abs(deg) < 5e-7) {
        deg = 0.0;
    }
    std::snprintf(buf, sizeof buf, "%.6f", deg);
    return buf;
}

inline std::string format_element(const WaveplateElement& e) {
    std::string s = to_string(e.kind);
    if (e.kind == ElementKind::General) {
        s += "(" + format_degrees(e.retardance) + ")";
    }
    return s + "@" + format_degrees(e.axis_angle);
}

/// One line per stage per beam, then the terminal polarizer line:
///
///     beam 1: HWP@22.500000
///     beam 1: --
///     beam 1: HWP@22.500000
///     beam 1: POL@y -> detector
inline std::string format_circuit(const OpticalCircuit& c) {
    std::string out;
    for (std::size_t k = 0; k < c.beams.size(); ++k) {
        const std::string prefix = "beam " + std::to_string(k + 1) + ": ";
        for (const auto& stage : c.beams[k].stages) {
            out += prefix;
            if (stage.empty()) {
                out += "--";
            }
            for (std::size_t i = 0; i < stage.size(); ++i) {
                out += (i ? " " : "") + format_element(stage[i]);
            }
            out += '\n';
        }
        out += prefix + "POL@y -> detector\n";
    }
    return out;
}

}  // namespace djsim::optics
