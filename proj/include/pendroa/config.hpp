/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef PENDROA_CONFIG_HPP
#define PENDROA_CONFIG_HPP

#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pendroa/csv.hpp"
#include "pendroa/lqr.hpp"
#include "pendroa/model.hpp"

namespace pendroa {

/**
 * Values read from a key-value file. Lines look like `mass = 0.676`;
 * `#` starts a comment. Recognized keys: preset, mass, length, gravity,
 * damping, torque_limit_fraction, q0, q1, r.
 */
struct ConfigValues {
    std::optional<std::string> preset;
    std::optional<double> mass;
    std::optional<double> length;
    std::optional<double> gravity;
    std::optional<double> damping;
    std::optional<double> torque_limit_fraction;
    std::optional<double> q0;
    std::optional<double> q1;
    std::optional<double> r;

    /// Later values win: fields set in @p other replace ours.
    void merge(const ConfigValues& other) {
        auto take = [](auto& dst, const auto& src) {
            if (src) dst = src;
        };
        take(preset, other.preset);
        take(mass, other.mass);
        take(length, other.length);
        take(gravity, other.gravity);
        take(damping, other.damping);
        take(torque_limit_fraction, other.torque_limit_fraction);
        take(q0, other.q0);
        take(q1, other.q1);
        take(r, other.r);
    }

    /// Preset (default "normal") with explicit physical overrides applied.
    [[nodiscard]] PendulumParams params() const {
        PendulumParams p = pendroa::preset(preset.value_or("normal"));
        if (mass) p.mass = *mass;
        if (length) p.length = *length;
        if (gravity) p.gravity = *gravity;
        if (damping) p.damping = *damping;
        p.validate();
        return p;
    }

    [[nodiscard]] CostWeights weights() const {
        CostWeights w;
        if (q0) w.q0 = *q0;
        if (q1) w.q1 = *q1;
        if (r) w.r = *r;
        return w;
    }

    [[nodiscard]] double limit_fraction() const { return torque_limit_fraction.value_or(0.5); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

/// Throws std::invalid_argument on malformed lines, unknown keys or bad numbers.
inline ConfigValues parse_config(std::istream& in) {
    ConfigValues cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = detail::trim(view);
        if (view.empty()) continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key(detail::trim(view.substr(0, eq)));
        const std::string_view value = detail::trim(view.substr(eq + 1));
        if (value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty value for " + key);

        auto number = [&] {
            try {
                return parse_double(value);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + key +
                                            " is not a number");
            }
        };
        if (key == "preset") cfg.preset = std::string(value);
        else if (key == "mass") cfg.mass = number();
        else if (key == "length") cfg.length = number();
        else if (key == "gravity") cfg.gravity = number();
        else if (key == "damping") cfg.damping = number();
        else if (key == "torque_limit_fraction") cfg.torque_limit_fraction = number();
        else if (key == "q0") cfg.q0 = number();
        else if (key == "q1") cfg.q1 = number();
        else if (key == "r") cfg.r = number();
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return cfg;
}

inline ConfigValues load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace pendroa

#endif // PENDROA_CONFIG_HPP
