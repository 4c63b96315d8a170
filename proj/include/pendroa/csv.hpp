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

#ifndef PENDROA_CSV_HPP
#define PENDROA_CSV_HPP

#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace pendroa {

/// Shortest decimal text that parses back to exactly @p v.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

/// Minimal comma-separated writer; fields are numeric or plain identifiers.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void header(std::initializer_list<std::string_view> names) {
        for (auto n : names) field(n);
        end_row();
    }

    CsvWriter& field(double v) { return raw(format_double(v)); }
    CsvWriter& field(bool v) { return raw(v ? "1" : "0"); }
    CsvWriter& field(std::uint64_t v) { return raw(std::to_string(v)); }
    CsvWriter& field(std::string_view v) { return raw(v); }
    CsvWriter& field(const char* v) { return raw(v); }
    CsvWriter& empty() { return raw(""); }

    void end_row() {
        os_ << '\n';
        first_ = true;
    }

private:
    CsvWriter& raw(std::string_view text) {
        if (!first_) os_ << ',';
        os_ << text;
        first_ = false;
        return *this;
    }

    std::ostream& os_;
    bool first_ = true;
};

/// Splits one CSV line on commas (no quoting support).
inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace pendroa

#endif // PENDROA_CSV_HPP
