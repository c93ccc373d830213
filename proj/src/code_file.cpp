// Copyright 2026 The cqec Authors
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

#include "cqec/code_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace cqec {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::optional<std::int64_t> parse_int64(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_integer_token(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

StabilizerCode parse_code_file(std::string_view text, bool check) {
    std::optional<Eigen::Index> n;
    std::optional<Modulus> modulus;
    std::optional<std::int64_t> origin, distance;
    std::vector<std::vector<Integer>> rows;
    bool have_header = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const std::vector<Token> tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;

        if (!have_header) {
            for (const Token& t : tokens) {
                const std::size_t eq = t.text.find('=');
                if (eq == std::string_view::npos) throw ParseError(line_no, t.column, "expected key=value in header");
                const std::string_view key = t.text.substr(0, eq), value = t.text.substr(eq + 1);
                const int value_col = t.column + static_cast<int>(eq) + 1;
                if (key == "q") {
                    if (value == "Z") {
                        modulus = Modulus::unbounded();
                    } else {
                        auto v = parse_int64(value);
                        if (!v || *v < 2) throw ParseError(line_no, value_col, "modulus must be an integer >= 2 or Z");
                        modulus = Modulus::finite(*v);
                    }
                    continue;
                }
                auto v = parse_int64(value);
                if (!v) throw ParseError(line_no, value_col, "expected an integer for '" + std::string(key) + "'");
                if (key == "n") {
                    if (*v < 1) throw ParseError(line_no, value_col, "n must be positive");
                    n = static_cast<Eigen::Index>(*v);
                } else if (key == "origin") {
                    origin = *v;
                } else if (key == "d") {
                    distance = *v;
                } else {
                    throw ParseError(line_no, t.column, "unknown header key '" + std::string(key) + "'");
                }
            }
            if (!n) throw ParseError(line_no, 1, "header is missing n=");
            if (!modulus) throw ParseError(line_no, 1, "header is missing q=");
            have_header = true;
        } else {
            if (static_cast<Eigen::Index>(tokens.size()) != 2 * *n) {
                throw ParseError(line_no, tokens.back().column,
                                 "row has " + std::to_string(tokens.size()) + " entries, expected 2n = " +
                                     std::to_string(2 * *n));
            }
            std::vector<Integer> row;
            for (const Token& t : tokens) {
                if (!is_integer_token(t.text)) {
                    throw ParseError(line_no, t.column, "not an integer: '" + std::string(t.text) + "'");
                }
                const std::string digits(t.text.front() == '+' ? t.text.substr(1) : t.text);
                row.emplace_back(digits);
            }
            rows.push_back(std::move(row));
        }
    }
    if (!have_header) throw ParseError(line_no, 1, "missing header line");

    IntMatrix m(static_cast<Eigen::Index>(rows.size()), 2 * *n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    StabilizerCode code(*n, *modulus, std::move(m), origin, distance);
    if (check) require_valid(code);
    return code;
}

std::string serialize_code_file(const StabilizerCode& code) {
    std::ostringstream out;
    out << "n=" << code.n() << " q=" << code.modulus().to_string();
    if (code.origin_prime()) out << " origin=" << *code.origin_prime();
    if (code.claimed_distance()) out << " d=" << *code.claimed_distance();
    out << '\n';
    const IntMatrix& g = code.generators();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            if (j > 0) out << ' ';
            out << g(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

StabilizerCode read_code_file(const std::filesystem::path& path, bool check) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str(), check);
}

void write_code_file(const std::filesystem::path& path, const StabilizerCode& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_code_file(code);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace cqec
