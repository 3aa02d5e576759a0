#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pglab/errors.hpp"
#include "pglab/group.hpp"

namespace pglab {

// Ingested tables may be arbitrarily bad, so the O(n^3) associativity scan
// runs on them; this cap keeps that scan (and memory) bounded.
inline constexpr int kMaxIngestedOrder = 512;

namespace detail {

// Tokenizes the text format: '#' starts a comment running to end of line.
// Reports 1-based line/column positions for malformed input.
class TableScanner {
public:
    explicit TableScanner(std::istream& in) : in_(in) {}

    int next_int(const char* what) {
        skip_separators();
        if (eof_)
            raise(ErrorCode::ParseError,
                  std::string("unexpected end of input, expected ") + what);
        int start_col = col_;
        std::string tok;
        while (!eof_ && !std::isspace(static_cast<unsigned char>(ch_)) && ch_ != '#') {
            tok += ch_;
            advance();
        }
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(line_) + " col " + std::to_string(start_col) +
                      ": expected " + what + ", got '" + tok + "'");
        }
    }

    bool at_end() {
        skip_separators();
        return eof_;
    }

    int line() const { return line_; }

private:
    void advance() {
        int c = in_.get();
        if (c == EOF) { eof_ = true; return; }
        if (ch_ == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ch_ = static_cast<char>(c);
    }

    void skip_separators() {
        if (!primed_) { primed_ = true; advance(); }
        while (!eof_) {
            if (ch_ == '#') {
                while (!eof_ && ch_ != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch_))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::istream& in_;
    char ch_ = ' ';
    bool primed_ = false;
    bool eof_ = false;
    int line_ = 1, col_ = 0;
};

inline FiniteGroup group_from_raw(std::vector<std::vector<int>> table, std::string name) {
    return FiniteGroup::from_table(std::move(table), std::move(name));
}

}  // namespace detail

// Text format: first value is n, followed by n*n entries row by row.
// Values are whitespace separated; '#' comments are ignored. The identity
// need not be element 0; it is normalized on ingestion.
inline FiniteGroup read_cayley_table(std::istream& in, std::string name = "ingested") {
    detail::TableScanner sc(in);
    int n = sc.next_int("group order");
    if (n < 1 || n > kMaxIngestedOrder)
        raise(ErrorCode::ParseError,
              "group order " + std::to_string(n) + " out of range 1.." +
                  std::to_string(kMaxIngestedOrder));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = sc.next_int("table entry");
    return detail::group_from_raw(std::move(table), std::move(name));
}

// JSON alternative: {"n": <order>, "table": [[...], ...]}.
inline FiniteGroup read_cayley_table_json(std::istream& in, std::string name = "ingested") {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::ParseError, std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("table"))
        raise(ErrorCode::ParseError, "json table needs fields 'n' and 'table'");
    if (!j["n"].is_number_integer())
        raise(ErrorCode::ParseError, "'n' must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxIngestedOrder)
        raise(ErrorCode::ParseError,
              "group order " + std::to_string(n) + " out of range 1.." +
                  std::to_string(kMaxIngestedOrder));
    if (!j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
        raise(ErrorCode::ParseError, "'table' must be an array of n rows");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        const auto& row = j["table"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            raise(ErrorCode::ParseError, "row " + std::to_string(i) + " must have n entries");
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_number_integer())
                raise(ErrorCode::ParseError,
                      "row " + std::to_string(i) + " entry " + std::to_string(k) +
                          " must be an integer");
            table[i][k] = row[k].get<int>();
        }
    }
    return detail::group_from_raw(std::move(table), std::move(name));
}

// Writes the text format; reading it back yields an identical group.
inline void write_cayley_table(const FiniteGroup& g, std::ostream& out) {
    out << g.order() << "\n";
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            if (j) out << ' ';
            out << g.product(i, j);
        }
        out << "\n";
    }
}

inline void write_cayley_table_json(const FiniteGroup& g, std::ostream& out) {
    nlohmann::json j;
    j["n"] = g.order();
    auto rows = nlohmann::json::array();
    for (int i = 0; i < g.order(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < g.order(); ++k) row.push_back(g.product(i, k));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    out << j.dump(2) << "\n";
}

}  // namespace pglab
