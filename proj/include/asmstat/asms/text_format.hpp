#pragma once

// Plain-text ASM encoding: n lines of n space-separated integers. Several
// matrices in one stream are separated by blank lines.

#include "asmstat/asms/asm.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace asmstat::asms {

inline void write_text(std::ostream& os, const Asm& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j > 0) {
                os << ' ';
            }
            os << a(i, j);
        }
        os << '\n';
    }
}

inline std::string to_text(const Asm& a) {
    std::ostringstream os;
    write_text(os, a);
    return os.str();
}

/// Reads the next matrix (skipping leading blank lines); nullopt at end of
/// input. Malformed or invalid matrices raise AsmError.
inline std::optional<Asm> read_text(std::istream& is) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (rows.empty()) {
                continue;
            }
            break;
        }
        std::istringstream ls(line);
        std::vector<long long> row;
        std::string token;
        while (ls >> token) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw AsmError("non-integer token '" + token + "' on line " + std::to_string(line_no));
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        if (rows.size() == rows.front().size()) {
            break;
        }
    }
    if (rows.empty()) {
        return std::nullopt;
    }
    return validate(rows);
}

inline std::vector<Asm> read_all_text(std::istream& is) {
    std::vector<Asm> out;
    while (auto a = read_text(is)) {
        out.push_back(std::move(*a));
    }
    return out;
}

inline Asm parse_text(const std::string& text) {
    std::istringstream is(text);
    auto a = read_text(is);
    if (!a) {
        throw AsmError("no matrix in input");
    }
    return std::move(*a);
}

}  // namespace asmstat::asms
