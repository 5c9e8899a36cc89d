#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/graph.hpp"
#include "spectra_bounds/matrix.hpp"

namespace spectra_bounds {

// Plain-text matrix format: first line n, then n rows of n whitespace
// separated decimal reals.
inline NonnegativeMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    long long n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        if (fields >> n) {
            std::string trailing;
            if (fields >> trailing)
                throw parse_error("unexpected token '" + trailing + "' after dimension", line_no);
            break;
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos)
            throw parse_error("expected matrix dimension", line_no);
    }
    if (n < 1) throw parse_error("matrix dimension must be >= 1", line_no);

    const std::size_t dim = static_cast<std::size_t>(n);
    std::vector<double> entries;
    entries.reserve(dim * dim);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const double value = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                entries.push_back(value);
            } catch (const std::exception&) {
                throw parse_error("invalid matrix entry '" + token + "'", line_no);
            }
            if (entries.size() > dim * dim)
                throw parse_error("too many matrix entries", line_no);
        }
    }
    if (entries.size() != dim * dim)
        throw parse_error("expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(entries.size()));
    try {
        return NonnegativeMatrix(dim, std::move(entries));
    } catch (const invalid_matrix_error& e) {
        throw parse_error(e.what());
    }
}

// JSON matrix form: {"n": int, "rows": [[...], ...]}.
inline NonnegativeMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
        throw parse_error("matrix JSON must be an object with fields 'n' and 'rows'");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw parse_error("field 'n' must be a positive integer");
    const std::size_t n = doc["n"].get<std::size_t>();
    const auto& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n)
        throw parse_error("field 'rows' must be an array of " + std::to_string(n) + " rows");

    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw parse_error("each row must hold " + std::to_string(n) + " numbers");
        for (const auto& x : row) {
            if (!x.is_number()) throw parse_error("matrix entries must be numbers");
            entries.push_back(x.get<double>());
        }
    }
    try {
        return NonnegativeMatrix(n, std::move(entries));
    } catch (const invalid_matrix_error& e) {
        throw parse_error(e.what());
    }
}

// Dispatch on the leading non-space character: '{' selects the JSON form.
inline NonnegativeMatrix parse_matrix(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_matrix_json(text) : parse_matrix_text(text);
    }
    throw parse_error("empty matrix input");
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline NonnegativeMatrix load_matrix(const std::filesystem::path& path) {
    return parse_matrix(read_text_file(path));
}

inline Graph load_graph(const std::filesystem::path& path) {
    return parse_edge_list(read_text_file(path));
}

}  // namespace spectra_bounds
