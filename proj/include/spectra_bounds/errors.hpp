#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectra_bounds {

// Base for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A nonnegative square matrix failed construction (negative entry, bad shape).
class invalid_matrix_error : public error {
public:
    using error::error;
};

// The support digraph is not strongly connected. Carries one witness pair
// (from, to), 1-based, with no directed path from -> to.
class reducible_matrix_error : public error {
public:
    reducible_matrix_error(std::size_t from, std::size_t to)
        : error("matrix is reducible: no directed path " + std::to_string(from) +
                " -> " + std::to_string(to) + " in the support digraph"),
          from_vertex(from),
          to_vertex(to) {}

    std::size_t from_vertex;
    std::size_t to_vertex;
};

// Power iteration exhausted its iteration budget.
class no_convergence_error : public error {
public:
    no_convergence_error(std::size_t iterations, double last_residual)
        : error("spectral radius estimate did not converge after " +
                std::to_string(iterations) +
                " iterations (residual " + std::to_string(last_residual) + ")"),
          iterations(iterations),
          last_residual(last_residual) {}

    std::size_t iterations;
    double last_residual;
};

class dimension_mismatch_error : public error {
public:
    using error::error;
};

class non_positive_scale_error : public error {
public:
    using error::error;
};

// Theorem-1-style upper bounds require a positive off-diagonal maximum.
class zero_off_diagonal_error : public error {
public:
    using error::error;
};

class non_zero_diagonal_error : public error {
public:
    using error::error;
};

class index_error : public error {
public:
    using error::error;
};

// Text-input failures. line is 1-based; 0 means "not tied to a line".
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : error(line ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}

    std::size_t line;
};

class loop_edge_error : public parse_error {
public:
    explicit loop_edge_error(std::size_t vertex, std::size_t line = 0)
        : parse_error("loop edge at vertex " + std::to_string(vertex), line),
          vertex(vertex) {}

    std::size_t vertex;
};

class duplicate_edge_error : public parse_error {
public:
    duplicate_edge_error(std::size_t u, std::size_t v, std::size_t line = 0)
        : parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line),
          u(u),
          v(v) {}

    std::size_t u;
    std::size_t v;
};

// Carries one vertex (1-based) not reachable from vertex 1.
class disconnected_graph_error : public error {
public:
    explicit disconnected_graph_error(std::size_t unreachable)
        : error("graph is disconnected: vertex " + std::to_string(unreachable) +
                " is unreachable"),
          unreachable_vertex(unreachable) {}

    std::size_t unreachable_vertex;
};

}  // namespace spectra_bounds
