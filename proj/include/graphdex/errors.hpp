#ifndef GRAPHDEX_ERRORS_HPP
#define GRAPHDEX_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphdex {

// Base class for every error this library reports.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::string pair_str(std::int64_t u, std::int64_t v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}
inline std::string at_line(int line) {
    return line > 0 ? " at line " + std::to_string(line) : std::string{};
}
}  // namespace detail

// Edge with identical endpoints.
class LoopEdgeError : public GraphError {
public:
    LoopEdgeError(std::int64_t u, std::int64_t v, int line = 0)
        : GraphError("loop edge " + detail::pair_str(u, v) + detail::at_line(line)),
          u(u), v(v), line(line) {}
    std::int64_t u, v;
    int line;
};

// Edge endpoint outside [0, n).
class EndpointOutOfRangeError : public GraphError {
public:
    EndpointOutOfRangeError(std::int64_t u, std::int64_t v, std::int64_t n, int line = 0)
        : GraphError("edge " + detail::pair_str(u, v) + " has an endpoint outside [0, " +
                     std::to_string(n) + ")" + detail::at_line(line)),
          u(u), v(v), n(n), line(line) {}
    std::int64_t u, v, n;
    int line;
};

// Same unordered vertex pair listed twice.
class DuplicateEdgeError : public GraphError {
public:
    DuplicateEdgeError(std::int64_t u, std::int64_t v, int line = 0)
        : GraphError("duplicate edge " + detail::pair_str(u, v) + detail::at_line(line)),
          u(u), v(v), line(line) {}
    std::int64_t u, v;
    int line;
};

// Generator size below the family minimum.
class SizeTooSmallError : public GraphError {
public:
    SizeTooSmallError(const std::string& what_for, std::int64_t got, std::int64_t min)
        : GraphError(what_for + " requires size >= " + std::to_string(min) + ", got " +
                     std::to_string(got)),
          got(got), min(min) {}
    std::int64_t got, min;
};

class InvalidProbabilityError : public GraphError {
public:
    explicit InvalidProbabilityError(double p)
        : GraphError("edge probability must be in [0, 1], got " + std::to_string(p)), p(p) {}
    double p;
};

// Malformed text input; line/column are 1-based, 0 when unknown.
class SyntaxError : public GraphError {
public:
    explicit SyntaxError(const std::string& what, int line = 0, int column = 0)
        : GraphError(what + detail::at_line(line) +
                     (column > 0 ? ", column " + std::to_string(column) : std::string{})),
          line(line), column(column) {}
    int line, column;
};

// Declared edge count disagrees with the number of edge lines.
class CountMismatchError : public GraphError {
public:
    CountMismatchError(std::int64_t declared, std::int64_t actual)
        : GraphError("edge list declares " + std::to_string(declared) + " edges but contains " +
                     std::to_string(actual)),
          declared(declared), actual(actual) {}
    std::int64_t declared, actual;
};

// 64-bit signed arithmetic overflowed; values are never silently wrapped.
class OverflowError : public GraphError {
public:
    OverflowError() : GraphError("64-bit integer overflow") {}
    explicit OverflowError(const std::string& what) : GraphError(what) {}
};

}  // namespace graphdex

#endif  // GRAPHDEX_ERRORS_HPP
