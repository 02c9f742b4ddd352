#pragma once

#include <stdexcept>
#include <string>

namespace isolate {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input text (edge list, graph6, family spec).  line/offset are
// 1-based; 0 means "not applicable".
struct parse_error : error {
    parse_error(const std::string &msg, std::size_t line_no = 0, std::size_t column_no = 0)
        : error(format(msg, line_no, column_no)), line(line_no), column(column_no) {}

    std::size_t line;
    std::size_t column;

  private:
    static std::string format(const std::string &msg, std::size_t line_no, std::size_t column_no) {
        std::string out = "parse error";
        if (line_no) {
            out += " at line " + std::to_string(line_no);
            if (column_no) out += ", column " + std::to_string(column_no);
        }
        return out + ": " + msg;
    }
};

// An operation was called on a graph that violates its documented contract
// (e.g. a disconnected graph passed to a connected-only routine).
struct precondition_error : error {
    explicit precondition_error(const std::string &msg) : error("precondition violated: " + msg) {}
};

// Numeric argument out of range (negative count, size limit exceeded, ...).
struct parameter_error : error {
    explicit parameter_error(const std::string &msg) : error("bad parameter: " + msg) {}
};

} // namespace isolate
