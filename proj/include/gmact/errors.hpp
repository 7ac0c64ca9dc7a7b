#pragma once
#include <stdexcept>
#include <string>

namespace gmact {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed polynomial strings, invalid specs, schema violations.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

struct parse_error : input_error {
    size_t line = 1;
    size_t column = 0;
    parse_error(const std::string& what, size_t line_, size_t col_)
        : input_error(what + " (line " + std::to_string(line_) + ", column " +
                      std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

struct ring_mismatch : error {
    explicit ring_mismatch(const std::string& what) : error(what) {}
};

/// Configurable S-pair budget exceeded; a resource problem, never a wrong answer.
struct resource_limit : error {
    explicit resource_limit(const std::string& what) : error(what) {}
};

} // namespace gmact
