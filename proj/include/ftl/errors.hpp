#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftl {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct syntax_error : error {
    syntax_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct illegal_symbol_error : error {
    illegal_symbol_error(const std::string& symbol, const std::string& ring, std::size_t offset)
        : error("symbol '" + symbol + "' is not available in ring '" + ring + "' (at byte " +
                std::to_string(offset) + ")"),
          symbol(symbol),
          offset(offset) {}
    std::string symbol;
    std::size_t offset;
};

struct variable_mismatch_error : error {
    using error::error;
};

struct not_symmetric_error : error {
    using error::error;
};

struct not_composable_error : error {
    using error::error;
};

struct not_invertible_error : error {
    using error::error;
};

struct degree_overflow_error : error {
    using error::error;
};

struct exponent_overflow_error : error {
    using error::error;
};

// A degree-by-degree solve hit an inconsistent linear system.
struct no_solution_error : error {
    no_solution_error(const std::string& what, std::string system)
        : error(what), system(std::move(system)) {}
    std::string system;
};

// A degree-by-degree solve was underdetermined at some degree.
struct non_unique_solution_error : error {
    non_unique_solution_error(const std::string& what, std::string system)
        : error(what), system(std::move(system)) {}
    std::string system;
};

struct repair_failed_error : error {
    using error::error;
};

// A value computed two independent ways disagreed.
struct mismatch_error : error {
    using error::error;
};

}  // namespace ftl
