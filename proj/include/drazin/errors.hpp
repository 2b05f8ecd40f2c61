#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drazin {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure-constant table failed associativity or the unit laws.
/// Carries the offending basis triple (i, j, k) when associativity broke.
struct validation_error : error {
    validation_error(const std::string& what, std::size_t i_, std::size_t j_, std::size_t k_)
        : error(what), i(i_), j(j_), k(k_), has_triple(true) {}
    explicit validation_error(const std::string& what) : error(what) {}
    std::size_t i = 0, j = 0, k = 0;
    bool has_triple = false;
};

struct io_error : error {
    using error::error;
};

struct not_invertible : error {
    using error::error;
};

struct not_idempotent : error {
    using error::error;
};

struct zero_corner : error {
    using error::error;
};

struct not_strong_invertible : error {
    not_strong_invertible(const std::string& what, std::string reason_)
        : error(what), reason(std::move(reason_)) {}
    std::string reason;
};

struct not_weighted_strong_invertible : error {
    using error::error;
};

struct recipe_infeasible : error {
    using error::error;
};

/// An internal self-check failed.  Always a bug in this library, never a
/// user error.
struct defect_error : error {
    using error::error;
};

}  // namespace drazin
