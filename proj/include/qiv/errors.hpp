#pragma once

#include <stdexcept>
#include <string>

namespace qiv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_denominator_error : error {
    using error::error;
};

struct not_prime_error : error {
    using error::error;
};

struct basis_mismatch_error : error {
    using error::error;
};

struct pole_at_one_error : error {
    using error::error;
};

struct not_in_rectangle_error : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

struct too_large_error : error {
    using error::error;
};

struct insufficient_precision_error : error {
    using error::error;
};

struct invalid_spec_error : error {
    using error::error;
};

struct domain_violation_error : error {
    using error::error;
};

struct field_division_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace qiv
