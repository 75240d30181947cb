#pragma once

#include <stdexcept>
#include <string>

namespace zc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The minimal recurrence of the supplied integer terms is not integer-monic,
// so the terms are not a window of an element of H(Z).
struct non_integral_recurrence : error {
    using error::error;
};

// A truncated series does not carry enough coefficients for the request.
struct insufficient_order : error {
    using error::error;
};

// series_log needs constant term 1, series_exp needs constant term 0.
struct bad_constant_term : error {
    using error::error;
};

// An operation that is closed on integral elements produced a non-integral
// result; signals an internal bug, surfaced for test harnesses.
struct integrality_violation : error {
    using error::error;
};

// A Hankel factor sequence failed recurrence certification.
struct decomposition_unverified : error {
    using error::error;
};

struct not_prime : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

struct not_divisible : error {
    using error::error;
};

}  // namespace zc
