#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rtt {

using Rational = mpq_class;

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and plain decimals such as "0.25".
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, std::int64_t max_den = 1000000000);

std::int64_t floor_to_int(const Rational& q);
std::int64_t ceil_to_int(const Rational& q);

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
    Rational r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
}

}  // namespace rtt
