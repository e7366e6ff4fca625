#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace emvkit {

// Exact rational arithmetic for every numeric value in the repository.
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the canonical form the serialization relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

/// Parses "p" or "p/q" (q > 0 after normalization). Throws Error("BadRational").
Rat rat_parse(std::string_view text);

inline Rat rat(long long num, long long den = 1) {
    if (den < 0) { num = -num; den = -den; }
    return Rat(Int(num), Int(den));
}

/// r^e for e >= 0.
Rat rat_pow(const Rat& r, unsigned long e);

}  // namespace emvkit
