// Exact rational numbers (arbitrary precision) plus parsing/formatting.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ckalg {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q" with q > 0, p carrying the sign; "0/1" for zero.
inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", optional leading +/-. No whitespace, no floats.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw input_error("not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace ckalg
