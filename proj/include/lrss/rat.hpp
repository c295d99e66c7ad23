#pragma once
// Exact rational arithmetic for bound values and the cycle-packing LP.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lrss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace lrss
