#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace retic {

// Exact rational scalar used by the whole algebraic core. Floating point is
// confined to the front tracer; nothing in the jet algebra may round.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) {
    return r.str();
}

inline int rat_sign(const Rat& r) {
    return r.sign();
}

inline double rat_double(const Rat& r) {
    return static_cast<double>(r);
}

} // namespace retic
