#ifndef GALREL_RATIONAL_HPP
#define GALREL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace galrel {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// True iff q is the square of a rational; the reduced num and den must both
// be perfect integer squares.
inline bool rat_is_square(const Rational& q) {
    if (q < 0) return false;
    Integer n = rat_num(q), d = rat_den(q);
    Integer rn = boost::multiprecision::sqrt(n);
    Integer rd = boost::multiprecision::sqrt(d);
    return rn * rn == n && rd * rd == d;
}

inline Rational rat_sqrt(const Rational& q) {
    return Rational(boost::multiprecision::sqrt(rat_num(q)),
                    boost::multiprecision::sqrt(rat_den(q)));
}

inline std::string rat_str(const Rational& q) { return q.str(); }

}  // namespace galrel

#endif
