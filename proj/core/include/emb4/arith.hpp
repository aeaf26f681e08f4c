#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace emb4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Euclidean remainder in [0, |m|)
inline Int mod_euclid(const Int& a, const Int& m) {
    Int mm = abs(m);
    Int r = a % mm;
    if (r < 0) r += mm;
    return r;
}

// floor and ceil of a/b for b != 0
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
inline Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

// g = ax + by
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// fractional representative of r in [0,1)
inline Rat frac_mod1(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    return Rat(mod_euclid(n, d), d);
}

// representative of r in [0,2): used for Q/2Z values
inline Rat frac_mod2(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    return Rat(mod_euclid(n, 2 * d), d);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}
inline bool is_perfect_square(const Int& n) {
    Int r;
    return is_perfect_square(n, r);
}

inline bool is_square_rational(const Rat& r) {
    if (r < 0) return false;
    return is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline int sign(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sign(const Rat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

} // namespace emb4
