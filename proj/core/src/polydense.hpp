#pragma once

#include <emb4/laurent.hpp>

#include <stdexcept>
#include <vector>

// dense ascending-coefficient polynomials over Q, internal to the library
namespace emb4::dense {

using Poly = std::vector<Rat>; // Poly[k] multiplies t^k; trailing zeros trimmed

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; } // deg(0) = -1

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const Rat& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    Poly r = a, q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
    while (deg(r) >= deg(b)) {
        Rat c = r.back() / b.back();
        int shift = deg(r) - deg(b);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline Poly monic(const Poly& a) {
    if (a.empty()) return a;
    return scale(a, Rat(1) / a.back());
}

inline Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// g = u*a + v*b with g = gcd(a,b) monic
struct ExtGcd {
    Poly g, u, v;
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = {Rat(1)}, u1 = {};
    Poly v0 = {}, v1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.empty()) return {r0, u0, v0};
    Rat lc = r0.back();
    return {monic(r0), scale(u0, Rat(1) / lc), scale(v0, Rat(1) / lc)};
}

inline Rat eval(const Poly& p, const Rat& x) {
    Rat r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
    return r;
}

// drops the t^lowest unit; the caller keeps the shift when it matters
inline Poly from_laurent(const LaurentPolynomial& p) {
    if (p.is_zero()) return {};
    int lo = p.lowest_exponent();
    Poly r(static_cast<std::size_t>(p.span()) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(e - lo)] = c;
    return r;
}

inline LaurentPolynomial to_laurent(const Poly& p, int shift = 0) {
    LaurentPolynomial r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r = r + LaurentPolynomial::monomial(static_cast<int>(i) + shift, p[i]);
    return r;
}

} // namespace emb4::dense
