#include <emb4/laurent.hpp>

#include "polydense.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace emb4 {

void LaurentPolynomial::put(int e, const Rat& v) {
    if (v == 0)
        c_.erase(e);
    else
        c_[e] = v;
}

LaurentPolynomial::LaurentPolynomial(const Rat& constant) { put(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Rat& coeff) {
    LaurentPolynomial p;
    p.put(exponent, coeff);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coeffs(const std::vector<Rat>& coeffs, int lowest) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.put(lowest + static_cast<int>(i), coeffs[i]);
    return p;
}

Rat LaurentPolynomial::coefficient(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Rat(0) : it->second;
}

int LaurentPolynomial::lowest_exponent() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no support");
    return c_.begin()->first;
}

int LaurentPolynomial::highest_exponent() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no support");
    return c_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, v] : o.c_) r.put(e, r.coefficient(e) + v);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, v] : o.c_) r.put(e, r.coefficient(e) - v);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) r.put(e1 + e2, r.coefficient(e1 + e2) + v1 * v2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rat& s) const {
    LaurentPolynomial r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
}

Rat LaurentPolynomial::evaluate(const Rat& x) const {
    if (x == 0) throw std::domain_error("zero point");
    Rat r = 0;
    for (const auto& [e, v] : c_) {
        Rat p = 1;
        Rat base = e >= 0 ? x : Rat(1) / x;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        r += v * p;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::conj() const {
    LaurentPolynomial r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    LaurentPolynomial r;
    for (const auto& [e, v] : c_)
        if (e != 0) r.put(e - 1, v * Rat(e));
    return r;
}

LaurentPolynomial LaurentPolynomial::canonical() const {
    if (c_.empty()) return {};
    int lo = lowest_exponent();
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [e, v] : c_) {
        (void)e;
        den_lcm = lcm(den_lcm, denominator(v));
    }
    LaurentPolynomial r;
    for (const auto& [e, v] : c_) {
        Rat w = v * Rat(den_lcm);
        r.c_[e - lo] = w;
        num_gcd = gcd(num_gcd, numerator(w));
    }
    if (num_gcd > 1)
        for (auto& [e, v] : r.c_) {
            (void)e;
            v /= Rat(num_gcd);
        }
    if (r.c_.rbegin()->second < 0)
        for (auto& [e, v] : r.c_) {
            (void)e;
            v = -v;
        }
    return r;
}

std::string LaurentPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        Rat a = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1);
        if (e == 0) {
            out << to_string(a);
        } else {
            if (!unit_coeff) {
                out << to_string(a);
                if (denominator(a) != 1) out << "*";
            }
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    explicit Scanner(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    bool take(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        bool neg = take('-');
        if (!neg) take('+');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("expected digits at position " + std::to_string(i) +
                                        " in '" + s + "'");
        Int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
};

} // namespace

LaurentPolynomial parse_laurent(const std::string& text) {
    Scanner sc(text);
    LaurentPolynomial p;
    bool any = false;
    while (!sc.eof()) {
        int sign = 1;
        if (sc.take('-'))
            sign = -1;
        else if (sc.take('+')) {
            if (!any) throw std::invalid_argument("leading '+' in '" + text + "'");
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        }
        Rat coeff = 1;
        bool have_coeff = false;
        if (!sc.eof() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            Int num = sc.integer();
            Int den = 1;
            if (sc.take('/')) den = sc.integer();
            if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            coeff = Rat(num, den);
            have_coeff = true;
        }
        sc.take('*');
        int e = 0;
        if (!sc.eof() && sc.peek() == 't') {
            sc.take('t');
            e = 1;
            if (sc.take('^')) e = static_cast<int>(sc.integer());
        } else if (!have_coeff) {
            throw std::invalid_argument("expected term in '" + text + "'");
        }
        p.put(e, p.coefficient(e) + coeff * sign);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return p;
}

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.canonical() == b.canonical();
}

bool is_symmetric(const LaurentPolynomial& p) { return equal_up_to_unit(p, p.conj()); }

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    auto [q, r] = dense::divmod(dense::from_laurent(a), dense::from_laurent(b));
    if (!r.empty()) throw std::domain_error("non-exact division");
    return dense::to_laurent(q, a.lowest_exponent() - b.lowest_exponent());
}

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    return dense::to_laurent(dense::gcd(dense::from_laurent(a), dense::from_laurent(b))).canonical();
}

} // namespace emb4
