#pragma once

#include <emb4/arith.hpp>

#include <map>
#include <string>
#include <vector>

namespace emb4 {

// Finitely supported map exponent -> rational. No zero coefficients are stored.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Rat& constant);
    static LaurentPolynomial monomial(int exponent, const Rat& coeff);
    // coeffs[k] is the coefficient of t^(lowest + k)
    static LaurentPolynomial from_coeffs(const std::vector<Rat>& coeffs, int lowest = 0);

    const std::map<int, Rat>& terms() const { return c_; }
    Rat coefficient(int exponent) const;
    bool is_zero() const { return c_.empty(); }
    int lowest_exponent() const;  // requires nonzero
    int highest_exponent() const; // requires nonzero
    // degree of the ordinary polynomial t^(-lowest) * p
    int span() const { return is_zero() ? 0 : highest_exponent() - lowest_exponent(); }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const Rat& s) const;
    bool operator==(const LaurentPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPolynomial& o) const { return c_ != o.c_; }
    bool operator<(const LaurentPolynomial& o) const { return c_ < o.c_; }

    Rat evaluate(const Rat& x) const; // throws on x = 0
    LaurentPolynomial conj() const;   // t -> t^-1
    LaurentPolynomial derivative() const;

    // unit orbit representative: lowest exponent 0, integer coefficients with
    // content 1, positive leading coefficient
    LaurentPolynomial canonical() const;

    std::string str() const;

  private:
    std::map<int, Rat> c_;
    void put(int e, const Rat& v);
    friend LaurentPolynomial parse_laurent(const std::string&);
};

LaurentPolynomial parse_laurent(const std::string& text);

bool equal_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b);
bool is_symmetric(const LaurentPolynomial& p);

// exact quotient a/b; throws domain_error("non-exact division") on a remainder
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// canonical gcd, zero polynomials permitted
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

} // namespace emb4
