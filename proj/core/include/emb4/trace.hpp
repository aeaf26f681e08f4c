#pragma once

#include <emb4/laurent.hpp>

namespace emb4 {

// num/den viewed modulo polynomials; reduced, den canonical and nonzero
class LambdaFraction {
  public:
    LambdaFraction() : num_(), den_(Rat(1)) {}
    LambdaFraction(LaurentPolynomial n, LaurentPolynomial d);

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    LambdaFraction operator+(const LambdaFraction& o) const;
    LambdaFraction operator-() const;
    LambdaFraction operator*(const LambdaFraction& o) const;
    LambdaFraction operator*(const LaurentPolynomial& p) const;
    LambdaFraction conj() const;

    // zero in the quotient, i.e. an honest polynomial
    bool is_polynomial() const { return den_.span() == 0; }
    bool congruent(const LambdaFraction& o) const { return (*this + -o).is_polynomial(); }

  private:
    LaurentPolynomial num_, den_;
    void reduce();
};

// canonical representative of n mod Q*Lambda with support inside [0, deg Q)
LaurentPolynomial window_reduce(LaurentPolynomial n, const LaurentPolynomial& q);

Rat trotter_trace(const LambdaFraction& x);

} // namespace emb4
