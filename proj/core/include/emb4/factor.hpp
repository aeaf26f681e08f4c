#pragma once

#include <emb4/laurent.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace emb4 {

// p = unit * t^shift * prod factors[i]^mult[i], factors canonical irreducible
struct Factorization {
    Rat unit = 1;
    int shift = 0;
    std::vector<std::pair<LaurentPolynomial, int>> factors;
};

Factorization factor_over_rationals(const LaurentPolynomial& p);
LaurentPolynomial reconstruct(const Factorization& f);

LaurentPolynomial cyclotomic_polynomial(int n);

struct KawauchiResult {
    bool passes = false;
    std::optional<LaurentPolynomial> witness; // p ~ witness * conj(witness) up to unit
    std::string reason;
};

// passes iff every self-reciprocal irreducible factor has even multiplicity and
// reciprocal partners occur with equal multiplicity
KawauchiResult kawauchi_test(const LaurentPolynomial& p);

// whether ((a-d) + b*alpha/beta)^2 - 4 is a rational square
bool rational_square_criterion(const Int& a, const Int& b, const Int& d, const Int& alpha,
                               const Int& beta);

} // namespace emb4
