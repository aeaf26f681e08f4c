#pragma once

#include <emb4/trace.hpp>

#include <vector>

namespace emb4 {

// torsion module in diagonal form with a conjugate-symmetric fraction pairing
struct TorsionPairing {
    std::vector<LaurentPolynomial> divisors;            // d_i, nonzero
    std::vector<std::vector<LambdaFraction>> pairing;   // <e_i, e_j>, conj-symmetric
};

struct MilnorSignatures {
    Int sigma = 0;                                        // away from t + 1
    std::vector<std::pair<LaurentPolynomial, Int>> per_prime; // self-reciprocal primes
};

// signature of the symmetrized trace form {x,y} = tr<x,ty> + tr<y,tx>,
// restricted to where t+1 acts invertibly, plus one signature per
// self-reciprocal prime factor of prod d_i.
// throws domain_error when some divisor vanishes at 1.
MilnorSignatures milnor_signatures(const TorsionPairing& tp);

} // namespace emb4
