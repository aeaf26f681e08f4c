#pragma once

#include <emb4/matrix.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace emb4 {

// U*A*V = S with U,V unimodular, S diagonal, d1 | d2 | ... | dr, all >= 0.
struct SmithDecomposition {
    IntegerMatrix S, U, V;
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        std::size_t n = std::min(S.rows(), S.cols());
        for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
        return d;
    }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& A);

// #positive - #negative of the spectrum, by symmetric congruence; exact.
int exact_signature(const RationalMatrix& Q);

// Affine solution set of A x = b over GF(2).
struct Mod2Solution {
    bool consistent = false;
    std::vector<std::uint8_t> particular;               // one solution
    std::vector<std::vector<std::uint8_t>> kernel;      // basis of homogeneous solutions
    std::size_t count_log2() const { return kernel.size(); }
};

Mod2Solution solve_mod2(const IntegerMatrix& A, const std::vector<Int>& b);

// throws std::domain_error("singular") if det = 0
RationalMatrix rational_inverse(const IntegerMatrix& A);
RationalMatrix rational_inverse(const RationalMatrix& A);

Int determinant(const IntegerMatrix& A);

// Basis of { x rational : A x = 0 }, one column vector per basis element.
std::vector<std::vector<Rat>> rational_kernel(const RationalMatrix& A);

// Characteristic polynomial coefficients c0..cn of A (monic, c[n] = 1),
// det(tI - A) = sum c[k] t^k. Faddeev-LeVerrier, exact.
std::vector<Rat> characteristic_polynomial(const RationalMatrix& A);

} // namespace emb4
