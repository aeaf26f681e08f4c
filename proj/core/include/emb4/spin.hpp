#pragma once

#include <emb4/abelian.hpp>
#include <emb4/plumbing.hpp>

#include <vector>

namespace emb4 {

// All 0/1 solutions of B c = diag(B) over GF(2); one per spin structure when
// the presented manifold is a rational homology sphere.
std::vector<std::vector<Int>> characteristic_sublinks(const IntegerMatrix& B);

// (sig B - c^T B c)/8 reduced into [0, 2); throws "not characteristic" unless
// B c = diag(B) mod 2.
Rat rochlin_value(const IntegerMatrix& B, const std::vector<Int>& c);

// rochlin_value over every characteristic vector, sorted.
std::vector<Rat> rochlin_vector(const FramedLinkGraph& g);

// Integral lift of the Rochlin invariant for a plumbing with unimodular
// linking matrix, evaluated on the unique 0/1 characteristic vector; throws
// "not a homology sphere" when |det B| != 1.
Int mu_bar_plumbing(const FramedLinkGraph& g);

// Additivity along splices.
Int mu_bar_splice(const std::vector<Int>& values);

// Square-order and zero-count test on a Rochlin vector: |H_1 tensor Z_2|
// must be a square l^2 with at least 2l-1 entries congruent to 0 mod 2.
bool vec_mu_test(const FiniteAbelianGroup& g, const std::vector<Rat>& mu);

// Same counting test on a d-invariant vector indexed by the full group:
// |G| = k^2 with at least 2k-1 zero entries.
bool vec_d_test(const FiniteAbelianGroup& g, const std::vector<Rat>& d);

} // namespace emb4
