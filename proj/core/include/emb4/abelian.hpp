#pragma once

#include <emb4/linalg.hpp>
#include <string>
#include <vector>

namespace emb4 {

// invariant factor form: Z^free_rank + Z_d1 + ... + Z_dk with d1 | d2 | ..., di > 1
struct FiniteAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    Int torsion_order() const {
        Int o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    // order of G tensor Z/2
    Int mod2_order() const {
        Int o = 1;
        for (std::size_t i = 0; i < free_rank; ++i) o *= 2;
        for (const auto& d : invariant_factors)
            if (d % 2 == 0) o *= 2;
        return o;
    }
    bool operator==(const FiniteAbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    std::string str() const;
};

// cokernel of A acting on Z^rows by its columns
FiniteAbelianGroup group_from_presentation(const IntegerMatrix& A);

// parse of the str() format, e.g. "Z^2+Z_2+Z_6"; throws std::invalid_argument
FiniteAbelianGroup parse_group(const std::string& text);

// true iff the torsion order is a perfect square (free rank must be 0)
bool hyperbolic_square_test(const FiniteAbelianGroup& g);

} // namespace emb4
