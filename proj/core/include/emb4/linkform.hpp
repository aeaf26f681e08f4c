#pragma once

#include <emb4/abelian.hpp>
#include <map>
#include <optional>
#include <vector>

namespace emb4 {

// Symmetric Q/Z-valued pairing on a chosen cyclic decomposition of a finite group.
// linking_form_from_surgery always returns orders in invariant-factor (divisibility
// chain) form; direct sums keep the concatenated decomposition.
// Pairing entries are reduced fractions in [0,1).
struct LinkingForm {
    std::vector<Int> orders; // generator orders, each > 1
    RationalMatrix pairing;  // k x k, k = orders.size()

    Int order() const {
        Int o = 1;
        for (const auto& d : orders) o *= d;
        return o;
    }
    FiniteAbelianGroup group() const; // canonical invariant-factor form
};

struct HyperbolicWitness {
    std::vector<std::vector<Int>> generators_A; // coefficient vectors over the form's generators
    std::vector<std::vector<Int>> generators_B;
};

struct HyperbolicResult {
    bool hyperbolic = false;
    std::optional<HyperbolicWitness> witness;
};

// value of the pairing on coefficient vectors, reduced into [0,1)
Rat evaluate_pairing(const LinkingForm& f, const std::vector<Int>& x, const std::vector<Int>& y);

// form on coker(B) represented by B^{-1} mod Z, transported to invariant-factor
// generators; throws std::domain_error("singular") when det B = 0
LinkingForm linking_form_from_surgery(const IntegerMatrix& B);

// brute-force radical check; linking forms of closed oriented manifolds are nondegenerate
bool is_nondegenerate(const LinkingForm& f);

// orthogonal p-primary pieces; the direct sum over the map is isometric to f
std::map<Int, LinkingForm> prime_decompose(const LinkingForm& f);

// metabolizer split search, prime by prime
HyperbolicResult is_hyperbolic(const LinkingForm& f);

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b);
LinkingForm negate(const LinkingForm& f);

// form on Z_n with generator self-pairing a/n (n > 1)
LinkingForm cyclic_form(const Int& n, const Int& a);

} // namespace emb4
