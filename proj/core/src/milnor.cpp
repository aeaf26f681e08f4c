#include <emb4/factor.hpp>
#include <emb4/linalg.hpp>
#include <emb4/milnor.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace emb4 {

namespace {

// signature of the trace form on generators g_i = mult_i * e_i with block
// divisors block_i; empty blocks are dropped
Int block_form_signature(const TorsionPairing& tp, const std::vector<LaurentPolynomial>& mult,
                         const std::vector<int>& block_deg) {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t i = 0; i < block_deg.size(); ++i) {
        offset.push_back(total);
        total += static_cast<std::size_t>(block_deg[i]);
    }
    if (total == 0) return 0;
    RationalMatrix m(total, total);
    for (std::size_t i = 0; i < block_deg.size(); ++i)
        for (std::size_t j = 0; j < block_deg.size(); ++j) {
            if (block_deg[i] == 0 || block_deg[j] == 0) continue;
            LambdaFraction pij = tp.pairing[i][j] * (mult[i] * mult[j].conj());
            LambdaFraction pji = tp.pairing[j][i] * (mult[j] * mult[i].conj());
            for (int a = 0; a < block_deg[i]; ++a)
                for (int b = 0; b < block_deg[j]; ++b) {
                    Rat v = trotter_trace(pij * LaurentPolynomial::monomial(a - b - 1, 1)) +
                            trotter_trace(pji * LaurentPolynomial::monomial(b - a - 1, 1));
                    m(offset[i] + a, offset[j] + b) = v;
                }
        }
    return exact_signature(m);
}

// exact power-of-q division, returns the multiplicity and the cofactor
std::pair<int, LaurentPolynomial> strip_factor(const LaurentPolynomial& d,
                                               const LaurentPolynomial& q) {
    int nu = 0;
    LaurentPolynomial rest = d;
    for (;;) {
        LaurentPolynomial g = laurent_gcd(rest, q);
        if (g.span() == 0) break;
        rest = divide_exact(rest, q);
        ++nu;
    }
    return {nu, rest};
}

} // namespace

MilnorSignatures milnor_signatures(const TorsionPairing& tp) {
    std::size_t n = tp.divisors.size();
    if (tp.pairing.size() != n) throw std::invalid_argument("pairing size mismatch");
    for (const auto& row : tp.pairing)
        if (row.size() != n) throw std::invalid_argument("pairing size mismatch");
    for (const auto& d : tp.divisors) {
        if (d.is_zero()) throw std::domain_error("zero divisor");
        if (d.evaluate(1) == 0) throw std::domain_error("divisor shares factor with t-1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!tp.pairing[i][j].congruent(tp.pairing[j][i].conj()))
                throw std::invalid_argument("pairing is not conjugate-symmetric");
            if (!(tp.pairing[i][j] * tp.divisors[i]).is_polynomial())
                throw std::invalid_argument("divisor does not annihilate its row");
        }

    MilnorSignatures out;
    LaurentPolynomial tp1 = parse_laurent("t + 1");

    // restriction to the part where t+1 is invertible
    {
        std::vector<LaurentPolynomial> mult(n, LaurentPolynomial(Rat(1)));
        std::vector<int> deg(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto [m, rest] = strip_factor(tp.divisors[i], tp1);
            LaurentPolynomial u(Rat(1));
            for (int k = 0; k < m; ++k) u = u * tp1;
            mult[i] = u;
            deg[i] = rest.span();
        }
        out.sigma = block_form_signature(tp, mult, deg);
    }

    // one signature per self-reciprocal prime of prod d_i
    std::map<LaurentPolynomial, bool> primes;
    for (const auto& d : tp.divisors)
        for (const auto& [q, m] : factor_over_rationals(d).factors) {
            (void)m;
            if (equal_up_to_unit(q, q.conj())) primes[q] = true;
        }
    for (const auto& [q, flag] : primes) {
        (void)flag;
        std::vector<LaurentPolynomial> mult(n, LaurentPolynomial(Rat(1)));
        std::vector<int> deg(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto [nu, rest] = strip_factor(tp.divisors[i], q);
            if (nu == 0) continue;
            mult[i] = rest;
            deg[i] = q.span() * nu;
        }
        out.per_prime.emplace_back(q, block_form_signature(tp, mult, deg));
    }
    std::sort(out.per_prime.begin(), out.per_prime.end(), [](const auto& x, const auto& y) {
        if (x.first.span() != y.first.span()) return x.first.span() < y.first.span();
        return x.first < y.first;
    });
    return out;
}

} // namespace emb4
