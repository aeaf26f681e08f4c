#include <emb4/spin.hpp>

#include <algorithm>
#include <stdexcept>

namespace emb4 {

namespace {

std::vector<Int> diagonal_of(const IntegerMatrix& B) {
    std::vector<Int> d(B.rows());
    for (std::size_t i = 0; i < B.rows(); ++i) d[i] = B(i, i);
    return d;
}

bool is_characteristic(const IntegerMatrix& B, const std::vector<Int>& c) {
    if (c.size() != B.rows()) return false;
    for (std::size_t i = 0; i < B.rows(); ++i) {
        Int s = -B(i, i);
        for (std::size_t j = 0; j < B.cols(); ++j) s += B(i, j) * c[j];
        if (mod_euclid(s, 2) != 0) return false;
    }
    return true;
}

Int quadratic_term(const IntegerMatrix& B, const std::vector<Int>& c) {
    Int q = 0;
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) q += c[i] * B(i, j) * c[j];
    return q;
}

int signature_of(const IntegerMatrix& B) {
    RationalMatrix Q(B.rows(), B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) Q(i, j) = Rat(B(i, j));
    return exact_signature(Q);
}

} // namespace

std::vector<std::vector<Int>> characteristic_sublinks(const IntegerMatrix& B) {
    if (!B.is_symmetric()) throw std::invalid_argument("symmetric matrix required");
    Mod2Solution s = solve_mod2(B, diagonal_of(B));
    // the diagonal is always in the image of a symmetric matrix over GF(2)
    if (!s.consistent) throw std::logic_error("characteristic system inconsistent");
    if (s.kernel.size() > 24) throw std::domain_error("too many spin structures");
    std::size_t n = B.rows();
    std::vector<std::vector<Int>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << s.kernel.size()); ++mask) {
        std::vector<Int> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = s.particular[i];
        for (std::size_t k = 0; k < s.kernel.size(); ++k)
            if (mask >> k & 1)
                for (std::size_t i = 0; i < n; ++i) c[i] = (c[i] + s.kernel[k][i]) % 2;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat rochlin_value(const IntegerMatrix& B, const std::vector<Int>& c) {
    if (!is_characteristic(B, c)) throw std::domain_error("not characteristic");
    Int num = signature_of(B) - quadratic_term(B, c);
    return frac_mod2(num, 8);
}

std::vector<Rat> rochlin_vector(const FramedLinkGraph& g) {
    IntegerMatrix B = g.linking_matrix();
    std::vector<Rat> out;
    for (const auto& c : characteristic_sublinks(B)) out.push_back(rochlin_value(B, c));
    std::sort(out.begin(), out.end());
    return out;
}

Int mu_bar_plumbing(const FramedLinkGraph& g) {
    IntegerMatrix B = g.linking_matrix();
    if (abs(determinant(B)) != 1) throw std::domain_error("not a homology sphere");
    std::vector<std::vector<Int>> cs = characteristic_sublinks(B);
    if (cs.size() != 1) throw std::logic_error("Wu vector not unique");
    Int num = signature_of(B) - quadratic_term(B, cs[0]);
    if (mod_euclid(num, 8) != 0) throw std::logic_error("signature defect not divisible by 8");
    return num / 8;
}

Int mu_bar_splice(const std::vector<Int>& values) {
    Int s = 0;
    for (const Int& v : values) s += v;
    return s;
}

namespace {

bool square_zero_count(const Int& order, const std::vector<Rat>& v,
                       bool (*is_zero)(const Rat&)) {
    if (!is_perfect_square(order)) return false;
    Int l = 0;
    while ((l + 1) * (l + 1) <= order) ++l;
    Int zeros = 0;
    for (const Rat& x : v)
        if (is_zero(x)) ++zeros;
    return zeros >= 2 * l - 1;
}

bool zero_mod2(const Rat& x) { return frac_mod2(numerator(x), denominator(x)) == 0; }
bool zero_exact(const Rat& x) { return x == 0; }

} // namespace

bool vec_mu_test(const FiniteAbelianGroup& g, const std::vector<Rat>& mu) {
    if (Int(mu.size()) != g.mod2_order()) throw std::invalid_argument("length mismatch");
    return square_zero_count(g.mod2_order(), mu, zero_mod2);
}

bool vec_d_test(const FiniteAbelianGroup& g, const std::vector<Rat>& d) {
    if (g.free_rank != 0 || Int(d.size()) != g.torsion_order())
        throw std::invalid_argument("length mismatch");
    return square_zero_count(g.torsion_order(), d, zero_exact);
}

} // namespace emb4
