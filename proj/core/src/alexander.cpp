#include <emb4/alexander.hpp>

#include <stdexcept>

namespace emb4 {

namespace {

int small_exponent(const Int& n) {
    if (n > 1000000 || n < -1000000) throw std::domain_error("exponent too large");
    return static_cast<int>(n);
}

// t^n - 1
LaurentPolynomial tn1(const Int& n) {
    return LaurentPolynomial::monomial(small_exponent(n), 1) - LaurentPolynomial(1);
}

LaurentPolynomial substitute_power(const LaurentPolynomial& p, const Int& k) {
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms())
        out = out + LaurentPolynomial::monomial(small_exponent(e * k), c);
    return out;
}

Int det2(const IntegerMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("gluing must be 2x2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

} // namespace

LaurentPolynomial alexander_disc(const SeifertPiece& p) {
    if (!(p.base == base_disc()) || (p.fibers.size() != 2 && p.fibers.size() != 3))
        throw std::invalid_argument("disc piece with two or three fibres required");
    if (p.fibers.size() == 2) {
        const Int& b = p.fibers[0].second;
        const Int& d = p.fibers[1].second;
        Int g = gcd(b, d);
        LaurentPolynomial num = tn1(lcm(b, d)) * tn1(1);
        LaurentPolynomial den = tn1(b / g) * tn1(d / g);
        return divide_exact(num, den);
    }
    Int L = 1;
    for (const auto& [a, b] : p.fibers) L = lcm(L, b);
    LaurentPolynomial num = tn1(L) * tn1(L) * tn1(1);
    LaurentPolynomial den(1);
    for (const auto& [a, b] : p.fibers) den = den * tn1(L / b);
    return divide_exact(num, den);
}

LaurentPolynomial splice_alexander(const LaurentPolynomial& dm, const LaurentPolynomial& dn,
                                   const Int& p, const Int& q) {
    if (p < 1 || q < 1) throw std::invalid_argument("positive multiplicities required");
    LaurentPolynomial num = substitute_power(dm, p) * substitute_power(dn, q) * tn1(1) * tn1(1);
    LaurentPolynomial den = tn1(p) * tn1(q);
    return divide_exact(num, den);
}

TorusLoopAlexander torus_loop_alexander(const Int& alpha, const Int& beta,
                                        const IntegerMatrix& gluing) {
    if (beta < 1 || gcd(alpha, beta) != 1) throw std::invalid_argument("fibre slope not reduced");
    if (det2(gluing) != -1) throw std::domain_error("wrong determinant");
    const Int& a = gluing(0, 0);
    const Int& b = gluing(0, 1);
    const Int& d = gluing(1, 1);
    LaurentPolynomial delta = LaurentPolynomial::monomial(2, Rat(beta)) +
                              LaurentPolynomial::monomial(1, Rat((d - a) * beta - b * alpha)) +
                              LaurentPolynomial(Rat(beta));
    int betti1 = delta.evaluate(1) == 0 ? 2 : 1;
    return {delta, betti1};
}

LaurentPolynomial fibered_closed_alexander(const SeifertPiece& p) {
    if (!(p.base == base_s2()) || p.fibers.size() < 3 || euler_number(p) != 0)
        throw std::domain_error("not fibered data");
    Int n = 1;
    for (const auto& [a, b] : p.fibers) n = lcm(n, b);
    LaurentPolynomial num = tn1(1) * tn1(1);
    for (std::size_t i = 0; i + 2 < p.fibers.size(); ++i) num = num * tn1(n);
    LaurentPolynomial den(1);
    for (const auto& [a, b] : p.fibers) den = den * tn1(n / b);
    return divide_exact(num, den);
}

LaurentPolynomial torus_bundle_alexander(const IntegerMatrix& monodromy) {
    if (det2(monodromy) != 1) throw std::invalid_argument("monodromy must be in SL(2,Z)");
    RationalMatrix r(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = Rat(monodromy(i, j));
    std::vector<Rat> c = characteristic_polynomial(r);
    return LaurentPolynomial::from_coeffs(c);
}

} // namespace emb4
