#include <emb4/factor.hpp>
#include <emb4/trace.hpp>

#include "polydense.hpp"

#include <stdexcept>

namespace emb4 {

LambdaFraction::LambdaFraction(LaurentPolynomial n, LaurentPolynomial d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void LambdaFraction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPolynomial(Rat(1));
        return;
    }
    LaurentPolynomial g = laurent_gcd(num_, den_);
    if (g.span() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    // push the denominator's unit into the numerator
    LaurentPolynomial dc = den_.canonical();
    LaurentPolynomial u = divide_exact(den_, dc); // constant times t^k
    Rat c = u.coefficient(u.lowest_exponent());
    num_ = (num_ * LaurentPolynomial::monomial(-u.lowest_exponent(), 1)) * (Rat(1) / c);
    den_ = dc;
}

LambdaFraction LambdaFraction::operator+(const LambdaFraction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

LambdaFraction LambdaFraction::operator-() const {
    LambdaFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

LambdaFraction LambdaFraction::operator*(const LambdaFraction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

LambdaFraction LambdaFraction::operator*(const LaurentPolynomial& p) const {
    return {num_ * p, den_};
}

LambdaFraction LambdaFraction::conj() const { return {num_.conj(), den_.conj()}; }

LaurentPolynomial window_reduce(LaurentPolynomial n, const LaurentPolynomial& q) {
    if (q.is_zero() || q.lowest_exponent() != 0)
        throw std::domain_error("window modulus must be an ordinary polynomial");
    int d = q.highest_exponent();
    if (d == 0) return {};
    Rat top = q.coefficient(d), bot = q.coefficient(0);
    while (!n.is_zero() && n.highest_exponent() >= d) {
        int h = n.highest_exponent();
        n = n - LaurentPolynomial::monomial(h - d, n.coefficient(h) / top) * q;
    }
    while (!n.is_zero() && n.lowest_exponent() < 0) {
        int l = n.lowest_exponent();
        n = n - LaurentPolynomial::monomial(l, n.coefficient(l) / bot) * q;
    }
    return n;
}

namespace {

// derivative of n/q at t = 1
Rat derivative_at_one(const LaurentPolynomial& n, const LaurentPolynomial& q) {
    Rat n1 = n.is_zero() ? Rat(0) : n.evaluate(1);
    Rat dn1 = n.derivative().is_zero() ? Rat(0) : n.derivative().evaluate(1);
    Rat q1 = q.evaluate(1);
    Rat dq1 = q.derivative().is_zero() ? Rat(0) : q.derivative().evaluate(1);
    return (dn1 * q1 - n1 * dq1) / (q1 * q1);
}

struct Piece {
    LaurentPolynomial num;
    LaurentPolynomial den; // q^e, ordinary, nonzero constant term
    bool skip;             // q associate to t - 1
};

// splits n / prod(dens) into one piece per prime power by Bezout pairs
void split_pieces(const LaurentPolynomial& n,
                  const std::vector<std::pair<LaurentPolynomial, bool>>& dens, std::size_t lo,
                  std::size_t hi, std::vector<Piece>& out) {
    if (hi - lo == 1) {
        out.push_back({window_reduce(n, dens[lo].first), dens[lo].first, dens[lo].second});
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    LaurentPolynomial a(Rat(1)), b(Rat(1));
    for (std::size_t i = lo; i < mid; ++i) a = a * dens[i].first;
    for (std::size_t i = mid; i < hi; ++i) b = b * dens[i].first;
    auto eg = dense::ext_gcd(dense::from_laurent(a), dense::from_laurent(b));
    if (dense::deg(eg.g) != 0) throw std::logic_error("prime power pieces are not coprime");
    // n/(ab) = n*v/a + n*u/b with u*a + v*b = 1
    LaurentPolynomial nn = window_reduce(n, a * b);
    LaurentPolynomial na = window_reduce(nn * dense::to_laurent(eg.v), a);
    LaurentPolynomial nb = window_reduce(nn * dense::to_laurent(eg.u), b);
    split_pieces(na, dens, lo, mid, out);
    split_pieces(nb, dens, mid, hi, out);
}

} // namespace

Rat trotter_trace(const LambdaFraction& x) {
    if (x.num().is_zero() || x.is_polynomial()) return 0;
    Factorization fac = factor_over_rationals(x.den());
    // den is canonical so the unit and shift fold into the numerator
    LaurentPolynomial n =
        (x.num() * LaurentPolynomial::monomial(-fac.shift, 1)) * (Rat(1) / fac.unit);
    std::vector<std::pair<LaurentPolynomial, bool>> dens;
    LaurentPolynomial tm1 = parse_laurent("t - 1");
    for (const auto& [q, e] : fac.factors) {
        LaurentPolynomial qe(Rat(1));
        for (int i = 0; i < e; ++i) qe = qe * q;
        dens.emplace_back(qe, equal_up_to_unit(q, tm1));
    }
    std::vector<Piece> pieces;
    split_pieces(n, dens, 0, dens.size(), pieces);
    Rat total = 0;
    for (const auto& piece : pieces) {
        if (piece.skip || piece.num.is_zero()) continue;
        total += derivative_at_one(piece.num, piece.den);
    }
    return total;
}

} // namespace emb4
