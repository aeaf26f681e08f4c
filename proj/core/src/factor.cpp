#include <emb4/factor.hpp>

#include "polydense.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace emb4 {

namespace {

using dense::Poly;
using ZPoly = std::vector<Int>; // ascending, trimmed, exact integers

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Poly to_q(const ZPoly& p) {
    Poly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
    return r;
}

ZPoly to_z(const Poly& p) {
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!is_integer(p[i])) throw std::logic_error("non-integer coefficient");
        r[i] = numerator(p[i]);
    }
    return r;
}

// primitive part with positive leading coefficient
ZPoly primitive(const ZPoly& p) {
    ZPoly r = p;
    ztrim(r);
    if (r.empty()) return r;
    Int g = 0;
    for (const auto& c : r) g = gcd(g, c);
    if (r.back() < 0) g = -g;
    for (auto& c : r) c /= g;
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact integer quotient, or nothing if b does not divide a
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
    auto [q, r] = dense::divmod(to_q(a), to_q(b));
    if (!r.empty()) return std::nullopt;
    for (const auto& c : q)
        if (!is_integer(c)) return std::nullopt;
    return to_z(q);
}

// ---- arithmetic mod a small prime, coefficients in [0,p) as long long ----

using PPoly = std::vector<long long>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long long inv_mod(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

PPoly pmul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

std::pair<PPoly, PPoly> pdivmod(const PPoly& a, const PPoly& b, long long p) {
    PPoly r = a, q;
    if (static_cast<int>(a.size()) >= static_cast<int>(b.size()))
        q.assign(a.size() - b.size() + 1, 0);
    long long binv = inv_mod(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        long long c = r.back() * binv % p;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = ((r[shift + i] - c * b[i]) % p + p) % p;
        ptrim(r);
        if (r.size() < b.size()) break;
    }
    ptrim(q);
    return {q, r};
}

PPoly pmod(const PPoly& a, const PPoly& b, long long p) { return pdivmod(a, b, p).second; }

PPoly pmonic(const PPoly& a, long long p) {
    if (a.empty()) return a;
    long long s = inv_mod(a.back(), p);
    PPoly r = a;
    for (auto& c : r) c = c * s % p;
    return r;
}

PPoly pgcd(PPoly a, PPoly b, long long p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

PPoly pderiv(const PPoly& f, long long p) {
    if (f.size() <= 1) return {};
    PPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * (long long)(i % p)) % p;
    ptrim(r);
    return r;
}

PPoly reduce_mod_p(const ZPoly& f, long long p) {
    PPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = static_cast<long long>(mod_euclid(f[i], Int(p)));
    ptrim(r);
    return r;
}

// x^p mod f by square and multiply
PPoly frobenius_of_x(const PPoly& f, long long p) {
    PPoly base = {0, 1}, acc = {1};
    long long e = p;
    base = pmod(base, f, p);
    while (e > 0) {
        if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Berlekamp splitting of a monic squarefree f mod p into monic irreducibles
std::vector<PPoly> berlekamp(const PPoly& f, long long p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // rows of Q: coefficients of x^(i*p) mod f
    std::vector<PPoly> rows(n);
    PPoly xp = frobenius_of_x(f, p);
    PPoly cur = {1};
    for (int i = 0; i < n; ++i) {
        rows[i] = cur;
        rows[i].resize(n, 0);
        cur = pmod(pmul(cur, xp, p), f, p);
    }
    // kernel of (Q - I)^T gives the fixed algebra
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[j][i] = (rows[i][j] - (i == j ? 1 : 0) + p) % p;
        }
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        long long s = inv_mod(m[rank][col], p);
        for (int c = 0; c < n; ++c) m[rank][c] = m[rank][c] * s % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            long long c0 = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] = ((m[r][c] - c0 * m[rank][c]) % p + p) % p;
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        PPoly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = (p - m[r][col]) % p;
        ptrim(v);
        basis.push_back(v);
    }
    std::size_t target = basis.size();
    std::vector<PPoly> factors = {f};
    if (target <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() == target) break;
        if (v.size() <= 1) continue; // the constants split nothing
        std::vector<PPoly> next;
        for (const auto& u : factors) {
            PPoly rem = u;
            PPoly vm = pmod(v, u, p);
            for (long long s = 0; s < p && rem.size() > 1; ++s) {
                PPoly shifted = vm;
                if (shifted.empty()) shifted = {0};
                shifted[0] = ((shifted[0] - s) % p + p) % p;
                ptrim(shifted);
                PPoly g = pgcd(rem, shifted, p);
                if (g.size() > 1 && g.size() < rem.size()) {
                    next.push_back(g);
                    rem = pdivmod(rem, g, p).first;
                }
            }
            next.push_back(rem);
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Hensel lifting mod p^k, coefficients as exact integers in [0,N) ----

ZPoly nreduce(const ZPoly& f, const Int& n) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_euclid(f[i], n);
    ztrim(r);
    return r;
}

ZPoly nmul(const ZPoly& a, const ZPoly& b, const Int& n) { return nreduce(zmul(a, b), n); }

ZPoly from_ppoly(const PPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// lifts f = g*h (mod p) with f,g,h monic to the same congruence mod n = p^e
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const PPoly& g0, const PPoly& h0, long long p,
                                    const Int& n) {
    PPoly s, t;
    {
        // Bezout mod p: s*g0 + t*h0 = 1, coprime since f is squarefree mod p
        PPoly a = g0, b = h0;
        PPoly u0 = {1}, u1 = {}, v0 = {}, v1 = {1};
        while (!b.empty()) {
            auto [q, r] = pdivmod(a, b, p);
            PPoly nu = u0, nv = v0;
            PPoly qu = pmul(q, u1, p), qv = pmul(q, v1, p);
            nu.resize(std::max(nu.size(), qu.size()), 0);
            nv.resize(std::max(nv.size(), qv.size()), 0);
            for (std::size_t i = 0; i < qu.size(); ++i) nu[i] = ((nu[i] - qu[i]) % p + p) % p;
            for (std::size_t i = 0; i < qv.size(); ++i) nv[i] = ((nv[i] - qv[i]) % p + p) % p;
            ptrim(nu);
            ptrim(nv);
            a = std::move(b);
            b = std::move(r);
            u0 = u1;
            u1 = std::move(nu);
            v0 = v1;
            v1 = std::move(nv);
        }
        long long lead = inv_mod(a.back(), p);
        for (auto& c : u0) c = c * lead % p;
        for (auto& c : v0) c = c * lead % p;
        s = u0;
        t = v0;
    }
    ZPoly g = from_ppoly(g0), h = from_ppoly(h0);
    Int modulus = p;
    while (modulus < n) {
        Int next = modulus * p;
        // e = (f - g*h)/modulus mod p
        ZPoly prod = zmul(g, h);
        ZPoly err(std::max(f.size(), prod.size()), Int(0));
        for (std::size_t i = 0; i < f.size(); ++i) err[i] += f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        PPoly e(err.size());
        for (std::size_t i = 0; i < err.size(); ++i)
            e[i] = static_cast<long long>(mod_euclid(err[i] / modulus, Int(p)));
        ptrim(e);
        auto [q, u] = pdivmod(pmul(t, e, p), g0, p);
        PPoly w = pmul(s, e, p);
        PPoly qh = pmul(q, h0, p);
        w.resize(std::max(w.size(), qh.size()), 0);
        for (std::size_t i = 0; i < qh.size(); ++i) w[i] = (w[i] + qh[i]) % p;
        ptrim(w);
        g.resize(std::max(g.size(), u.size()), Int(0));
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = mod_euclid(g[i] + modulus * u[i], next);
        for (std::size_t i = u.size(); i < g.size(); ++i) g[i] = mod_euclid(g[i], next);
        h.resize(std::max(h.size(), w.size()), Int(0));
        for (std::size_t i = 0; i < w.size(); ++i) h[i] = mod_euclid(h[i] + modulus * w[i], next);
        for (std::size_t i = w.size(); i < h.size(); ++i) h[i] = mod_euclid(h[i], next);
        ztrim(g);
        ztrim(h);
        modulus = next;
    }
    return {g, h};
}

// lifts the modular factorization fs of monic F from mod p to mod n
std::vector<ZPoly> hensel_tree(const ZPoly& F, const std::vector<PPoly>& fs, long long p,
                               const Int& n) {
    if (fs.size() == 1) return {nreduce(F, n)};
    std::size_t half = fs.size() / 2;
    std::vector<PPoly> left(fs.begin(), fs.begin() + half), right(fs.begin() + half, fs.end());
    PPoly g0 = {1}, h0 = {1};
    for (const auto& f : left) g0 = pmul(g0, f, p);
    for (const auto& f : right) h0 = pmul(h0, f, p);
    auto [g, h] = hensel_pair(F, g0, h0, p, n);
    auto a = hensel_tree(g, left, p, n);
    auto b = hensel_tree(h, right, p, n);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

ZPoly symmetric_rep(const ZPoly& f, const Int& n) {
    ZPoly r = f;
    for (auto& c : r) {
        c = mod_euclid(c, n);
        if (2 * c > n) c -= n;
    }
    ztrim(r);
    return r;
}

Int isqrt_ceil(const Int& v) {
    if (v <= 0) return 0;
    Int x = 1;
    while (x * x < v) x <<= 1;
    Int lo = x >> 1, hi = x;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

// monic squarefree primitive integer input, returns monic integer irreducibles
std::vector<ZPoly> zassenhaus_monic(const ZPoly& input) {
    std::vector<ZPoly> out;
    ZPoly f = input;
    if (zdeg(f) <= 1) {
        if (zdeg(f) >= 1) out.push_back(f);
        return out;
    }
    // splitting prime: f stays squarefree of full degree mod p
    long long p = 0;
    for (long long cand = 3; cand < 10000; cand += 2) {
        bool prime = true;
        for (long long d = 3; d * d <= cand; d += 2)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        PPoly fp = reduce_mod_p(f, cand);
        if (zdeg(ZPoly(fp.begin(), fp.end())) != zdeg(f)) continue;
        if (pgcd(fp, pderiv(fp, cand), cand).size() != 1) continue;
        p = cand;
        break;
    }
    if (p == 0) throw std::runtime_error("no splitting prime below 10000");
    PPoly fp = pmonic(reduce_mod_p(f, p), p);
    std::vector<PPoly> modular = berlekamp(fp, p);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const PPoly& a, const PPoly& b) { return a.size() < b.size(); });
    // coefficient bound for monic factors, then the modulus past twice that
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int bound = (Int(1) << zdeg(f)) * (isqrt_ceil(norm2) + 1);
    Int n = p;
    while (n < 2 * bound + 1) n *= p;
    std::vector<ZPoly> lifted = hensel_tree(f, modular, p, n);
    std::vector<int> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i);
    std::size_t d = 1;
    while (2 * d <= remaining.size()) {
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            ZPoly cand = {Int(1)};
            for (std::size_t i : idx) cand = nmul(cand, lifted[remaining[i]], n);
            cand = symmetric_rep(cand, n);
            if (!cand.empty() && cand[0] != 0 && f[0] % cand[0] == 0) {
                auto q = zdivide(f, cand);
                if (q) {
                    out.push_back(cand);
                    f = *q;
                    std::vector<int> keep;
                    for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                        if (j < d && idx[j] == i)
                            ++j;
                        else
                            keep.push_back(remaining[i]);
                    }
                    remaining = std::move(keep);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t k = d;
            while (k > 0 && idx[k - 1] == remaining.size() - d + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    if (zdeg(f) >= 1) out.push_back(f);
    return out;
}

// primitive squarefree input with positive leading coefficient
std::vector<ZPoly> factor_squarefree(const ZPoly& u) {
    if (zdeg(u) < 1) return {};
    Int L = u.back();
    if (L == 1) return zassenhaus_monic(u);
    // monic substitute: L^(n-1) u(x/L), factors pull back through x -> Lx
    int nn = zdeg(u);
    ZPoly F(u.size());
    F[nn] = 1;
    Int pw = 1;
    for (int i = nn - 1; i >= 0; --i) {
        F[i] = u[i] * pw;
        pw *= L;
    }
    std::vector<ZPoly> fs = zassenhaus_monic(F);
    std::vector<ZPoly> out;
    for (const auto& Fi : fs) {
        ZPoly g = Fi;
        Int q = 1;
        for (auto& c : g) {
            c *= q;
            q *= L;
        }
        out.push_back(primitive(g));
    }
    return out;
}

const Poly& cyclotomic_dense(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly xn(n + 1, Rat(0));
    xn[0] = -1;
    xn[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        xn = dense::divmod(xn, cyclotomic_dense(d)).first;
    }
    return cache.emplace(n, std::move(xn)).first->second;
}

} // namespace

LaurentPolynomial cyclotomic_polynomial(int n) {
    if (n < 1) throw std::domain_error("cyclotomic index must be positive");
    return dense::to_laurent(cyclotomic_dense(n));
}

Factorization factor_over_rationals(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    Factorization out;
    out.shift = p.lowest_exponent();
    Poly f = dense::from_laurent(p);
    std::map<LaurentPolynomial, int> found;
    if (dense::deg(f) >= 1) {
        // Yun squarefree decomposition over Q
        Poly a = dense::gcd(f, dense::derivative(f));
        Poly b = dense::divmod(f, a).first;
        Poly c = dense::divmod(dense::derivative(f), a).first;
        Poly d = dense::sub(c, dense::derivative(b));
        int mult = 1;
        while (dense::deg(b) > 0) {
            Poly part = dense::gcd(b, d);
            if (dense::deg(part) > 0) {
                // strip cyclotomic factors first, then factor the remnant
                ZPoly rem = primitive(to_z(dense::scale(part, [&] {
                    Int l = 1;
                    for (const auto& x : part) l = lcm(l, denominator(x));
                    return Rat(l);
                }())));
                for (int k = 1; k <= zdeg(rem); ++k) {
                    const Poly& phi = cyclotomic_dense(k);
                    if (dense::deg(phi) > zdeg(rem)) continue;
                    auto q = zdivide(rem, to_z(phi));
                    if (q) {
                        found[dense::to_laurent(phi).canonical()] += mult;
                        rem = *q;
                    }
                }
                for (const auto& irr : factor_squarefree(rem))
                    found[dense::to_laurent(to_q(irr)).canonical()] += mult;
            }
            b = dense::divmod(b, part).first;
            d = dense::sub(dense::divmod(d, part).first, dense::derivative(b));
            ++mult;
        }
    }
    out.factors.assign(found.begin(), found.end());
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.span() != y.first.span()) return x.first.span() < y.first.span();
        return x.first < y.first;
    });
    // the unit is whatever exact division leaves over; a non-constant leftover
    // means the factorization above lost something
    LaurentPolynomial prod = LaurentPolynomial::monomial(out.shift, 1);
    for (const auto& [q, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * q;
    LaurentPolynomial u = divide_exact(p, prod);
    if (u.is_zero() || u.span() != 0 || u.lowest_exponent() != 0)
        throw std::logic_error("factorization does not reconstruct its input");
    out.unit = u.coefficient(0);
    return out;
}

LaurentPolynomial reconstruct(const Factorization& f) {
    LaurentPolynomial p = LaurentPolynomial::monomial(f.shift, f.unit);
    for (const auto& [q, m] : f.factors)
        for (int i = 0; i < m; ++i) p = p * q;
    return p;
}

KawauchiResult kawauchi_test(const LaurentPolynomial& p) {
    if (p.is_zero()) return {false, std::nullopt, "zero polynomial"};
    if (!is_symmetric(p)) return {false, std::nullopt, "asymmetric"};
    Factorization fac = factor_over_rationals(p);
    std::map<LaurentPolynomial, int> remaining;
    for (const auto& [q, m] : fac.factors) remaining[q] = m;
    LaurentPolynomial witness(Rat(1));
    for (auto& [q, m] : remaining) {
        if (m == 0) continue;
        LaurentPolynomial qc = q.conj().canonical();
        if (qc == q) {
            if (m % 2 != 0)
                return {false, std::nullopt,
                        "self-reciprocal factor " + q.str() + " has odd multiplicity"};
            for (int i = 0; i < m / 2; ++i) witness = witness * q;
            m = 0;
        } else {
            auto it = remaining.find(qc);
            if (it == remaining.end() || it->second != m)
                return {false, std::nullopt, "factor " + q.str() + " lacks its reciprocal partner"};
            for (int i = 0; i < m; ++i) witness = witness * q;
            m = 0;
            it->second = 0;
        }
    }
    return {true, witness, ""};
}

bool rational_square_criterion(const Int& a, const Int& b, const Int& d, const Int& alpha,
                               const Int& beta) {
    if (beta == 0) throw std::domain_error("beta = 0");
    Rat v = Rat(a - d) + Rat(b) * Rat(alpha, beta);
    return is_square_rational(v * v - 4);
}

} // namespace emb4
