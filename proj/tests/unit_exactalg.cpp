#include <doctest.h>

#include <emb4/linalg.hpp>

#include <random>

using namespace emb4;

namespace {

std::mt19937_64 rng(0x5eed001);

IntegerMatrix random_int_matrix(std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

RationalMatrix random_symmetric(std::size_t n) {
    std::uniform_int_distribution<int> d(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rat(d(rng), den(rng));
    return m;
}

// plumbing tree with three legs of lengths 1, 2, 4 off a central node, all framings -2
IntegerMatrix e8_matrix() {
    IntegerMatrix B(8, 8);
    for (int i = 0; i < 8; ++i) B(i, i) = -2;
    auto link = [&](int a, int b) { B(a, b) = B(b, a) = 1; };
    link(0, 1);
    link(0, 2); link(2, 3);
    link(0, 4); link(4, 5); link(5, 6); link(6, 7);
    return B;
}

// Jacobi/Sylvester oracle: all leading principal minors nonzero =>
// #negative eigenvalues = sign changes in 1, D1, ..., Dn. Returns false if inapplicable.
bool sylvester_signature(const IntegerMatrix& B, int& sig) {
    std::size_t n = B.rows();
    Int prev = 1;
    int changes = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        IntegerMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead(i, j) = B(i, j);
        Int d = determinant(lead);
        if (d == 0) return false;
        if (sign(d) != sign(prev)) ++changes;
        prev = d;
    }
    sig = static_cast<int>(n) - 2 * changes;
    return true;
}

bool divisibility_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
    return d.empty() || d.back() >= 0;
}

} // namespace

TEST_CASE("smith normal form on fixed matrices") {
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        IntegerMatrix a(2, 2);
        a(0, 0) = 2;
        a(1, 1) = 3;
        auto s = smith_normal_form(a);
        CHECK(s.S(0, 0) == 1);
        CHECK(s.S(1, 1) == 6);
        CHECK(s.U * a * s.V == s.S);
    }
    SUBCASE("zero matrix is fixed with identity transforms") {
        IntegerMatrix a(2, 2);
        auto s = smith_normal_form(a);
        CHECK(s.S.is_zero());
        CHECK(s.U == IntegerMatrix::identity(2));
        CHECK(s.V == IntegerMatrix::identity(2));
    }
    SUBCASE("relative presentation of a disc piece with two 1/2 fibers has torsion GCD(2,2)") {
        // generators x1,x2,f; filling relations 2*xi + f
        IntegerMatrix a(3, 2);
        a(0, 0) = 2; a(2, 0) = 1;
        a(1, 1) = 2; a(2, 1) = 1;
        auto d = smith_normal_form(a).diagonal();
        CHECK(d == std::vector<Int>{1, 2});
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntegerMatrix a = random_int_matrix(dim(rng), dim(rng));
        auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.S);
        CHECK(divisibility_chain(s.diagonal()));
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i < s.S.rows(); ++i)
            for (std::size_t j = 0; j < s.S.cols(); ++j)
                if (i != j) CHECK(s.S(i, j) == 0);
        // idempotent on its own output
        auto s2 = smith_normal_form(s.S);
        CHECK(s2.S == s.S);
        // square case: product of diagonal = |det|
        if (a.rows() == a.cols()) {
            Int prod = 1;
            for (const auto& d : s.diagonal()) prod *= d;
            CHECK(prod == abs(determinant(a)));
        }
    }
}

TEST_CASE("exact signature fixtures") {
    SUBCASE("hyperbolic plane") {
        RationalMatrix q(2, 2);
        q(0, 0) = 1;
        q(1, 1) = -1;
        CHECK(exact_signature(q) == 0);
    }
    SUBCASE("E8 plumbing matrix is negative definite of rank 8") {
        IntegerMatrix b = e8_matrix();
        CHECK(abs(determinant(b)) == 1);
        int oracle = 0;
        REQUIRE(sylvester_signature(b, oracle));
        CHECK(oracle == -8);
        CHECK(exact_signature(to_rational(b)) == -8);
    }
    SUBCASE("zero diagonal needs the two-by-two handling") {
        RationalMatrix q(2, 2);
        q(0, 1) = q(1, 0) = Rat(1, 2);
        CHECK(exact_signature(q) == 0);
    }
}

TEST_CASE("exact signature properties") {
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t n = dim(rng);
        RationalMatrix q = random_symmetric(n);

        // congruence invariance
        IntegerMatrix p0 = random_int_matrix(n, n, -3, 3);
        if (determinant(p0) == 0) continue;
        RationalMatrix p = to_rational(p0);
        CHECK(exact_signature(p.transpose() * q * p) == exact_signature(q));

        // direct sum with negation kills the signature
        RationalMatrix dbl(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                dbl(i, j) = q(i, j);
                dbl(n + i, n + j) = -q(i, j);
            }
        CHECK(exact_signature(dbl) == 0);
    }
    // agreement with the Sylvester oracle whenever it applies
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng);
        IntegerMatrix b = random_int_matrix(n, n, -4, 4);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) b(j, i) = b(i, j);
        int oracle = 0;
        if (sylvester_signature(b, oracle)) CHECK(exact_signature(to_rational(b)) == oracle);
    }
}

TEST_CASE("solve_mod2 fixtures") {
    SUBCASE("2x = 2 over GF(2) is vacuous") {
        IntegerMatrix a(1, 1);
        a(0, 0) = 2;
        auto s = solve_mod2(a, {Int(2)});
        REQUIRE(s.consistent);
        CHECK(s.count_log2() == 1); // two solutions
    }
    SUBCASE("identity system has the unique obvious solution") {
        auto s = solve_mod2(IntegerMatrix::identity(2), {Int(1), Int(0)});
        REQUIRE(s.consistent);
        CHECK(s.kernel.empty());
        CHECK(s.particular == std::vector<std::uint8_t>{1, 0});
    }
    SUBCASE("inconsistent system reports failure") {
        IntegerMatrix a(2, 1);
        a(0, 0) = 2;
        a(1, 0) = 1;
        auto s = solve_mod2(a, {Int(1), Int(0)});
        CHECK(!s.consistent);
    }
}

TEST_CASE("solve_mod2 counts match exhaustive enumeration") {
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 6), cd(1, 12);
        std::size_t r = rd(rng), c = cd(rng);
        IntegerMatrix a = random_int_matrix(r, c, 0, 1);
        std::vector<Int> b;
        std::uniform_int_distribution<int> bit(0, 1);
        for (std::size_t i = 0; i < r; ++i) b.push_back(bit(rng));

        std::size_t brute = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
                unsigned acc = 0;
                for (std::size_t j = 0; j < c; ++j)
                    if (mask >> j & 1) acc ^= static_cast<unsigned>(mod_euclid(a(i, j), 2).convert_to<unsigned>());
                ok = (acc == mod_euclid(b[i], 2));
            }
            if (ok) ++brute;
        }
        auto s = solve_mod2(a, b);
        if (!s.consistent) {
            CHECK(brute == 0);
        } else {
            CHECK(brute == (std::size_t{1} << s.count_log2()));
            // particular solution and kernel vectors actually solve
            for (std::size_t i = 0; i < r; ++i) {
                unsigned acc = 0;
                for (std::size_t j = 0; j < c; ++j)
                    if (s.particular[j]) acc ^= static_cast<unsigned>(mod_euclid(a(i, j), 2).convert_to<unsigned>());
                CHECK(acc == mod_euclid(b[i], 2));
            }
        }
    }
}

TEST_CASE("rational inverse") {
    SUBCASE("scalar") {
        IntegerMatrix a(1, 1);
        a(0, 0) = 5;
        auto inv = rational_inverse(a);
        CHECK(inv(0, 0) == Rat(1, 5));
    }
    SUBCASE("unimodular 2x2") {
        IntegerMatrix a(2, 2, {Int(2), Int(1), Int(1), Int(1)});
        auto inv = rational_inverse(a);
        CHECK(inv == RationalMatrix(2, 2, {Rat(1), Rat(-1), Rat(-1), Rat(2)}));
    }
    SUBCASE("involution") {
        IntegerMatrix a(2, 2, {Int(0), Int(1), Int(1), Int(0)});
        CHECK(rational_inverse(a) == to_rational(a));
    }
    SUBCASE("singular input throws") {
        IntegerMatrix a(2, 2, {Int(1), Int(2), Int(2), Int(4)});
        CHECK_THROWS_AS(rational_inverse(a), std::domain_error);
    }
    SUBCASE("random matrices invert exactly") {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 5);
            std::size_t n = dim(rng);
            IntegerMatrix a = random_int_matrix(n, n);
            if (determinant(a) == 0) continue;
            CHECK(to_rational(a) * rational_inverse(a) == RationalMatrix::identity(n));
        }
    }
}

TEST_CASE("kernel and characteristic polynomial support routines") {
    SUBCASE("kernel of a rank-one square matrix") {
        RationalMatrix a(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
        auto k = rational_kernel(a);
        REQUIRE(k.size() == 1);
        // kernel vector satisfies a*v = 0
        CHECK(a(0, 0) * k[0][0] + a(0, 1) * k[0][1] == 0);
    }
    SUBCASE("characteristic polynomial of a companion matrix") {
        // companion of t^2 - t - 1
        RationalMatrix a(2, 2, {Rat(0), Rat(1), Rat(1), Rat(1)});
        auto c = characteristic_polynomial(a);
        CHECK(c == std::vector<Rat>{Rat(-1), Rat(-1), Rat(1)});
    }
    SUBCASE("characteristic polynomial constant term is the determinant up to sign") {
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 4);
            std::size_t n = dim(rng);
            IntegerMatrix a = random_int_matrix(n, n, -4, 4);
            auto c = characteristic_polynomial(to_rational(a));
            Rat expect = Rat(determinant(a));
            if (n % 2 == 1) expect = -expect;
            CHECK(c[0] == expect);
        }
    }
}
