#include <emb4/families.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace emb4 {

namespace {

std::array<Int, 3> sorted_coprime_triple(const Int& p, const Int& q, const Int& r) {
    if (p < 1 || q < 1 || r < 1 || gcd(p, q) != 1 || gcd(p, r) != 1 || gcd(q, r) != 1)
        throw std::invalid_argument("not pairwise coprime");
    std::array<Int, 3> t{p, q, r};
    std::sort(t.begin(), t.end());
    return t;
}

// a such that u = P*a + off, or 0 when there is none with a >= 1
Int solve_a(const Int& P, const Int& u, const Int& off) {
    Int num = u - off;
    if (num < P || num % P != 0) return 0;
    return num / P;
}

} // namespace

std::optional<int> casson_harer_case(const Int& p, const Int& q, const Int& r) {
    auto t = sorted_coprime_triple(p, q, r);
    // each element in turn as the family parameter, the remaining pair sorted
    auto others = [&](int i) {
        std::array<Int, 2> o{};
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) o[static_cast<std::size_t>(k++)] = t[static_cast<std::size_t>(j)];
        return o;
    };
    for (int i = 0; i < 3; ++i) {
        const Int& P = t[static_cast<std::size_t>(i)];
        auto [u, v] = others(i);
        if (P % 2 == 1) {
            Int a = solve_a(P, u, 1);
            if (a > 0 && v == P * a + 2) return 1;
            a = solve_a(P, u, -2);
            if (a > 0 && v == P * a - 1) return 1;
        }
    }
    // the finite families come before the even one: (2,5,7) belongs to both
    if (t == std::array<Int, 3>{2, 3, 13} || t == std::array<Int, 3>{2, 5, 7}) return 3;
    if (t == std::array<Int, 3>{2, 5, 9} || t == std::array<Int, 3>{3, 4, 7}) return 4;
    for (int i = 0; i < 3; ++i) {
        const Int& P = t[static_cast<std::size_t>(i)];
        auto [u, v] = others(i);
        if (P % 2 == 0) {
            Int a = solve_a(P, u, -1);
            if (a > 0 && a % 2 == 1 && v == P * a + 1) return 2;
        }
    }
    return std::nullopt;
}

bool stern_case(const Int& p, const Int& q, const Int& r) {
    auto t = sorted_coprime_triple(p, q, r);
    for (int i = 0; i < 3; ++i) {
        const Int& P = t[static_cast<std::size_t>(i)];
        std::array<Int, 2> o{};
        int k = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) o[static_cast<std::size_t>(k++)] = t[static_cast<std::size_t>(j)];
        auto [u, v] = o;
        for (int e : {1, -1}) {
            if (P % 2 == 0) {
                // (P, Pa+e, 2P(Pa+e) + Pa-e), a odd
                Int a = solve_a(P, u, e);
                if (a > 0 && a % 2 == 1 && v == 2 * P * u + (u - e) - e) return true;
            } else {
                // (P, Pa+e, 2P(Pa+e) + Pa+2e)
                Int a = solve_a(P, u, e);
                if (a > 0 && v == 2 * P * u + (u - e) + 2 * e) return true;
                // (P, Pa+2e, 2P(Pa+2e) + Pa+e)
                a = solve_a(P, u, 2 * e);
                if (a > 0 && v == 2 * P * u + (u - 2 * e) + e) return true;
            }
        }
    }
    return false;
}

bool circle_bundle_embeds(bool base_orientable, const Int& chi, const Int& w2) {
    if (chi > 2 || (base_orientable && chi % 2 != 0) || (!base_orientable && chi > 1))
        throw std::invalid_argument("not a surface Euler characteristic");
    if (base_orientable) return w2 >= -1 && w2 <= 1;
    return w2 >= 2 * chi - 4 && w2 <= 4 - 2 * chi && mod_euclid(w2 - 2 * chi, 4) == 0;
}

bool lens_sum_embeds(const Int& p, const Int& q, const Int& pp, const Int& qp) {
    if (p < 1 || pp < 1 || gcd(p, q) != 1 || gcd(pp, qp) != 1)
        throw std::invalid_argument("not a lens space");
    if (p != pp || p % 2 == 0) return false;
    return mod_euclid(q + qp, p) == 0 || mod_euclid(q * qp + 1, p) == 0;
}

} // namespace emb4
