#include <emb4/abelian.hpp>

#include <stdexcept>

namespace emb4 {

std::string FiniteAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += "+";
        s += part;
    };
    if (free_rank == 1) append("Z");
    else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    std::size_t i = 0;
    while (i < invariant_factors.size()) {
        std::size_t j = i;
        while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
        std::string part = "Z_" + invariant_factors[i].str();
        if (j - i > 1) part += "^" + std::to_string(j - i);
        append(part);
        i = j;
    }
    return s;
}

FiniteAbelianGroup group_from_presentation(const IntegerMatrix& A) {
    FiniteAbelianGroup g;
    std::size_t gens = A.rows();
    auto d = smith_normal_form(A).diagonal();
    std::size_t nonzero = 0;
    for (const auto& v : d) {
        if (v == 0) continue;
        ++nonzero;
        if (v > 1) g.invariant_factors.push_back(v);
    }
    g.free_rank = gens - nonzero;
    return g;
}

FiniteAbelianGroup parse_group(const std::string& text) {
    FiniteAbelianGroup g;
    if (text == "0") return g;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_group: " + why + " in '" + text + "'");
    };
    while (pos < text.size()) {
        if (text[pos] != 'Z') fail("expected Z");
        ++pos;
        Int base = 0; // 0 means free factor
        if (pos < text.size() && text[pos] == '_') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected subscript");
            base = Int(text.substr(start, pos - start));
            if (base < 2) fail("invariant factor below 2");
        }
        std::size_t count = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            count = std::stoul(text.substr(start, pos - start));
        }
        if (base == 0) g.free_rank += count;
        else
            for (std::size_t i = 0; i < count; ++i) g.invariant_factors.push_back(base);
        if (pos < text.size()) {
            if (text[pos] != '+') fail("expected +");
            ++pos;
        }
    }
    for (std::size_t i = 0; i + 1 < g.invariant_factors.size(); ++i)
        if (g.invariant_factors[i + 1] % g.invariant_factors[i] != 0) fail("factors out of divisibility order");
    return g;
}

bool hyperbolic_square_test(const FiniteAbelianGroup& g) {
    if (g.free_rank != 0) throw std::invalid_argument("hyperbolic_square_test: group has free rank");
    return is_perfect_square(g.torsion_order());
}

} // namespace emb4
