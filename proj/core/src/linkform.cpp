#include <emb4/linkform.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace emb4 {

namespace {

std::map<Int, int> factorize(Int n) {
    std::map<Int, int> out;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

// all coefficient tuples modulo the generator orders, index 0 = zero element
struct ElementTable {
    std::vector<Int> orders;
    std::vector<std::vector<Int>> elems;

    explicit ElementTable(const std::vector<Int>& ord) : orders(ord) {
        std::vector<Int> cur(ord.size(), 0);
        for (;;) {
            elems.push_back(cur);
            std::size_t i = 0;
            while (i < ord.size()) {
                if (++cur[i] < ord[i]) break;
                cur[i] = 0;
                ++i;
            }
            if (i == ord.size()) break;
            if (elems.size() > 200000) throw std::length_error("linking form group too large for search");
        }
    }

    std::size_t index_of(const std::vector<Int>& e) const {
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            idx += stride * e[i].convert_to<std::size_t>();
            stride *= orders[i].convert_to<std::size_t>();
        }
        return idx;
    }

    std::size_t add(std::size_t a, std::size_t b) const {
        std::vector<Int> s(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) s[i] = mod_euclid(elems[a][i] + elems[b][i], orders[i]);
        return index_of(s);
    }
};

using Subgroup = std::vector<std::uint32_t>; // sorted element indices, always containing 0

Subgroup closure_with(const ElementTable& tab, const Subgroup& h, std::size_t x) {
    std::set<std::uint32_t> s(h.begin(), h.end());
    std::size_t cur = x;
    std::vector<std::size_t> powers;
    while (cur != 0) {
        powers.push_back(cur);
        cur = tab.add(cur, x);
    }
    for (auto base : h)
        for (auto p : powers) s.insert(static_cast<std::uint32_t>(tab.add(base, p)));
    return Subgroup(s.begin(), s.end());
}

bool trivially_intersect(const Subgroup& a, const Subgroup& b) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++common; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return common == 1; // only the zero element
}

// small generating set of a subgroup given as an element list
std::vector<std::size_t> generating_set(const ElementTable& tab, const Subgroup& h) {
    std::vector<std::size_t> gens;
    Subgroup cl{0};
    for (auto e : h) {
        if (std::binary_search(cl.begin(), cl.end(), e)) continue;
        gens.push_back(e);
        cl = closure_with(tab, cl, e);
        if (cl.size() == h.size()) break;
    }
    return gens;
}

// p-primary piece with the data needed to lift its elements back to f's generators:
// part generator a is mult[a] * (f generator idx[a])
struct PrimePart {
    std::vector<std::size_t> idx;
    std::vector<Int> mult;
    LinkingForm form;
};

std::map<Int, PrimePart> prime_parts(const LinkingForm& f) {
    std::map<Int, PrimePart> out;
    for (const auto& [p, e] : factorize(f.order())) {
        (void)e;
        PrimePart part;
        std::vector<Int> ords;
        for (std::size_t i = 0; i < f.orders.size(); ++i) {
            Int d = f.orders[i], pe = 1;
            while (d % p == 0) {
                d /= p;
                pe *= p;
            }
            if (pe == 1) continue;
            part.idx.push_back(i);
            part.mult.push_back(d);
            ords.push_back(pe);
        }
        // ascending prime powers give the invariant-factor chain
        std::vector<std::size_t> perm(ords.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return ords[a] < ords[b]; });
        PrimePart sorted;
        sorted.form.pairing = RationalMatrix(ords.size(), ords.size());
        for (std::size_t a = 0; a < perm.size(); ++a) {
            sorted.idx.push_back(part.idx[perm[a]]);
            sorted.mult.push_back(part.mult[perm[a]]);
            sorted.form.orders.push_back(ords[perm[a]]);
            for (std::size_t b = 0; b < perm.size(); ++b)
                sorted.form.pairing(a, b) =
                    frac_mod1(Rat(part.mult[perm[a]] * part.mult[perm[b]]) * f.pairing(part.idx[perm[a]], part.idx[perm[b]]));
        }
        out.emplace(p, std::move(sorted));
    }
    return out;
}

// all isotropic subgroups of order target, by closure extension
std::vector<Subgroup> isotropic_subgroups(const ElementTable& tab, const LinkingForm& f, const Int& target) {
    std::size_t tgt = target.convert_to<std::size_t>();
    std::vector<Rat> self(tab.elems.size());
    for (std::size_t e = 0; e < tab.elems.size(); ++e) self[e] = evaluate_pairing(f, tab.elems[e], tab.elems[e]);

    std::set<Subgroup> seen;
    std::vector<Subgroup> queue{Subgroup{0}}, found;
    seen.insert(queue.front());
    if (tgt == 1) return queue;
    while (!queue.empty()) {
        Subgroup h = std::move(queue.back());
        queue.pop_back();
        for (std::size_t x = 1; x < tab.elems.size(); ++x) {
            if (self[x] != 0) continue;
            if (std::binary_search(h.begin(), h.end(), static_cast<std::uint32_t>(x))) continue;
            bool orth = true;
            for (auto e : h)
                if (evaluate_pairing(f, tab.elems[x], tab.elems[e]) != 0) { orth = false; break; }
            if (!orth) continue;
            Subgroup bigger = closure_with(tab, h, x);
            if (bigger.size() > tgt) continue;
            if (!seen.insert(bigger).second) continue;
            if (bigger.size() == tgt) found.push_back(bigger);
            else queue.push_back(std::move(bigger));
        }
    }
    return found;
}

} // namespace

FiniteAbelianGroup LinkingForm::group() const {
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    return group_from_presentation(diag);
}

Rat evaluate_pairing(const LinkingForm& f, const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != f.orders.size() || y.size() != f.orders.size())
        throw std::invalid_argument("evaluate_pairing: coefficient length mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) acc += Rat(x[i] * y[j]) * f.pairing(i, j);
    }
    return frac_mod1(acc);
}

LinkingForm linking_form_from_surgery(const IntegerMatrix& B) {
    if (!B.is_symmetric()) throw std::invalid_argument("linking_form_from_surgery: matrix not symmetric");
    if (determinant(B) == 0) throw std::domain_error("singular");
    auto snf = smith_normal_form(B);
    RationalMatrix binv = rational_inverse(B);
    RationalMatrix uinv = rational_inverse(snf.U);
    RationalMatrix full = uinv.transpose() * binv * uinv;
    auto d = snf.diagonal();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 1) keep.push_back(i);
    LinkingForm f;
    f.pairing = RationalMatrix(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        f.orders.push_back(d[keep[i]]);
        for (std::size_t j = 0; j < keep.size(); ++j) f.pairing(i, j) = frac_mod1(full(keep[i], keep[j]));
    }
    return f;
}

bool is_nondegenerate(const LinkingForm& f) {
    ElementTable tab(f.orders);
    std::size_t k = f.orders.size();
    for (std::size_t e = 1; e < tab.elems.size(); ++e) {
        bool in_radical = true;
        for (std::size_t j = 0; j < k && in_radical; ++j) {
            Rat v = 0;
            for (std::size_t i = 0; i < k; ++i) v += Rat(tab.elems[e][i]) * f.pairing(i, j);
            if (frac_mod1(v) != 0) in_radical = false;
        }
        if (in_radical) return false;
    }
    return true;
}

std::map<Int, LinkingForm> prime_decompose(const LinkingForm& f) {
    std::map<Int, LinkingForm> out;
    for (auto& [p, part] : prime_parts(f)) out.emplace(p, std::move(part.form));
    return out;
}

HyperbolicResult is_hyperbolic(const LinkingForm& f) {
    HyperbolicResult res;
    HyperbolicWitness wit;
    for (const auto& [p, part] : prime_parts(f)) {
        (void)p;
        Int root;
        if (!is_perfect_square(part.form.order(), root)) return {};

        ElementTable tab(part.form.orders);
        auto cands = isotropic_subgroups(tab, part.form, root);
        auto lift = [&](std::size_t elem) {
            std::vector<Int> v(f.orders.size(), 0);
            for (std::size_t i = 0; i < part.idx.size(); ++i)
                v[part.idx[i]] = mod_euclid(part.mult[i] * tab.elems[elem][i], f.orders[part.idx[i]]);
            return v;
        };
        bool ok = false;
        for (std::size_t a = 0; a < cands.size() && !ok; ++a)
            for (std::size_t b = a; b < cands.size() && !ok; ++b) {
                if (root > 1 && a == b) continue;
                if (!trivially_intersect(cands[a], cands[b])) continue;
                ok = true;
                for (auto e : generating_set(tab, cands[a])) wit.generators_A.push_back(lift(e));
                for (auto e : generating_set(tab, cands[b])) wit.generators_B.push_back(lift(e));
            }
        if (!ok) return {};
    }
    res.hyperbolic = true;
    res.witness = wit;
    return res;
}

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b) {
    LinkingForm s;
    s.orders = a.orders;
    s.orders.insert(s.orders.end(), b.orders.begin(), b.orders.end());
    std::size_t n = a.orders.size(), m = b.orders.size();
    s.pairing = RationalMatrix(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.pairing(i, j) = a.pairing(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s.pairing(n + i, n + j) = b.pairing(i, j);
    return s;
}

LinkingForm negate(const LinkingForm& f) {
    LinkingForm g = f;
    for (std::size_t i = 0; i < g.pairing.rows(); ++i)
        for (std::size_t j = 0; j < g.pairing.cols(); ++j) g.pairing(i, j) = frac_mod1(-g.pairing(i, j));
    return g;
}

LinkingForm cyclic_form(const Int& n, const Int& a) {
    if (n < 2) throw std::invalid_argument("cyclic_form: order must exceed 1");
    LinkingForm f;
    f.orders = {n};
    f.pairing = RationalMatrix(1, 1);
    f.pairing(0, 0) = frac_mod1(Rat(a, n));
    return f;
}

} // namespace emb4
