#include <emb4/seifert.hpp>

#include <map>
#include <stdexcept>

namespace emb4 {

SurfaceBase base_s2() { return {true, 0, 0}; }
SurfaceBase base_disc() { return {true, 0, 1}; }
SurfaceBase base_annulus() { return {true, 0, 2}; }
SurfaceBase base_torus() { return {true, 1, 0}; }
SurfaceBase base_rp2() { return {false, 1, 0}; }
SurfaceBase base_mobius() { return {false, 1, 1}; }
SurfaceBase base_klein() { return {false, 2, 0}; }
SurfaceBase base_orientable(int genus, int punctures) { return {true, genus, punctures}; }
SurfaceBase base_nonorientable(int genus, int punctures) { return {false, genus, punctures}; }

int euler_characteristic(const SurfaceBase& b) {
    int closed = b.orientable ? 2 - 2 * b.genus : 2 - b.genus;
    return closed - b.punctures;
}

SeifertPiece make_sfs(SurfaceBase base, std::vector<std::pair<Int, Int>> fibers) {
    if (!base.orientable && base.genus < 1) throw std::invalid_argument("nonorientable base needs genus");
    for (const auto& [a, b] : fibers) {
        if (b < 1) throw std::invalid_argument("fibre slope needs positive denominator");
        if (gcd(a, b) != 1) throw std::invalid_argument("fibre slope not reduced");
    }
    return {base, std::move(fibers)};
}

Rat euler_number(const SeifertPiece& p) {
    Rat e = 0;
    for (const auto& [a, b] : p.fibers) e += Rat(a, b);
    return e;
}

GraphManifold single_manifold(SeifertPiece p) {
    return {GraphShape::single_piece, {std::move(p)}, {}};
}
GraphManifold loop_manifold(SeifertPiece p, IntegerMatrix gluing) {
    return {GraphShape::loop, {std::move(p)}, {std::move(gluing)}};
}
GraphManifold linear2_manifold(SeifertPiece p1, IntegerMatrix m, SeifertPiece p2) {
    return {GraphShape::linear2, {std::move(p1), std::move(p2)}, {std::move(m)}};
}
GraphManifold linear3_manifold(SeifertPiece p1, IntegerMatrix m1, SeifertPiece p2,
                               IntegerMatrix m2, SeifertPiece p3) {
    return {GraphShape::linear3, {std::move(p1), std::move(p2), std::move(p3)},
            {std::move(m1), std::move(m2)}};
}

namespace {

Int det2(const IntegerMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("gluing must be 2x2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

void flip_piece(SeifertPiece& p) {
    for (auto& [a, b] : p.fibers) a = -a;
}

} // namespace

// Reversing a piece negates its fibre class; gluings touching it pick up a
// diag(-1,1) on that side.
GraphManifold normalize_gluings(const GraphManifold& m) {
    GraphManifold g = m;
    for (const auto& gl : g.gluings)
        if (abs(det2(gl)) != 1) throw std::domain_error("wrong determinant");
    auto negate_col = [](IntegerMatrix& gl) { gl(0, 0) = -gl(0, 0); gl(1, 0) = -gl(1, 0); };
    auto negate_row = [](IntegerMatrix& gl) { gl(0, 0) = -gl(0, 0); gl(0, 1) = -gl(0, 1); };
    switch (g.shape) {
    case GraphShape::single_piece:
        break;
    case GraphShape::loop:
        if (det2(g.gluings[0]) != -1) throw std::domain_error("wrong determinant");
        break;
    case GraphShape::linear2:
        if (det2(g.gluings[0]) == 1) {
            flip_piece(g.pieces[1]);
            negate_row(g.gluings[0]);
        }
        break;
    case GraphShape::linear3:
        if (det2(g.gluings[0]) == 1) {
            flip_piece(g.pieces[1]);
            negate_row(g.gluings[0]);
            negate_col(g.gluings[1]);
        }
        if (det2(g.gluings[1]) == 1) {
            flip_piece(g.pieces[2]);
            negate_row(g.gluings[1]);
        }
        break;
    }
    return g;
}

namespace {

// Column vectors over the generators of one piece.
struct PieceLayout {
    std::size_t first_gen = 0;
    std::size_t gens = 0;
    std::size_t fiber_gen = 0;                  // index of f
    std::vector<std::vector<Int>> relations;    // local columns
    std::vector<Int> fibre_class;               // local f
    std::vector<Int> section_a;                 // boundary section, first side
    std::vector<Int> section_b;                 // second side (annulus only)
    bool has_second_side = false;
};

// Homology generators: one per fibre, the fibre class f, crosscap classes
// for a nonorientable base, one free class per handle pair and annulus core.
// Relations: b*q + a*f per fibre; sum of fibre classes for a closed base
// (plus twice the crosscaps when nonorientable); 2f = 0 over a
// nonorientable base. Boundary sections are -sum(q) corrected by the
// crosscap or core class.
PieceLayout piece_layout(const SeifertPiece& p) {
    const auto& b = p.base;
    if (b.punctures > 2 || (b.punctures == 2 && !(b.orientable && b.genus == 0)))
        throw std::invalid_argument("unsupported base surface");
    if (!b.orientable && b.punctures == 1 && b.genus != 1)
        throw std::invalid_argument("unsupported base surface");

    PieceLayout L;
    std::size_t k = p.fibers.size();
    std::size_t crosscaps = b.orientable ? 0 : static_cast<std::size_t>(b.genus);
    std::size_t free_extra = b.orientable ? 2 * static_cast<std::size_t>(b.genus) : 0;
    bool annulus = b.punctures == 2;
    L.gens = k + 1 + crosscaps + free_extra + (annulus ? 1 : 0);
    L.fiber_gen = k;
    auto zero = [&] { return std::vector<Int>(L.gens, Int(0)); };

    L.fibre_class = zero();
    L.fibre_class[L.fiber_gen] = 1;

    for (std::size_t i = 0; i < k; ++i) {
        auto r = zero();
        r[i] = p.fibers[i].second;
        r[L.fiber_gen] = p.fibers[i].first;
        L.relations.push_back(std::move(r));
    }

    std::size_t cross0 = k + 1;
    std::size_t core = k + 1 + crosscaps;    // annulus core class
    if (!b.orientable) {
        auto r = zero();
        r[L.fiber_gen] = 2;
        L.relations.push_back(std::move(r));
    }
    if (b.punctures == 0) {
        auto r = zero();
        for (std::size_t i = 0; i < k; ++i) r[i] = 1;
        for (std::size_t c = 0; c < crosscaps; ++c) r[cross0 + c] = 2;
        L.relations.push_back(std::move(r));
    } else {
        L.section_a = zero();
        for (std::size_t i = 0; i < k; ++i) L.section_a[i] = -1;
        for (std::size_t c = 0; c < crosscaps; ++c) L.section_a[cross0 + c] = -2;
        if (annulus) {
            L.section_a[core] = -1;
            L.section_b = zero();
            L.section_b[core] = 1;
            L.has_second_side = true;
        }
    }
    return L;
}

struct Assembly {
    std::vector<PieceLayout> layouts;
    std::size_t total_gens = 0;
    std::size_t extra_free = 0;               // loop shape: class crossing the gluing torus
    std::vector<std::vector<Int>> relations;  // global columns

    std::vector<Int> globalize(std::size_t piece, const std::vector<Int>& local) const {
        std::vector<Int> v(total_gens, Int(0));
        for (std::size_t i = 0; i < local.size(); ++i) v[layouts[piece].first_gen + i] = local[i];
        return v;
    }
    void add_gluing(std::size_t from, const std::vector<Int>& f_from, const std::vector<Int>& o_from,
                    std::size_t to, const std::vector<Int>& f_to, const std::vector<Int>& o_to,
                    const IntegerMatrix& m) {
        auto gf_from = globalize(from, f_from), go_from = globalize(from, o_from);
        auto gf_to = globalize(to, f_to), go_to = globalize(to, o_to);
        std::vector<Int> r1(total_gens, Int(0)), r2(total_gens, Int(0));
        for (std::size_t i = 0; i < total_gens; ++i) {
            r1[i] = gf_to[i] - m(0, 0) * gf_from[i] - m(0, 1) * go_from[i];
            r2[i] = go_to[i] - m(1, 0) * gf_from[i] - m(1, 1) * go_from[i];
        }
        relations.push_back(std::move(r1));
        relations.push_back(std::move(r2));
    }
};

Assembly assemble(const GraphManifold& mraw) {
    GraphManifold m = normalize_gluings(mraw);
    Assembly a;
    for (const auto& p : m.pieces) {
        PieceLayout L = piece_layout(p);
        L.first_gen = a.total_gens;
        a.total_gens += L.gens;
        a.layouts.push_back(std::move(L));
    }
    if (m.shape == GraphShape::loop) a.extra_free = 1;
    a.total_gens += a.extra_free;

    for (std::size_t t = 0; t < a.layouts.size(); ++t)
        for (const auto& r : a.layouts[t].relations) a.relations.push_back(a.globalize(t, r));

    auto expect_sides = [&](std::size_t piece, std::size_t sides) {
        std::size_t have = a.layouts[piece].section_a.empty() ? 0 : (a.layouts[piece].has_second_side ? 2 : 1);
        if (have != sides) throw std::invalid_argument("piece boundary does not match shape");
    };

    switch (m.shape) {
    case GraphShape::single_piece:
        break;
    case GraphShape::loop: {
        expect_sides(0, 2);
        const auto& L = a.layouts[0];
        a.add_gluing(0, L.fibre_class, L.section_a, 0, L.fibre_class, L.section_b, m.gluings[0]);
        break;
    }
    case GraphShape::linear2: {
        expect_sides(0, 1);
        expect_sides(1, 1);
        const auto& L0 = a.layouts[0];
        const auto& L1 = a.layouts[1];
        a.add_gluing(0, L0.fibre_class, L0.section_a, 1, L1.fibre_class, L1.section_a, m.gluings[0]);
        break;
    }
    case GraphShape::linear3: {
        expect_sides(0, 1);
        expect_sides(1, 2);
        expect_sides(2, 1);
        const auto& L0 = a.layouts[0];
        const auto& L1 = a.layouts[1];
        const auto& L2 = a.layouts[2];
        a.add_gluing(0, L0.fibre_class, L0.section_a, 1, L1.fibre_class, L1.section_a, m.gluings[0]);
        a.add_gluing(1, L1.fibre_class, L1.section_b, 2, L2.fibre_class, L2.section_a, m.gluings[1]);
        break;
    }
    }
    return a;
}

} // namespace

IntegerMatrix h1_presentation(const GraphManifold& m) {
    Assembly a = assemble(m);
    IntegerMatrix A(a.total_gens, a.relations.size());
    for (std::size_t j = 0; j < a.relations.size(); ++j)
        for (std::size_t i = 0; i < a.total_gens; ++i) A(i, j) = a.relations[j][i];
    return A;
}

FiniteAbelianGroup sfs_h1(const GraphManifold& m) {
    return group_from_presentation(h1_presentation(m));
}

FiniteAbelianGroup sfs_h1(const SeifertPiece& p) {
    return sfs_h1(single_manifold(p));
}

MonodromyData monodromy_data(const SeifertPiece& p) {
    if (!(p.base == base_s2()) || p.fibers.empty() || euler_number(p) != 0)
        throw std::domain_error("not fibered data");
    Int n = 1;
    for (const auto& [a, b] : p.fibers) n = lcm(n, b);
    Rat chi = 2;
    for (const auto& [a, b] : p.fibers) chi += Rat(1, b) - 1;
    chi *= n;
    if (!is_integer(chi) || numerator(chi) % 2 != 0) throw std::domain_error("non-integral genus");
    Int g = (2 - numerator(chi)) / 2;
    if (g < 0) throw std::domain_error("non-integral genus");
    return {n, g};
}

namespace {

// Index of the image of the boundary torus in the free quotient of a piece
// whose homology has free rank one.
Int boundary_index(const SeifertPiece& p) {
    PieceLayout L = piece_layout(p);
    if (L.section_a.empty() || L.has_second_side)
        throw std::invalid_argument("piece boundary does not match shape");
    IntegerMatrix A(L.gens, L.relations.size());
    for (std::size_t j = 0; j < L.relations.size(); ++j)
        for (std::size_t i = 0; i < L.gens; ++i) A(i, j) = L.relations[j][i];
    SmithDecomposition snf = smith_normal_form(A);
    std::vector<std::size_t> free_rows;
    std::size_t dmin = std::min(A.rows(), A.cols());
    for (std::size_t i = 0; i < dmin; ++i)
        if (snf.S(i, i) == 0) free_rows.push_back(i);
    for (std::size_t i = A.cols(); i < A.rows(); ++i) free_rows.push_back(i);
    if (free_rows.size() != 1) throw std::domain_error("wrong rank");
    std::size_t row = free_rows[0];
    Int pf = 0, po = 0;
    for (std::size_t i = 0; i < L.gens; ++i) {
        pf += snf.U(row, i) * L.fibre_class[i];
        po += snf.U(row, i) * L.section_a[i];
    }
    Int g = gcd(pf, po);
    if (g == 0) throw std::domain_error("wrong rank");
    return g;
}

} // namespace

std::pair<Int, Int> splice_orders(const GraphManifold& m) {
    if (m.shape != GraphShape::linear2) throw std::invalid_argument("linear2 required");
    if (sfs_h1(m).free_rank != 1) throw std::domain_error("wrong rank");
    GraphManifold n = normalize_gluings(m);
    return {boundary_index(n.pieces[1]), boundary_index(n.pieces[0])};
}

SeifertPiece brieskorn_sphere(const Int& p, const Int& q, const Int& r) {
    if (p < 2 || q < 2 || r < 2 || gcd(p, q) != 1 || gcd(p, r) != 1 || gcd(q, r) != 1)
        throw std::invalid_argument("not pairwise coprime");
    Int u, v;
    ext_gcd(mod_euclid(q * r, p), p, u, v);
    Int x = mod_euclid(u, p);
    ext_gcd(mod_euclid(p * r, q), q, u, v);
    Int y = mod_euclid(u, q);
    Int z = (1 - x * q * r - y * p * r) / (p * q);
    return make_sfs(base_s2(), {{x, p}, {y, q}, {z, r}});
}

FiniteAbelianGroup torus_bundle_h1(const IntegerMatrix& monodromy) {
    if (monodromy.rows() != 2 || monodromy.cols() != 2 || det2(monodromy) != 1)
        throw std::invalid_argument("monodromy must be in SL(2,Z)");
    FiniteAbelianGroup g = group_from_presentation(monodromy - IntegerMatrix::identity(2));
    g.free_rank += 1;
    return g;
}

} // namespace emb4
