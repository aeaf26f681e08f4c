#include <emb4/plumbing.hpp>

#include <algorithm>
#include <stdexcept>

namespace emb4 {

IntegerMatrix FramedLinkGraph::linking_matrix() const {
    IntegerMatrix B(size(), size());
    for (std::size_t i = 0; i < size(); ++i) B(i, i) = framings[i];
    for (const auto& [i, j, s] : edges) {
        B(i, j) += s;
        B(j, i) += s;
    }
    return B;
}

IntegerMatrix FramedLinkGraph::presentation_matrix() const {
    IntegerMatrix B = linking_matrix();
    std::vector<char> open(size(), 0);
    for (std::size_t i : open_components) open.at(i) = 1;
    std::size_t filled = 0;
    for (std::size_t j = 0; j < size(); ++j)
        if (!open[j]) ++filled;
    IntegerMatrix P(size(), filled);
    std::size_t col = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        if (open[j]) continue;
        for (std::size_t i = 0; i < size(); ++i) P(i, col) = B(i, j);
        ++col;
    }
    return P;
}

std::vector<Int> negative_continued_fraction(const Rat& r) {
    std::vector<Int> out;
    Rat x = r;
    for (;;) {
        Int c = cdiv(numerator(x), denominator(x));
        out.push_back(c);
        Rat rem = Rat(c) - x;
        if (rem == 0) break;
        x = 1 / rem;
    }
    return out;
}

namespace {

IntegerMatrix mat2(const Int& a, const Int& b, const Int& c, const Int& d) {
    IntegerMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Int det2(const IntegerMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("matrix must be 2x2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

void emit_units(std::vector<IntegerMatrix>& out, bool upper, const Int& t) {
    Int s = t < 0 ? -1 : 1;
    for (Int k = 0; k < abs(t); ++k)
        out.push_back(upper ? mat2(1, s, 0, 1) : mat2(1, 0, s, 1));
}

} // namespace

std::vector<IntegerMatrix> twist_factorization(const IntegerMatrix& m) {
    Int det = det2(m);
    if (abs(det) != 1) throw std::invalid_argument("matrix must be unimodular");
    std::vector<IntegerMatrix> out;
    IntegerMatrix rest = m;
    if (det == -1) {
        out.push_back(mat2(0, 1, 1, 0));
        rest.swap_rows(0, 1);
    }
    for (;;) {
        Int a = rest(0, 0), c = rest(1, 0);
        if (c == 0) break;
        if (a == 0) {
            Int t = -c;    // c = +-1 here
            emit_units(out, true, t);
            rest.add_row(0, 1, -t);
        } else if (abs(a) > abs(c)) {
            Int t = a / c;
            emit_units(out, true, t);
            rest.add_row(0, 1, -t);
        } else {
            Int t = c / a;
            emit_units(out, false, t);
            rest.add_row(1, 0, -t);
        }
    }
    if (rest(0, 0) == -1) {
        for (int k = 0; k < 2; ++k) {
            emit_units(out, true, -1);
            emit_units(out, false, 1);
            emit_units(out, true, -1);
        }
        rest = -rest;
    }
    emit_units(out, true, rest(0, 1));
    return out;
}

namespace {

struct StarBuild {
    std::size_t hub = 0;
    bool closed = true;
};

std::vector<Int> leg_chain(const Int& a, const Int& b) {
    Rat r = Rat(-b) / Rat(a);
    if (r < 0) {
        auto v = negative_continued_fraction(-r);
        for (auto& x : v) x = -x;
        return v;
    }
    return negative_continued_fraction(r);
}

StarBuild append_star(FramedLinkGraph& g, const SeifertPiece& p) {
    if (!p.base.orientable || p.base.genus != 0 || p.base.punctures > 1)
        throw std::domain_error("unsupported shape");
    StarBuild sb;
    sb.hub = g.framings.size();
    sb.closed = p.base.punctures == 0;
    g.framings.push_back(0);
    Int hub_framing = 0;
    for (const auto& [a, b] : p.fibers) {
        if (b == 1) {
            hub_framing += a;
            continue;
        }
        std::size_t prev = sb.hub;
        for (const Int& c : leg_chain(a, b)) {
            std::size_t v = g.framings.size();
            g.framings.push_back(c);
            g.edges.emplace_back(prev, v, 1);
            prev = v;
        }
    }
    g.framings[sb.hub] = hub_framing;
    if (!sb.closed) g.open_components.push_back(sb.hub);
    return sb;
}

// Legs of a spliced disc piece; the drilled boundary circle itself never
// becomes a link component.  Integer slope parts are returned so the caller
// can fold them into the gluing.
Int append_splice_legs(FramedLinkGraph& g, const SeifertPiece& p,
                       std::vector<std::size_t>& first) {
    if (!p.base.orientable || p.base.genus != 0 || p.base.punctures != 1)
        throw std::domain_error("unsupported shape");
    Int slope_shift = 0;
    for (const auto& [a, b] : p.fibers) {
        if (b == 1) {
            slope_shift += a;
            continue;
        }
        std::size_t prev = 0;
        bool have_prev = false;
        for (const Int& c : leg_chain(a, b)) {
            std::size_t v = g.framings.size();
            g.framings.push_back(c);
            if (have_prev)
                g.edges.emplace_back(prev, v, 1);
            else
                first.push_back(v);
            prev = v;
            have_prev = true;
        }
    }
    return slope_shift;
}

} // namespace

FramedLinkGraph surgery_presentation(const GraphManifold& mraw) {
    GraphManifold m = normalize_gluings(mraw);
    FramedLinkGraph g;
    switch (m.shape) {
    case GraphShape::single_piece: {
        append_star(g, m.pieces[0]);
        return g;
    }
    case GraphShape::linear2: {
        std::vector<std::size_t> first_m, first_n;
        Int n0 = append_splice_legs(g, m.pieces[0], first_m);
        Int n1 = append_splice_legs(g, m.pieces[1], first_n);
        // Lickorish splice: the gluing, read against the standard genus-one
        // splitting of S^3, becomes a stack of Dehn twists; each unit factor
        // of J * g^T is one +-1-framed twist curve.  Upper units twist along
        // the meridian seen by pieces[0], lower units along the one seen by
        // pieces[1]; an upper curve passes through every lower curve stacked
        // before it and both boundary circles pass through the fibre-parallel
        // top circle of each leg on their own side.
        // Integer slope parts act as extra fibre twists on either side of the
        // gluing before it is read against the Heegaard torus.
        IntegerMatrix gl = mat2(1, 0, -n1, 1) * m.gluings[0] * mat2(1, 0, n0, 1);
        IntegerMatrix jgt(2, 2);
        jgt(0, 0) = gl(0, 1);
        jgt(0, 1) = gl(1, 1);
        jgt(1, 0) = gl(0, 0);
        jgt(1, 1) = gl(1, 0);
        std::vector<std::size_t> lowers;
        for (const IntegerMatrix& f : twist_factorization(jgt)) {
            bool upper = f(0, 1) != 0;
            Int t = upper ? f(0, 1) : f(1, 0);
            std::size_t v = g.framings.size();
            g.framings.push_back(upper ? t : -t);
            if (upper) {
                for (std::size_t w : lowers) g.edges.emplace_back(v, w, 1);
                for (std::size_t w : first_m) g.edges.emplace_back(v, w, 1);
            } else {
                for (std::size_t w : first_n) g.edges.emplace_back(v, w, 1);
                lowers.push_back(v);
            }
        }
        for (std::size_t a : first_m)
            for (std::size_t b : first_n) g.edges.emplace_back(a, b, 1);
        return g;
    }
    default:
        throw std::domain_error("unsupported shape");
    }
}

} // namespace emb4
