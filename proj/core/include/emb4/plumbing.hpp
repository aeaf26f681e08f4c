#pragma once

#include <emb4/seifert.hpp>
#include <cstddef>
#include <tuple>
#include <vector>

namespace emb4 {

// Framed link given by an unknotted-component diagram: framings per
// component, edges with pairwise linking numbers +-1. Components listed in
// open_components are unfilled boundary circles.
struct FramedLinkGraph {
    std::vector<Int> framings;
    std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
    std::vector<std::size_t> open_components;

    std::size_t size() const { return framings.size(); }
    // Symmetric matrix with framings on the diagonal and linking numbers off it.
    IntegerMatrix linking_matrix() const;
    // Columns of the linking matrix for filled components only; its cokernel
    // is the first homology.
    IntegerMatrix presentation_matrix() const;
};

// r = c1 - 1/(c2 - 1/(... - 1/ck)); entries satisfy ci >= 2 except possibly
// the first.
std::vector<Int> negative_continued_fraction(const Rat& r);

// Factors m (|det m| = 1) as an ordered product of [[1,+-1],[0,1]],
// [[1,0],[+-1,1]] and at most one leading [[0,1],[1,0]].
std::vector<IntegerMatrix> twist_factorization(const IntegerMatrix& m);

// Integral surgery diagram: a plumbing star per piece, splice edges realized
// by chains of small-framed unknots.
FramedLinkGraph surgery_presentation(const GraphManifold& m);

} // namespace emb4
