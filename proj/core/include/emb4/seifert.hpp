#pragma once

#include <emb4/abelian.hpp>
#include <emb4/linalg.hpp>
#include <utility>
#include <vector>

namespace emb4 {

// Base surface of a Seifert fibration. genus counts handles when orientable
// and crosscaps when not; punctures is the number of boundary circles.
struct SurfaceBase {
    bool orientable = true;
    int genus = 0;
    int punctures = 0;

    bool operator==(const SurfaceBase& o) const {
        return orientable == o.orientable && genus == o.genus && punctures == o.punctures;
    }
};

SurfaceBase base_s2();
SurfaceBase base_disc();
SurfaceBase base_annulus();
SurfaceBase base_torus();
SurfaceBase base_rp2();
SurfaceBase base_mobius();
SurfaceBase base_klein();
SurfaceBase base_orientable(int genus, int punctures = 0);
SurfaceBase base_nonorientable(int genus, int punctures = 0);

int euler_characteristic(const SurfaceBase& b);

// One Seifert fibred piece. Fibre slopes a/b are kept as given, with
// b >= 1 and gcd(a, b) = 1; integer slopes (b = 1) are allowed.
struct SeifertPiece {
    SurfaceBase base;
    std::vector<std::pair<Int, Int>> fibers;
};

SeifertPiece make_sfs(SurfaceBase base, std::vector<std::pair<Int, Int>> fibers);

// Sum of the fibre slopes.
Rat euler_number(const SeifertPiece& p);

enum class GraphShape { single_piece, loop, linear2, linear3 };

// Seifert pieces glued along boundary tori. Each gluing is a 2x2 integer
// matrix of determinant -1 sending (fibre, section) of the earlier piece to
// (fibre, section) of the later one; determinant +1 matrices are accepted
// for the linear shapes and normalized by reversing the later piece.
struct GraphManifold {
    GraphShape shape = GraphShape::single_piece;
    std::vector<SeifertPiece> pieces;
    std::vector<IntegerMatrix> gluings;
};

GraphManifold single_manifold(SeifertPiece p);
GraphManifold loop_manifold(SeifertPiece p, IntegerMatrix gluing);
GraphManifold linear2_manifold(SeifertPiece p1, IntegerMatrix m, SeifertPiece p2);
GraphManifold linear3_manifold(SeifertPiece p1, IntegerMatrix m1, SeifertPiece p2,
                               IntegerMatrix m2, SeifertPiece p3);

// Copy of m with every gluing of determinant -1, obtained by reversing
// later pieces. Loops must already have determinant -1.
GraphManifold normalize_gluings(const GraphManifold& m);

// Relation matrix for the first homology; columns are relations.
IntegerMatrix h1_presentation(const GraphManifold& m);

FiniteAbelianGroup sfs_h1(const GraphManifold& m);
FiniteAbelianGroup sfs_h1(const SeifertPiece& p);

// Fibre genus and monodromy order of a fibration over the circle given by a
// closed sphere-base piece with zero Euler number.
struct MonodromyData {
    Int order;
    Int genus;
};

MonodromyData monodromy_data(const SeifertPiece& p);

// Multiplicities (p, q) of the two splice directions of a linear2 manifold
// whose first homology has free rank one: q is the index of the image of the
// splice torus in the free quotient of the first piece, p the same for the
// second piece.
std::pair<Int, Int> splice_orders(const GraphManifold& m);

// Sphere-base piece with slopes x/p, y/q, z/r where x*qr + y*pr + z*pq = 1,
// x in (0,p), y in (0,q).
SeifertPiece brieskorn_sphere(const Int& p, const Int& q, const Int& r);

// Torus bundle over the circle with the given monodromy in SL(2,Z).
FiniteAbelianGroup torus_bundle_h1(const IntegerMatrix& monodromy);

} // namespace emb4
