#pragma once

#include <emb4/laurent.hpp>
#include <emb4/seifert.hpp>

namespace emb4 {

// Alexander polynomial of a disc-base piece with two or three exceptional
// fibres, as a polynomial in the fibre class.
LaurentPolynomial alexander_disc(const SeifertPiece& p);

// Alexander polynomial of the splice of two pieces with Alexander
// polynomials dm, dn and splice multiplicities p, q:
//   dm(t^p) dn(t^q) (t-1)^2 / ((t^p-1)(t^q-1)).
LaurentPolynomial splice_alexander(const LaurentPolynomial& dm, const LaurentPolynomial& dn,
                                   const Int& p, const Int& q);

struct TorusLoopAlexander {
    LaurentPolynomial delta;
    int betti1;
};

// Alexander polynomial of the annulus piece with one exceptional fibre
// alpha/beta whose two boundary tori are glued by the given matrix
// (determinant -1 required).
TorusLoopAlexander torus_loop_alexander(const Int& alpha, const Int& beta,
                                        const IntegerMatrix& gluing);

// Alexander polynomial of a closed sphere-base piece with zero Euler number,
// fibred over the circle.
LaurentPolynomial fibered_closed_alexander(const SeifertPiece& p);

// char. polynomial of the monodromy action, det(tI - A).
LaurentPolynomial torus_bundle_alexander(const IntegerMatrix& monodromy);

} // namespace emb4
