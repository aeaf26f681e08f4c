#pragma once

#include <emb4/matrix.hpp>
#include <optional>

namespace emb4 {

// Which of the four families of embeddable Brieskorn spheres contains the
// triple, if any:
//   1. (p, pa+1, pa+2) or (p, pa-2, pa-1), p odd
//   2. (p, pa-1, pa+1), p even, a odd
//   3. (2,3,13), (2,5,7)
//   4. (2,5,9), (3,4,7)
std::optional<int> casson_harer_case(const Int& p, const Int& q, const Int& r);

// Membership in the families
//   (p, pa+-1, 2p(pa+-1) + pa-+1), p even, a odd
//   (p, pa+-1, 2p(pa+-1) + pa+-2), p odd
//   (p, pa+-2, 2p(pa+-2) + pa+-1), p odd
// whose members bound contractible manifolds.
bool stern_case(const Int& p, const Int& q, const Int& r);

// Circle bundle over a surface of Euler characteristic chi with Euler number
// w2: embeddable iff w2 is in {-1,0,1} (orientable base) or in
// {2chi-4, 2chi, ..., 4-2chi} (nonorientable base).
bool circle_bundle_embeds(bool base_orientable, const Int& chi, const Int& w2);

// Connected sum of the lens spaces (p,q) and (pp,qp): embeddable iff the
// summands are orientation-reversing diffeomorphic with odd fundamental
// group, i.e. p = pp odd and qp = -q or q*qp = -1 mod p.
bool lens_sum_embeds(const Int& p, const Int& q, const Int& pp, const Int& qp);

} // namespace emb4
