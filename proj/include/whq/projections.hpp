#ifndef WHQ_PROJECTIONS_HPP
#define WHQ_PROJECTIONS_HPP

#include "whq/structure.hpp"

namespace whq {

// The target/source projections and their barred variants, each H -> H.
struct ProjectionSet {
    Mor piL, piR, piLbar, piRbar;
};

ProjectionSet projection_set(const WeakStructure& S);

// All 32 named identity lines of the antipode-free projection calculus:
// 24 covering the unit/counit/convolution/translation laws of the four
// projections and 8 covering the convolution-idempotency and base-monoid
// equalities. Total: every line is always present in the report.
std::vector<CheckLine> check_projection_identities(const WeakStructure& S);

enum class Side { L, R };

// The base monoid carried by the image of the side projection, together
// with the actions of it on H.
struct BaseMonoid {
    Side side = Side::L;
    int rank = 0;
    Matrix inj;          // d x rank (the paper-style section i)
    Matrix proj;         // rank x d (the retraction p)
    Matrix eta_base;     // rank x 1
    Matrix mu_base;      // rank x rank^2
    Matrix right_action; // H (x) base -> H,  d x (d*rank)
    Matrix left_action;  // base (x) H -> H,  d x (rank*d)
};

// Splits the side projection and verifies the monoid and module laws on the
// image; MonoidAxiomFailure when they do not hold (unreachable for inputs
// passing the premises).
BaseMonoid base_monoid(const WeakStructure& S, Side side);

} // namespace whq

#endif
