#ifndef WHQ_SPLITTING_HPP
#define WHQ_SPLITTING_HPP

#include "whq/projections.hpp"

namespace whq {

// The four idempotents on H (x) H together with their splittings; the split
// images are the corrected (co)domains of the fusion maps.
struct OmegaFamily {
    Mor omega_l1, omega_r1, omega_l2, omega_r2;
    Splitting s_l1, s_r1, s_l2, s_r2;

    const Splitting& at(Side side, int idx) const;
};

OmegaFamily omega_family(const WeakStructure& S);

// Idempotency and the product-intertwining laws of the Omega morphisms.
std::vector<CheckLine> check_omega_identities(const WeakStructure& S);

struct ModuleData {
    int rank = 0;
    // right module: rank x (rank*base);  left module: rank x (base*rank)
    Matrix action;
};

struct CoequalizerResult {
    Matrix top, bottom; // the parallel pair
    int rank = 0;       // dimension of the coequalizer object
    Matrix quotient;    // full-row-rank map onto it
};

// The relative tensor product over the side base monoid, computed as the
// cokernel of the difference of the parallel pair. Side L takes a right
// module (M (x)_{H_L} H), side R a left module (H (x)_{H_R} M).
CoequalizerResult relative_tensor(const WeakStructure& S, const ModuleData& M, Side side);

struct LemmaReport {
    bool skipped = false;
    std::string note;
    std::vector<CheckLine> lines;
};

// Realizes the coequalizer/equalizer characterizations of the split images:
// comparison isomorphisms for Omega_L^1 / Omega_R^2 and exact column-space
// equality for Omega_L^2 / Omega_R^1. Skips when the premises fail.
LemmaReport check_lemma_diagrams(const WeakStructure& S);

} // namespace whq

#endif
