#ifndef WHQ_GALOIS_HPP
#define WHQ_GALOIS_HPP

#include <optional>

#include "whq/splitting.hpp"

namespace whq {

enum class LinSide { Left, Right };

// Galois maps and the fusion morphisms between the split Omega images. The
// fusion matrices are stored together with the Omega splittings they were
// built from, so every later formula reuses the same q/j factors.
struct FusionMaps {
    Mor beta, gamma;                          // 2 -> 2
    std::optional<Mor> beta_bar, gamma_bar;   // present when the antipode is
    OmegaFamily omegas;
    Matrix f; // X_L^1 -> X_R^1
    Matrix g; // X_R^2 -> X_L^2
    Matrix h; // X_L^2 -> X_R^2
    Matrix s; // X_R^1 -> X_L^1
};

Mor galois_beta(const WeakStructure& S);
Mor galois_gamma(const WeakStructure& S);
// MissingAntipode when the structure has none.
Mor candidate_beta_bar(const WeakStructure& S);
Mor candidate_gamma_bar(const WeakStructure& S);

FusionMaps fusion(const WeakStructure& S);

bool almost_linear(const WeakStructure& S, const Mor& phi, LinSide side);
bool almost_colinear(const WeakStructure& S, const Mor& phi, LinSide side);

// Almost-(co)linearity of the Galois and Omega morphisms: the unconditional
// statements asserted outright, the conditional ones verified as genuine
// biconditionals with both sides evaluated independently.
std::vector<CheckLine> check_prop27(const WeakStructure& S);

} // namespace whq

#endif
