#include "whq/galois.hpp"

namespace whq {

Mor galois_beta(const WeakStructure& S) {
    const Mor I = S.id(1);
    return compose(tensor(S.mu, I), tensor(I, S.delta));
}

Mor galois_gamma(const WeakStructure& S) {
    const Mor I = S.id(1);
    return compose(tensor(I, S.mu), tensor(S.delta, I));
}

Mor candidate_beta_bar(const WeakStructure& S) {
    if (!S.lambda) throw MissingAntipode();
    const Mor I = S.id(1);
    return compose(tensor(compose(S.mu, tensor(I, *S.lambda)), I), tensor(I, S.delta));
}

Mor candidate_gamma_bar(const WeakStructure& S) {
    if (!S.lambda) throw MissingAntipode();
    const Mor I = S.id(1);
    return compose(tensor(I, compose(S.mu, tensor(*S.lambda, I))), tensor(S.delta, I));
}

FusionMaps fusion(const WeakStructure& S) {
    FusionMaps fm;
    fm.beta = galois_beta(S);
    fm.gamma = galois_gamma(S);
    if (S.lambda) {
        fm.beta_bar = candidate_beta_bar(S);
        fm.gamma_bar = candidate_gamma_bar(S);
    }
    fm.omegas = omega_family(S);
    fm.f = fm.omegas.s_r1.proj * fm.beta.m * fm.omegas.s_l1.inj;
    fm.g = fm.omegas.s_l2.proj * fm.gamma.m * fm.omegas.s_r2.inj;
    fm.h = fm.omegas.s_r2.proj * fm.gamma.m * fm.omegas.s_l2.inj;
    fm.s = fm.omegas.s_l1.proj * fm.beta.m * fm.omegas.s_r1.inj;
    return fm;
}

bool almost_linear(const WeakStructure& S, const Mor& phi, LinSide side) {
    if (phi.src != 2 || phi.dst != 2)
        throw ArityMismatch("almost-linearity is defined for H(x)H endomorphisms");
    const Mor I = S.id(1);
    Mor rhs = side == LinSide::Left
                  ? compose(tensor(S.mu, I), tensor(I, compose(phi, tensor(S.eta, I))))
                  : compose(tensor(I, S.mu), tensor(compose(phi, tensor(I, S.eta)), I));
    return mor_equal(phi, rhs);
}

bool almost_colinear(const WeakStructure& S, const Mor& phi, LinSide side) {
    if (phi.src != 2 || phi.dst != 2)
        throw ArityMismatch("almost-colinearity is defined for H(x)H endomorphisms");
    const Mor I = S.id(1);
    Mor rhs = side == LinSide::Left
                  ? compose(tensor(I, compose(tensor(S.eps, I), phi)), tensor(S.delta, I))
                  : compose(tensor(compose(tensor(I, S.eps), phi), I), tensor(I, S.delta));
    return mor_equal(phi, rhs);
}

std::vector<CheckLine> check_prop27(const WeakStructure& S) {
    const Mor beta = galois_beta(S);
    const Mor gamma = galois_gamma(S);
    const OmegaFamily O = omega_family(S);
    const ProjectionSet P = projection_set(S);

    std::vector<NamedCheck> checks;
    auto add = [&](const std::string& id, std::function<bool()> f) {
        checks.push_back({id, std::move(f)});
    };

    add("prop27-i-beta", [&] {
        return almost_linear(S, beta, LinSide::Left) &&
               almost_colinear(S, beta, LinSide::Right);
    });
    add("prop27-ii-gamma", [&] {
        return almost_linear(S, gamma, LinSide::Right) &&
               almost_colinear(S, gamma, LinSide::Left);
    });
    add("prop27-iii-omega1", [&] {
        return almost_linear(S, O.omega_l1, LinSide::Left) &&
               almost_colinear(S, O.omega_l1, LinSide::Right) &&
               almost_linear(S, O.omega_r1, LinSide::Left) &&
               almost_colinear(S, O.omega_r1, LinSide::Right);
    });
    add("prop27-iv-omega2", [&] {
        return almost_linear(S, O.omega_l2, LinSide::Right) &&
               almost_colinear(S, O.omega_l2, LinSide::Left) &&
               almost_linear(S, O.omega_r2, LinSide::Right) &&
               almost_colinear(S, O.omega_r2, LinSide::Left);
    });
    add("prop27-v-unconditional",
        [&] { return almost_linear(S, O.omega_l1, LinSide::Right); });
    add("prop27-v-biconditional", [&] {
        return almost_colinear(S, O.omega_l1, LinSide::Left) ==
               mor_equal(P.piL, P.piLbar);
    });
    add("prop27-vi-unconditional",
        [&] { return almost_colinear(S, O.omega_r1, LinSide::Left); });
    add("prop27-vi-biconditional", [&] {
        return almost_linear(S, O.omega_r1, LinSide::Right) ==
               mor_equal(P.piLbar, P.piR);
    });
    add("prop27-vii-unconditional",
        [&] { return almost_colinear(S, O.omega_l2, LinSide::Right); });
    add("prop27-vii-biconditional", [&] {
        return almost_linear(S, O.omega_l2, LinSide::Left) ==
               mor_equal(P.piL, P.piRbar);
    });
    add("prop27-viii-unconditional",
        [&] { return almost_linear(S, O.omega_r2, LinSide::Left); });
    add("prop27-viii-biconditional", [&] {
        return almost_colinear(S, O.omega_r2, LinSide::Right) ==
               mor_equal(P.piR, P.piRbar);
    });
    add("prop27-remark-pi-equivalence", [&] {
        return mor_equal(P.piL, P.piLbar) == mor_equal(P.piR, P.piRbar);
    });

    return run_checks(checks);
}

} // namespace whq
