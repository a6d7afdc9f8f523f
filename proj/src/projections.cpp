#include "whq/projections.hpp"

namespace whq {

ProjectionSet projection_set(const WeakStructure& S) {
    const Mor I = S.id(1);
    const Mor epsmu = compose(S.eps, S.mu);
    const Mor dm = compose(S.delta, S.eta);
    ProjectionSet p;
    p.piL = compose(tensor(epsmu, I), swap_then(tensor(dm, I), 2));
    p.piR = compose(tensor(I, epsmu), swap_then(tensor(I, dm), 1));
    p.piLbar = compose(tensor(I, epsmu), tensor(dm, I));
    p.piRbar = compose(tensor(epsmu, I), tensor(I, dm));
    return p;
}

std::vector<CheckLine> check_projection_identities(const WeakStructure& S) {
    const Mor I = S.id(1);
    const Mor& mu = S.mu;
    const Mor& eta = S.eta;
    const Mor& eps = S.eps;
    const Mor& delta = S.delta;
    const Mor epsmu = compose(eps, mu);
    const Mor dm = compose(delta, eta);
    const ProjectionSet P = projection_set(S);
    const Mor& piL = P.piL;
    const Mor& piR = P.piR;
    const Mor& piLb = P.piLbar;
    const Mor& piRb = P.piRbar;

    std::vector<NamedCheck> checks;
    auto add = [&](const std::string& id, std::function<bool()> f) {
        checks.push_back({id, std::move(f)});
    };

    add("pi-l-idempotent", [&] { return mor_equal(compose(piL, piL), piL); });
    add("pi-r-idempotent", [&] { return mor_equal(compose(piR, piR), piR); });
    add("pi-l-bar-idempotent", [&] { return mor_equal(compose(piLb, piLb), piLb); });
    add("pi-r-bar-idempotent", [&] { return mor_equal(compose(piRb, piRb), piRb); });

    add("unidadpi", [&] {
        return mor_equal(compose(piL, eta), eta) && mor_equal(compose(piR, eta), eta) &&
               mor_equal(compose(piLb, eta), eta) && mor_equal(compose(piRb, eta), eta);
    });
    add("counidadpi", [&] {
        return mor_equal(compose(eps, piL), eps) && mor_equal(compose(eps, piR), eps) &&
               mor_equal(compose(eps, piLb), eps) && mor_equal(compose(eps, piRb), eps);
    });
    add("pi-l", [&] {
        return mor_equal(convolve(S, piL, I), I) && mor_equal(convolve(S, I, piR), I);
    });

    add("mu-pi-l", [&] {
        Mor lhs = compose(mu, tensor(I, piL));
        Mor rhs = compose(tensor(epsmu, I), swap_then(tensor(delta, I), 2));
        return mor_equal(lhs, rhs);
    });
    add("mu-pi-r", [&] {
        Mor lhs = compose(mu, tensor(piR, I));
        Mor rhs = compose(tensor(I, epsmu), swap_then(tensor(I, delta), 1));
        return mor_equal(lhs, rhs);
    });
    add("mu-pi-l-var", [&] {
        Mor lhs = compose(mu, tensor(I, piLb));
        Mor rhs = compose(tensor(I, epsmu), tensor(delta, I));
        return mor_equal(lhs, rhs);
    });
    add("mu-pi-r-var", [&] {
        Mor lhs = compose(mu, tensor(piRb, I));
        Mor rhs = compose(tensor(epsmu, I), tensor(I, delta));
        return mor_equal(lhs, rhs);
    });
    add("delta-pi-l", [&] {
        Mor lhs = compose(tensor(I, piL), delta);
        Mor rhs = compose(tensor(mu, I), swap_then(tensor(dm, I), 2));
        return mor_equal(lhs, rhs);
    });
    add("delta-pi-r", [&] {
        Mor lhs = compose(tensor(piR, I), delta);
        Mor rhs = compose(tensor(I, mu), swap_then(tensor(I, dm), 1));
        return mor_equal(lhs, rhs);
    });
    add("pi-l-mu-pi-l", [&] {
        Mor mid = compose(piL, mu);
        return mor_equal(compose(mid, tensor(I, piL)), mid) &&
               mor_equal(compose(mid, tensor(I, piLb)), mid);
    });
    add("pi-delta-mu-pi-3", [&] {
        Mor mid = compose(delta, piL);
        return mor_equal(compose(tensor(I, piL), mid), mid) &&
               mor_equal(compose(tensor(I, piRb), mid), mid);
    });
    add("pi-l-barra-delta", [&] {
        Mor lhs = compose(tensor(piLb, I), delta);
        Mor rhs = compose(tensor(I, mu), tensor(dm, I));
        return mor_equal(lhs, rhs);
    });
    add("pi-r-barra-delta", [&] {
        Mor lhs = compose(tensor(I, piRb), delta);
        Mor rhs = compose(tensor(mu, I), tensor(I, dm));
        return mor_equal(lhs, rhs);
    });
    add("pi-delta-mu-pi-4", [&] {
        Mor mid = compose(delta, piR);
        return mor_equal(compose(tensor(piR, I), mid), mid) &&
               mor_equal(compose(tensor(piLb, I), mid), mid);
    });
    add("doblepiLmu", [&] {
        Mor lhs = compose(mu, tensor(piL, piL));
        return mor_equal(lhs, compose(piL, lhs));
    });
    add("doblepiRmu", [&] {
        Mor lhs = compose(mu, tensor(piR, piR));
        return mor_equal(lhs, compose(piR, lhs));
    });
    add("pi-composition-2-1", [&] { return mor_equal(compose(piRb, piL), piL); });
    add("pi-composition-2-2", [&] { return mor_equal(compose(piLb, piR), piR); });
    add("pi-composition-2-3", [&] { return mor_equal(compose(piL, piLb), piL); });
    add("pi-composition-2-4", [&] { return mor_equal(compose(piR, piRb), piR); });

    add("PiLRconvolution", [&] {
        return mor_equal(convolve(S, piL, piL), piL) && mor_equal(convolve(S, piR, piR), piR);
    });
    add("aux-1-monoid-hl", [&] {
        Mor lhs = compose(delta, compose(mu, tensor(piL, I)));
        Mor rhs = compose(tensor(mu, I), tensor(piL, delta));
        return mor_equal(lhs, rhs);
    });
    add("aux-2-monoid-hl", [&] {
        Mor lhs = compose(delta, compose(mu, tensor(I, piL)));
        Mor rhs = compose(tensor(mu, I), swap_then(tensor(delta, piL), 2));
        return mor_equal(lhs, rhs);
    });
    add("aux-1-monoid-hr", [&] {
        Mor lhs = compose(delta, compose(mu, tensor(I, piR)));
        Mor rhs = compose(tensor(I, mu), tensor(delta, piR));
        return mor_equal(lhs, rhs);
    });
    add("aux-2-monoid-hr", [&] {
        Mor lhs = compose(delta, compose(mu, tensor(piR, I)));
        Mor rhs = compose(tensor(I, mu), swap_then(tensor(piR, delta), 1));
        return mor_equal(lhs, rhs);
    });
    add("monoid-hl-1", [&] {
        Mor lhs = compose(mu, tensor(compose(mu, tensor(piL, I)), I));
        Mor rhs = compose(mu, tensor(piL, mu));
        return mor_equal(lhs, rhs);
    });
    add("monoid-hl-2", [&] {
        Mor lhs = compose(mu, tensor(I, compose(mu, tensor(piL, I))));
        Mor rhs = compose(mu, tensor(compose(mu, tensor(I, piL)), I));
        return mor_equal(lhs, rhs);
    });
    add("monoid-hl-3", [&] {
        Mor lhs = compose(mu, tensor(I, compose(mu, tensor(I, piL))));
        Mor rhs = compose(mu, tensor(mu, piL));
        return mor_equal(lhs, rhs);
    });

    return run_checks(checks);
}

BaseMonoid base_monoid(const WeakStructure& S, Side side) {
    const int d = S.dim;
    const FieldSpec& f = S.field;
    const ProjectionSet P = projection_set(S);
    const Mor& pi = side == Side::L ? P.piL : P.piR;
    Splitting sp = split_idempotent(pi);

    BaseMonoid b;
    b.side = side;
    b.rank = sp.rank;
    b.inj = sp.inj;
    b.proj = sp.proj;
    b.eta_base = b.proj * S.eta.m;
    b.mu_base = b.proj * S.mu.m * b.inj.kron(b.inj);

    const Matrix idr = Matrix::identity(b.rank, f);
    const Matrix idd = Matrix::identity(d, f);
    if (b.mu_base * b.eta_base.kron(idr) != idr || b.mu_base * idr.kron(b.eta_base) != idr)
        throw MonoidAxiomFailure("base unit law");
    if (b.mu_base * b.mu_base.kron(idr) != b.mu_base * idr.kron(b.mu_base))
        throw MonoidAxiomFailure("base associativity");

    b.right_action = S.mu.m * idd.kron(b.inj);
    b.left_action = S.mu.m * b.inj.kron(idd);
    if (b.right_action * idd.kron(b.eta_base) != idd)
        throw MonoidAxiomFailure("right module unit law");
    if (b.right_action * b.right_action.kron(idr) != b.right_action * idd.kron(b.mu_base))
        throw MonoidAxiomFailure("right module associativity law");
    if (b.left_action * b.eta_base.kron(idd) != idd)
        throw MonoidAxiomFailure("left module unit law");
    if (b.left_action * idr.kron(b.left_action) != b.left_action * b.mu_base.kron(idd))
        throw MonoidAxiomFailure("left module associativity law");
    return b;
}

} // namespace whq
