#include "whq/synthesis.hpp"

namespace whq {

const char* to_string(SynthesisStatus s) {
    switch (s) {
        case SynthesisStatus::Synthesized: return "Synthesized";
        case SynthesisStatus::NotInvertibleF: return "NotInvertibleF";
        case SynthesisStatus::NotInvertibleG: return "NotInvertibleG";
        case SynthesisStatus::AlmostLinearityFailedF: return "AlmostLinearityFailedF";
        case SynthesisStatus::AlmostLinearityFailedG: return "AlmostLinearityFailedG";
        case SynthesisStatus::LambdaMismatch: return "LambdaMismatch";
        case SynthesisStatus::AxiomFailure: return "AxiomFailure";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::HopfAlgebra: return "HopfAlgebra";
        case Verdict::WeakHopfAlgebra: return "WeakHopfAlgebra";
        case Verdict::HopfQuasigroup: return "HopfQuasigroup";
        case Verdict::HopfCoquasigroup: return "HopfCoquasigroup";
        case Verdict::WeakHopfQuasigroup: return "WeakHopfQuasigroup";
        case Verdict::WeakHopfCoquasigroup: return "WeakHopfCoquasigroup";
        case Verdict::NotRecognized: return "NotRecognized";
    }
    return "?";
}

namespace {

std::string first_failing(const std::vector<CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.holds) return l.id;
    return "";
}

} // namespace

std::vector<CheckLine> verify_axioms(const WeakStructure& S) {
    if (!S.lambda) throw MissingAntipode();
    const Mor I = S.id(1);
    const Mor& mu = S.mu;
    const Mor& delta = S.delta;
    const Mor lam = *S.lambda;
    const ProjectionSet P = projection_set(S);
    const bool quasi = S.mode == Mode::Quasigroup;
    const std::string p = quasi ? "a4-" : "b4-";

    const Mor mu_lam_left = compose(mu, tensor(lam, I));  // mu o (lam (x) H)
    const Mor mu_lam_right = compose(mu, tensor(I, lam)); // mu o (H (x) lam)

    std::vector<NamedCheck> checks;
    checks.push_back({p + "1", [&] { return mor_equal(P.piL, convolve(S, I, lam)); }});
    checks.push_back({p + "2", [&] { return mor_equal(P.piR, convolve(S, lam, I)); }});
    checks.push_back({p + "3", [&] {
                          return mor_equal(convolve(S, lam, P.piL), lam) &&
                                 mor_equal(convolve(S, P.piR, lam), lam);
                      }});
    if (quasi) {
        checks.push_back({p + "4", [&] {
                              Mor lhs = compose(mu, compose(tensor(lam, mu), tensor(delta, I)));
                              return mor_equal(lhs, compose(mu, tensor(P.piR, I)));
                          }});
        checks.push_back({p + "5", [&] {
                              Mor lhs = compose(
                                  mu, compose(tensor(I, mu_lam_left), tensor(delta, I)));
                              return mor_equal(lhs, compose(mu, tensor(P.piL, I)));
                          }});
        checks.push_back({p + "6", [&] {
                              Mor lhs = compose(mu, compose(tensor(mu, lam), tensor(I, delta)));
                              return mor_equal(lhs, compose(mu, tensor(I, P.piL)));
                          }});
        checks.push_back({p + "7", [&] {
                              Mor lhs = compose(
                                  mu, compose(tensor(mu_lam_right, I), tensor(I, delta)));
                              return mor_equal(lhs, compose(mu, tensor(I, P.piR)));
                          }});
    } else {
        checks.push_back({p + "4", [&] {
                              Mor lhs = chain({tensor(mu, I), tensor(lam, delta), delta});
                              return mor_equal(lhs, compose(tensor(P.piR, I), delta));
                          }});
        checks.push_back({p + "5", [&] {
                              Mor lhs = chain(
                                  {tensor(mu_lam_right, I), tensor(I, delta), delta});
                              return mor_equal(lhs, compose(tensor(P.piL, I), delta));
                          }});
        checks.push_back({p + "6", [&] {
                              Mor lhs = chain({tensor(I, mu), tensor(delta, lam), delta});
                              return mor_equal(lhs, compose(tensor(I, P.piL), delta));
                          }});
        checks.push_back({p + "7", [&] {
                              Mor lhs = chain(
                                  {tensor(I, mu_lam_left), tensor(delta, I), delta});
                              return mor_equal(lhs, compose(tensor(I, P.piR), delta));
                          }});
    }
    auto lines = run_checks(checks);
    if (!quasi) lines.back().note = "right-hand side in the type-correct form (H (x) Pi_R) o delta";
    return lines;
}

namespace {

struct InvertOutcome {
    bool ok = false;
    Matrix inverse;
    std::string detail;
};

InvertOutcome try_invert(const Matrix& m, int dom_rank, int cod_rank) {
    InvertOutcome o;
    if (dom_rank != cod_rank) {
        o.detail = "domain rank " + std::to_string(dom_rank) + " != codomain rank " +
                   std::to_string(cod_rank);
        return o;
    }
    try {
        o.inverse = m.inverse();
        o.ok = true;
    } catch (const Singular& s) {
        o.detail = "rank deficit " + std::to_string(s.rank_deficit);
    }
    return o;
}

} // namespace

AntipodeResult synthesize_antipode(const WeakStructure& S) {
    AntipodeResult r;
    const Mor I = S.id(1);
    FusionMaps fm = fusion(S);
    const Splitting& L1 = fm.omegas.s_l1;
    const Splitting& R1 = fm.omegas.s_r1;
    const Splitting& L2 = fm.omegas.s_l2;
    const Splitting& R2 = fm.omegas.s_r2;

    InvertOutcome fi = try_invert(fm.f, L1.rank, R1.rank);
    r.evidence.push_back({"f-invertible", fi.ok, fi.detail});
    if (!fi.ok) {
        r.status = SynthesisStatus::NotInvertibleF;
        r.detail = fi.detail;
        return r;
    }
    InvertOutcome gi = try_invert(fm.g, R2.rank, L2.rank);
    r.evidence.push_back({"g-invertible", gi.ok, gi.detail});
    if (!gi.ok) {
        r.status = SynthesisStatus::NotInvertibleG;
        r.detail = gi.detail;
        return r;
    }

    Mor Jf(S.dim, 2, 2, L1.inj * fi.inverse * R1.proj);
    bool lin_f = almost_linear(S, Jf, LinSide::Left);
    r.evidence.push_back({"f-inverse-almost-left-linear", lin_f, ""});
    if (!lin_f) {
        r.status = SynthesisStatus::AlmostLinearityFailedF;
        r.detail = "j o f^-1 o q is not almost left linear";
        return r;
    }
    Mor Jg(S.dim, 2, 2, R2.inj * gi.inverse * L2.proj);
    bool lin_g = almost_linear(S, Jg, LinSide::Right);
    r.evidence.push_back({"g-inverse-almost-right-linear", lin_g, ""});
    if (!lin_g) {
        r.status = SynthesisStatus::AlmostLinearityFailedG;
        r.detail = "j o g^-1 o q is not almost right linear";
        return r;
    }

    r.lambda = compose(tensor(I, S.eps), compose(Jf, tensor(S.eta, I)));
    r.lambda_bar = compose(tensor(S.eps, I), compose(Jg, tensor(I, S.eta)));
    bool agree = mor_equal(*r.lambda, *r.lambda_bar);
    r.evidence.push_back({"lambda-agreement", agree, ""});
    if (!agree) {
        r.status = SynthesisStatus::LambdaMismatch;
        r.detail = "the two candidate antipodes differ";
        return r;
    }

    WeakStructure T = S;
    T.lambda = r.lambda;
    auto axioms = verify_axioms(T);
    r.evidence.insert(r.evidence.end(), axioms.begin(), axioms.end());
    if (!all_hold(axioms)) {
        r.status = SynthesisStatus::AxiomFailure;
        r.detail = "axiom " + first_failing(axioms) + " fails";
        return r;
    }
    r.status = SynthesisStatus::Synthesized;
    return r;
}

AntipodeResult dual_synthesis(const WeakStructure& S) {
    if (S.mode != Mode::Coquasigroup)
        throw Error("dual synthesis requires a coquasigroup-mode structure");
    AntipodeResult r;
    const Mor I = S.id(1);
    FusionMaps fm = fusion(S);
    const Splitting& L1 = fm.omegas.s_l1;
    const Splitting& R1 = fm.omegas.s_r1;
    const Splitting& L2 = fm.omegas.s_l2;
    const Splitting& R2 = fm.omegas.s_r2;

    InvertOutcome hi = try_invert(fm.h, L2.rank, R2.rank);
    r.evidence.push_back({"h-invertible", hi.ok, hi.detail});
    if (!hi.ok) {
        r.status = SynthesisStatus::NotInvertibleF;
        r.detail = hi.detail;
        return r;
    }
    InvertOutcome si = try_invert(fm.s, R1.rank, L1.rank);
    r.evidence.push_back({"s-invertible", si.ok, si.detail});
    if (!si.ok) {
        r.status = SynthesisStatus::NotInvertibleG;
        r.detail = si.detail;
        return r;
    }

    Mor Jh(S.dim, 2, 2, L2.inj * hi.inverse * R2.proj);
    bool colin_h = almost_colinear(S, Jh, LinSide::Left);
    r.evidence.push_back({"h-inverse-almost-left-colinear", colin_h, ""});
    if (!colin_h) {
        r.status = SynthesisStatus::AlmostLinearityFailedF;
        r.detail = "j o h^-1 o q is not almost left colinear";
        return r;
    }
    Mor Js(S.dim, 2, 2, R1.inj * si.inverse * L1.proj);
    bool colin_s = almost_colinear(S, Js, LinSide::Right);
    r.evidence.push_back({"s-inverse-almost-right-colinear", colin_s, ""});
    if (!colin_s) {
        r.status = SynthesisStatus::AlmostLinearityFailedG;
        r.detail = "j o s^-1 o q is not almost right colinear";
        return r;
    }

    r.lambda = compose(tensor(S.eps, I), compose(Jh, tensor(I, S.eta)));
    r.lambda_bar = compose(tensor(I, S.eps), compose(Js, tensor(S.eta, I)));
    bool agree = mor_equal(*r.lambda, *r.lambda_bar);
    r.evidence.push_back({"lambda-agreement", agree, ""});
    if (!agree) {
        r.status = SynthesisStatus::LambdaMismatch;
        r.detail = "the two candidate antipodes differ";
    } else {
        WeakStructure T = S;
        T.lambda = r.lambda;
        auto axioms = verify_axioms(T);
        r.evidence.insert(r.evidence.end(), axioms.begin(), axioms.end());
        if (!all_hold(axioms)) {
            r.status = SynthesisStatus::AxiomFailure;
            r.detail = "axiom " + first_failing(axioms) + " fails";
        } else {
            r.status = SynthesisStatus::Synthesized;
        }
    }

    // independent route: transpose the quasigroup-mode synthesis on the dual
    AntipodeResult via_dual = synthesize_antipode(dualize(S));
    if (via_dual.ok() != r.ok())
        throw CrossCheckMismatch(std::string("direct route ") + to_string(r.status) +
                                 " vs transposed route " + to_string(via_dual.status));
    if (r.ok()) {
        Mor t = transpose(*via_dual.lambda);
        if (!mor_equal(*r.lambda, t))
            throw CrossCheckMismatch("direct and transposed antipodes differ");
        r.evidence.push_back({"dual-route-agreement", true, ""});
    }
    return r;
}

Lemma212 lemma212_check(const WeakStructure& S) {
    const Mor I = S.id(1);
    const FieldSpec& f = S.field;
    FusionMaps fm = fusion(S);
    const OmegaFamily& O = fm.omegas;
    const Matrix idd = Matrix::identity(S.dim, f);
    const Matrix muI = tensor(S.mu, I).m;
    const Matrix Imu = tensor(I, S.mu).m;

    Matrix phi_r1 = O.s_r1.proj * (muI * idd.kron(O.s_r1.inj));
    Matrix phi_l1 = O.s_l1.proj * (muI * idd.kron(O.s_l1.inj));
    Matrix psi_r2 = O.s_r2.proj * (Imu * O.s_r2.inj.kron(idd));
    Matrix psi_l2 = O.s_l2.proj * (Imu * O.s_l2.inj.kron(idd));

    Lemma212 r;
    r.associative =
        mor_equal(compose(S.mu, tensor(S.mu, I)), compose(S.mu, tensor(I, S.mu)));
    r.intertwines_f = fm.f * phi_l1 == phi_r1 * idd.kron(fm.f);
    r.intertwines_g = fm.g * psi_r2 == psi_l2 * fm.g.kron(idd);
    return r;
}

StructureFlags structure_flags(const WeakStructure& S) {
    const Mor I = S.id(1);
    StructureFlags fl;
    fl.associative =
        mor_equal(compose(S.mu, tensor(S.mu, I)), compose(S.mu, tensor(I, S.mu)));
    fl.coassociative = mor_equal(compose(tensor(S.delta, I), S.delta),
                                 compose(tensor(I, S.delta), S.delta));
    fl.eps_multiplicative =
        mor_equal(compose(S.eps, S.mu), tensor(S.eps, S.eps)) &&
        mor_equal(compose(S.eps, S.eta), identity_mor(S.dim, 0, S.field));
    fl.delta_unital = mor_equal(compose(S.delta, S.eta), tensor(S.eta, S.eta));
    const ProjectionSet P = projection_set(S);
    const Mor etaeps = compose(S.eta, S.eps);
    fl.pi_trivial = mor_equal(P.piL, etaeps) && mor_equal(P.piR, etaeps) &&
                    mor_equal(P.piLbar, etaeps) && mor_equal(P.piRbar, etaeps);
    return fl;
}

namespace {

Verdict partner(Verdict v) {
    switch (v) {
        case Verdict::HopfQuasigroup: return Verdict::HopfCoquasigroup;
        case Verdict::HopfCoquasigroup: return Verdict::HopfQuasigroup;
        case Verdict::WeakHopfQuasigroup: return Verdict::WeakHopfCoquasigroup;
        case Verdict::WeakHopfCoquasigroup: return Verdict::WeakHopfQuasigroup;
        default: return v;
    }
}

struct RouteResult {
    Verdict verdict = Verdict::NotRecognized;
    std::string reason;
    StructureFlags flags;
    std::optional<AntipodeResult> antipode;
    std::vector<CheckLine> notes;
};

RouteResult route_one(const WeakStructure& S) {
    RouteResult r;
    PremiseReport pre = validate_premises(S);
    if (!pre.pass) {
        r.reason = "premise " + first_failing(pre.lines) + " fails";
        return r;
    }
    r.flags = structure_flags(S);
    const bool alg = r.flags.associative && r.flags.coassociative;
    const bool hopf_qg = r.flags.eps_multiplicative && r.flags.delta_unital;
    AntipodeResult ar;
    std::string path;
    if (alg) {
        // fusion invertibility alone decides; the almost-linearity the full
        // synthesis re-checks is forced by the intertwining property here
        path = "weak Hopf algebra route";
        Lemma212 lemma = lemma212_check(S);
        r.notes.push_back({"lemma212-all-three-equal", lemma.coherent(), ""});
        r.notes.push_back(
            {"lemma212-intertwinings-hold", lemma.intertwines_f && lemma.intertwines_g, ""});
        ar = synthesize_antipode(S);
    } else if (hopf_qg) {
        path = "Hopf (co)quasigroup route";
        OmegaFamily O = omega_family(S);
        const Mor id2 = S.id(2);
        bool trivial = mor_equal(O.omega_l1, id2) && mor_equal(O.omega_r1, id2) &&
                       mor_equal(O.omega_l2, id2) && mor_equal(O.omega_r2, id2);
        r.notes.push_back({"omega-trivial", trivial, ""});
        ar = S.mode == Mode::Quasigroup ? synthesize_antipode(S) : dual_synthesis(S);
    } else {
        path = "full route";
        ar = S.mode == Mode::Quasigroup ? synthesize_antipode(S) : dual_synthesis(S);
    }
    r.antipode = ar;
    if (!ar.ok()) {
        r.reason = path + ": " + to_string(ar.status) +
                   (ar.detail.empty() ? "" : " (" + ar.detail + ")");
        return r;
    }
    if (alg)
        r.verdict = hopf_qg ? Verdict::HopfAlgebra : Verdict::WeakHopfAlgebra;
    else if (hopf_qg)
        r.verdict = S.mode == Mode::Quasigroup ? Verdict::HopfQuasigroup
                                               : Verdict::HopfCoquasigroup;
    else
        r.verdict = S.mode == Mode::Quasigroup ? Verdict::WeakHopfQuasigroup
                                               : Verdict::WeakHopfCoquasigroup;
    return r;
}

} // namespace

Classification classify(const WeakStructure& S) {
    Classification c;
    RouteResult main = route_one(S);
    c.verdict = main.verdict;
    c.reason = main.reason;
    c.flags = main.flags;
    c.antipode = main.antipode;
    c.notes = main.notes;

    RouteResult dual = route_one(dualize(S));
    c.dual_verdict = dual.verdict;
    bool consistent = dual.verdict == partner(main.verdict);
    c.notes.push_back({"dual-pass-consistent", consistent, ""});
    if (!consistent) {
        c.verdict = Verdict::NotRecognized;
        c.reason = std::string("dual pass disagrees: ") + to_string(main.verdict) + " vs " +
                   to_string(dual.verdict);
        return c;
    }
    if (main.antipode && main.antipode->ok() && dual.antipode && dual.antipode->ok()) {
        bool lambdas_match =
            mor_equal(*main.antipode->lambda, transpose(*dual.antipode->lambda));
        c.notes.push_back({"dual-antipode-transpose", lambdas_match, ""});
        if (!lambdas_match) {
            c.verdict = Verdict::NotRecognized;
            c.reason = "dual pass antipode is not the transpose";
        }
    }
    return c;
}

} // namespace whq
