#ifndef WHQ_SYNTHESIS_HPP
#define WHQ_SYNTHESIS_HPP

#include "whq/galois.hpp"

namespace whq {

enum class SynthesisStatus {
    Synthesized,
    NotInvertibleF,
    NotInvertibleG,
    AlmostLinearityFailedF,
    AlmostLinearityFailedG,
    LambdaMismatch,
    AxiomFailure,
};

const char* to_string(SynthesisStatus s);

// Statuses are ordered like the hypotheses of the characterization:
// invertibility first, then almost-(co)linearity, then the antipode axioms.
// A failure always names the first broken hypothesis.
struct AntipodeResult {
    SynthesisStatus status = SynthesisStatus::Synthesized;
    std::string detail;
    std::optional<Mor> lambda, lambda_bar;
    std::vector<CheckLine> evidence;

    bool ok() const { return status == SynthesisStatus::Synthesized; }
};

// The seven antipode axioms for the stored antipode, named a4-*/b4-* by
// mode. The final coquasigroup line is checked in its type-correct form
// (right-hand side composed with the coproduct); the report notes this.
std::vector<CheckLine> verify_axioms(const WeakStructure& S);

// Builds the antipode from the fusion morphisms, or reports precisely which
// hypothesis fails. Any stored antipode is ignored.
AntipodeResult synthesize_antipode(const WeakStructure& S);

// The coquasigroup-mode synthesis: the direct route through the dual fusion
// morphisms, cross-checked against the transposed quasigroup-mode run on the
// dual structure. CrossCheckMismatch when the two routes disagree.
AntipodeResult dual_synthesis(const WeakStructure& S);

struct Lemma212 {
    bool associative = false;
    bool intertwines_f = false;
    bool intertwines_g = false;

    bool coherent() const {
        return associative == intertwines_f && associative == intertwines_g;
    }
};

// Associativity of the product versus the module-map property of the fusion
// morphisms; the three booleans are computed independently and coincide.
Lemma212 lemma212_check(const WeakStructure& S);

enum class Verdict {
    HopfAlgebra,
    WeakHopfAlgebra,
    HopfQuasigroup,
    HopfCoquasigroup,
    WeakHopfQuasigroup,
    WeakHopfCoquasigroup,
    NotRecognized,
};

const char* to_string(Verdict v);

struct StructureFlags {
    bool associative = false;
    bool coassociative = false;
    bool eps_multiplicative = false;
    bool delta_unital = false;
    bool pi_trivial = false;
};

struct Classification {
    Verdict verdict = Verdict::NotRecognized;
    std::string reason; // failing step when NotRecognized
    StructureFlags flags;
    std::optional<AntipodeResult> antipode;
    Verdict dual_verdict = Verdict::NotRecognized;
    std::vector<CheckLine> notes;
};

StructureFlags structure_flags(const WeakStructure& S);

// Routes through the special cases: associative+coassociative inputs need
// only invertibility of the fusion morphism (almost-linearity is derived and
// re-verified), trivial-projection inputs go through the raw Galois maps,
// everything else takes the full synthesis. A dualized pass must agree.
Classification classify(const WeakStructure& S);

} // namespace whq

#endif
