#ifndef WHQ_STRUCTURE_HPP
#define WHQ_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "whq/moncat.hpp"
#include "whq/report.hpp"

namespace whq {

enum class Mode { Quasigroup, Coquasigroup };

// Structure constants of a unital magma + counital comagma on a
// d-dimensional space, with an optional antipode. Quasigroup mode demands a
// coassociative coproduct (the product may be non-associative); Coquasigroup
// mode demands an associative product.
struct WeakStructure {
    int dim = 1;
    FieldSpec field{};
    Mor eta;    // 0 -> 1
    Mor mu;     // 2 -> 1
    Mor eps;    // 1 -> 0
    Mor delta;  // 1 -> 2
    std::optional<Mor> lambda; // 1 -> 1
    Mode mode = Mode::Quasigroup;
    std::vector<std::string> basis; // optional, empty when unnamed

    Mor id(int arity) const { return identity_mor(dim, arity, field); }
    Mor sw(int total, int pos) const { return swap_mor(dim, total, pos, field); }
};

struct PremiseReport {
    std::vector<CheckLine> lines;
    bool pass = false;
    std::string note; // records the braiding convention
};

// Exact verdicts for the antipode-free axioms: (co)unit laws,
// (co)associativity per mode, and the three compatibility axiom families.
PremiseReport validate_premises(const WeakStructure& S);

Mor convolve(const WeakStructure& S, const Mor& f, const Mor& g);

// --- builders ------------------------------------------------------------

WeakStructure group_algebra(const std::vector<std::vector<int>>& table,
                            const FieldSpec& f = {},
                            const std::vector<std::string>& labels = {});

struct GroupoidData {
    int objects = 0;
    std::vector<int> source, target;              // per arrow
    std::vector<std::vector<int>> composition;    // [g][h] = g o h, -1 if undefined
    std::vector<std::string> labels;              // optional
};

WeakStructure groupoid_algebra(const GroupoidData& g, const FieldSpec& f = {});

WeakStructure loop_algebra(const std::vector<std::vector<int>>& latin,
                           const FieldSpec& f = {},
                           const std::vector<std::string>& labels = {});

WeakStructure trivial_structure(const FieldSpec& f = {});

// --- transforms ----------------------------------------------------------

WeakStructure dualize(const WeakStructure& S);
WeakStructure strip_lambda(const WeakStructure& S);

enum class PerturbTarget { Mult, Comult, Unit, Counit };

// Deterministically flips one structure-constant entry (v -> 1-v) selected
// from the seed. Applying the same perturbation twice restores the input.
WeakStructure perturb(const WeakStructure& S, PerturbTarget target, std::uint64_t seed);

// --- serialization -------------------------------------------------------

std::string save_structure(const WeakStructure& S); // canonical form
WeakStructure load_structure(const std::string& json_text);
WeakStructure load_structure_file(const std::string& path);
void save_structure_file(const WeakStructure& S, const std::string& path);

} // namespace whq

#endif
