#ifndef WHQ_EXAMPLES_HPP
#define WHQ_EXAMPLES_HPP

#include "whq/structure.hpp"

namespace whq {

std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> symmetric3_table();
// The 8-element Steiner loop of the Fano plane: x*x = e, x*y = the third
// point of the line through x and y. Commutative, non-associative, with
// the inverse property and every element its own inverse.
std::vector<std::vector<int>> steiner_fano_table();
GroupoidData pair_groupoid_data();

WeakStructure example_trivial(const FieldSpec& f = {});
WeakStructure example_z2(const FieldSpec& f = {});
WeakStructure example_z3(const FieldSpec& f = {});
WeakStructure example_s3(const FieldSpec& f = {});
WeakStructure example_pair_groupoid(const FieldSpec& f = {});
WeakStructure example_steiner_fano(const FieldSpec& f = {});

struct NamedExample {
    std::string name;
    WeakStructure value;
};

// Every bundled example, in acceptance order.
std::vector<NamedExample> bundled_examples(const FieldSpec& f = {});

} // namespace whq

#endif
