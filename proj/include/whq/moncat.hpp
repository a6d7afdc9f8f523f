#ifndef WHQ_MONCAT_HPP
#define WHQ_MONCAT_HPP

#include "whq/matrix.hpp"

namespace whq {

// A morphism H^(x)m -> H^(x)n of the strict symmetric monoidal category
// generated by tensor powers of a d-dimensional object H. Arity 0 is the
// unit object K (dimension 1). The tensor index convention is row-major:
// e_i (x) e_j |-> i*d + j.
struct Mor {
    int dim = 1;
    int src = 0;
    int dst = 0;
    Matrix m;

    Mor() = default;
    Mor(int d, int src_arity, int dst_arity, Matrix mat);

    const FieldSpec& field() const { return m.field(); }
};

int tensor_pow(int d, int arity);

Mor identity_mor(int d, int arity, const FieldSpec& f);
Mor zero_mor(int d, int src_arity, int dst_arity, const FieldSpec& f);

Mor compose(const Mor& f, const Mor& g); // f after g
Mor tensor(const Mor& f, const Mor& g);
Mor swap_mor(int d, int total_arity, int pos, const FieldSpec& f);
bool mor_equal(const Mor& f, const Mor& g);
Mor invert(const Mor& f); // Singular(rank deficit) when not invertible
Mor transpose(const Mor& f);

// Composition chains read right-to-left, like the written composites.
Mor chain(std::initializer_list<Mor> fs);

// swap(dst, pos) o f and f o swap(src, pos) as index permutations, without
// materializing the permutation matrix.
Mor swap_then(const Mor& f, int pos);
Mor then_swap(const Mor& f, int pos);

struct Splitting {
    Mor nabla;   // the idempotent, on H^(x)k
    int rank = 0;
    Matrix inj;  // d^k x rank, the section (the i / j factor)
    Matrix proj; // rank x d^k, the retraction (the p / q factor)
};

// Deterministic splitting through the image: inj = pivot columns of nabla,
// proj = nonzero rows of its reduced echelon form. Then inj*proj = nabla and
// proj*inj = id exactly.
Splitting split_idempotent(const Mor& nabla);

} // namespace whq

#endif
