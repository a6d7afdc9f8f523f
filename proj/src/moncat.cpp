#include "whq/moncat.hpp"

#include <string>

namespace whq {

int tensor_pow(int d, int arity) {
    int n = 1;
    for (int i = 0; i < arity; ++i) n *= d;
    return n;
}

Mor::Mor(int d, int src_arity, int dst_arity, Matrix mat)
    : dim(d), src(src_arity), dst(dst_arity), m(std::move(mat)) {
    if (m.rows() != tensor_pow(dim, dst) || m.cols() != tensor_pow(dim, src))
        throw ArityMismatch("morphism matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " +
                            std::to_string(tensor_pow(dim, dst)) + "x" +
                            std::to_string(tensor_pow(dim, src)));
}

Mor identity_mor(int d, int arity, const FieldSpec& f) {
    return Mor(d, arity, arity, Matrix::identity(tensor_pow(d, arity), f));
}

Mor zero_mor(int d, int src_arity, int dst_arity, const FieldSpec& f) {
    return Mor(d, src_arity, dst_arity,
               Matrix(tensor_pow(d, dst_arity), tensor_pow(d, src_arity), f));
}

Mor compose(const Mor& f, const Mor& g) {
    if (f.dim != g.dim)
        throw ArityMismatch("composition across different base objects");
    if (g.dst != f.src)
        throw ArityMismatch("compose: inner arities " + std::to_string(g.dst) + " -> " +
                            std::to_string(f.src));
    return Mor(f.dim, g.src, f.dst, f.m * g.m);
}

Mor tensor(const Mor& f, const Mor& g) {
    if (f.dim != g.dim)
        throw ArityMismatch("tensor across different base objects");
    return Mor(f.dim, f.src + g.src, f.dst + g.dst, f.m.kron(g.m));
}

Mor swap_mor(int d, int total_arity, int pos, const FieldSpec& f) {
    if (pos < 1 || pos >= total_arity)
        throw PositionOutOfRange("swap position " + std::to_string(pos) + " in arity " +
                                 std::to_string(total_arity));
    int n = tensor_pow(d, total_arity);
    Matrix p(n, n, f);
    Scalar one = Scalar::one(f);
    for (int idx = 0; idx < n; ++idx) {
        // digits of idx base d, most significant digit = first tensor factor
        int lo = tensor_pow(d, total_arity - 1 - pos);      // weight of factor pos+1
        int hi = lo * d;                                     // weight of factor pos
        int a = idx / hi % d;
        int b = idx / lo % d;
        int swapped = idx + (b - a) * hi + (a - b) * lo;
        p(swapped, idx) = one;
    }
    return Mor(d, total_arity, total_arity, std::move(p));
}

bool mor_equal(const Mor& f, const Mor& g) {
    return f.dim == g.dim && f.src == g.src && f.dst == g.dst && f.m == g.m;
}

Mor invert(const Mor& f) {
    if (!f.m.is_square()) throw ArityMismatch("invert: non-square morphism");
    return Mor(f.dim, f.dst, f.src, f.m.inverse());
}

Mor transpose(const Mor& f) {
    return Mor(f.dim, f.dst, f.src, f.m.transpose());
}

Mor chain(std::initializer_list<Mor> fs) {
    const Mor* first = fs.begin();
    Mor acc = *first;
    for (const Mor* it = first + 1; it != fs.end(); ++it) acc = compose(acc, *it);
    return acc;
}

namespace {

int swapped_index(int d, int total, int pos, int idx) {
    int lo = tensor_pow(d, total - 1 - pos);
    int hi = lo * d;
    int a = idx / hi % d;
    int b = idx / lo % d;
    return idx + (b - a) * hi + (a - b) * lo;
}

} // namespace

Mor swap_then(const Mor& f, int pos) {
    if (pos < 1 || pos >= f.dst)
        throw PositionOutOfRange("swap position " + std::to_string(pos) + " in arity " +
                                 std::to_string(f.dst));
    Matrix m(f.m.rows(), f.m.cols(), f.field());
    for (int i = 0; i < f.m.rows(); ++i) {
        int si = swapped_index(f.dim, f.dst, pos, i);
        for (int j = 0; j < f.m.cols(); ++j)
            if (!f.m(i, j).is_zero()) m(si, j) = f.m(i, j);
    }
    return Mor(f.dim, f.src, f.dst, std::move(m));
}

Mor then_swap(const Mor& f, int pos) {
    if (pos < 1 || pos >= f.src)
        throw PositionOutOfRange("swap position " + std::to_string(pos) + " in arity " +
                                 std::to_string(f.src));
    Matrix m(f.m.rows(), f.m.cols(), f.field());
    for (int j = 0; j < f.m.cols(); ++j) {
        int sj = swapped_index(f.dim, f.src, pos, j);
        for (int i = 0; i < f.m.rows(); ++i)
            if (!f.m(i, sj).is_zero()) m(i, j) = f.m(i, sj);
    }
    return Mor(f.dim, f.src, f.dst, std::move(m));
}

Splitting split_idempotent(const Mor& nabla) {
    if (!nabla.m.is_square() || nabla.src != nabla.dst || !nabla.m.is_idempotent())
        throw NotIdempotent();
    Matrix::Echelon e = nabla.m.rref();
    int r = static_cast<int>(e.pivots.size());
    Splitting s;
    s.nabla = nabla;
    s.rank = r;
    s.inj = nabla.m.cols_at(e.pivots);
    std::vector<int> top(r);
    for (int i = 0; i < r; ++i) top[i] = i;
    s.proj = e.reduced.rows_at(top);
    if (s.proj * s.inj != Matrix::identity(r, nabla.field()) || s.inj * s.proj != nabla.m)
        throw Error("idempotent splitting lost exactness");
    return s;
}

} // namespace whq
