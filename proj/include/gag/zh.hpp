#pragma once

// Qudit ZH circuits over F_q, q = p^t: exact matrix semantics with entries
// in Z[w] (w a primitive p-th root of unity) scaled by a global q^{k/2},
// a translation into diagram terms with Fourier-state boxes, the
// Fourier-state merge, and the q-query amplitude evaluation.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gag/term.hpp"

namespace gag {

using Int = boost::multiprecision::cpp_int;

// Z[w] = Z[x]/(1 + x + ... + x^{p-1}): coefficients of 1, w, ..., w^{p-2}.
// For p = 2 this is a single plain integer with w = -1.
struct Cyclotomic {
    uint32_t p = 2;
    std::vector<Int> c;

    Cyclotomic() : c(1, 0) {}
    explicit Cyclotomic(uint32_t p_) : p(p_), c(p_ - 1, 0) {}
    static Cyclotomic from_int(uint32_t p, const Int& n);
    static Cyclotomic root_pow(uint32_t p, uint64_t e);  // w^e

    bool is_zero() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic conj() const;  // w -> w^{p-1}
    bool operator==(const Cyclotomic& o) const = default;
    std::string str() const;
};

// q^{k/2} * A with A over Z[w].  Rows index outputs, columns inputs; both
// are mixed-radix over element indices, leftmost wire most significant.
struct ScaledCycMatrix {
    uint32_t p = 2;
    uint64_t q = 2;
    int64_t k = 0;
    uint64_t rows = 1, cols = 1;
    std::vector<Cyclotomic> v;  // row-major

    Cyclotomic& at(uint64_t r, uint64_t c) { return v[r * cols + c]; }
    const Cyclotomic& at(uint64_t r, uint64_t c) const { return v[r * cols + c]; }
    ScaledCycMatrix dagger() const;
    std::string str() const;
};

ScaledCycMatrix cyc_matmul(const ScaledCycMatrix& a, const ScaledCycMatrix& b);
ScaledCycMatrix cyc_kron(const ScaledCycMatrix& a, const ScaledCycMatrix& b);

// Equality of the scaled values: aligns k by multiplying entries of the
// higher-k side by integer powers of q; sides of different k parity are
// equal only when both are zero.
bool cyc_equal(const ScaledCycMatrix& a, const ScaledCycMatrix& b);

// q^{k/2} * value, the result of evaluating a closed circuit.
struct ScaledCycScalar {
    uint64_t q = 2;
    int64_t k = 0;
    Cyclotomic value;
    std::string str() const;
};

// ---- circuit terms ----

enum class ZhKind { ZSpider, HBox, XState };

struct ZhGen {
    ZhKind kind = ZhKind::ZSpider;
    uint32_t n = 0, m = 0;  // legs of ZSpider / HBox
    FieldElement x;         // the basis element of XState (0 -> 1)
    bool dag = false;
    bool operator==(const ZhGen& o) const;
    std::string str() const;
};

struct ZhTerm;
using ZhTermPtr = std::shared_ptr<const ZhTerm>;

struct ZhTerm {
    TermKind kind;  // Gen, Id, Swap, Comp, Tensor, Empty
    ZhGen gen;
    ZhTermPtr a, b;

    uint32_t n_in() const { return nin_; }
    uint32_t n_out() const { return nout_; }

    static ZhTermPtr empty();
    static ZhTermPtr id();
    static ZhTermPtr swap();
    static ZhTermPtr make_gen(const ZhGen& g);
    static ZhTermPtr comp(const ZhTermPtr& x, const ZhTermPtr& y);  // x ; y
    static ZhTermPtr tensor(const ZhTermPtr& x, const ZhTermPtr& y);
    static ZhTermPtr dagger(const ZhTermPtr& t);

private:
    uint32_t nin_ = 0, nout_ = 0;
    ZhTerm(TermKind k, ZhGen g, ZhTermPtr a_, ZhTermPtr b_, uint32_t ni, uint32_t no)
        : kind(k), gen(std::move(g)), a(std::move(a_)), b(std::move(b_)), nin_(ni), nout_(no) {}
};

ZhTermPtr zh_gen(ZhKind k, uint32_t n, uint32_t m, bool dag = false);
ZhTermPtr zh_xstate(const FieldElement& x, bool dag = false);
size_t zh_term_size(const ZhTermPtr& t);
std::string print_zh_term(const ZhTermPtr& t);

// ---- semantics, translation, amplitude ----

// Direct dense evaluation: the Z spider is the all-legs-equal indicator
// (k = 0; with no legs it is the scalar q), the H box has entries
// w^{tr(product of all leg elements)} at k = -1, and the X basis state is
// the standard column at k = 1.
ScaledCycMatrix zh_dense_eval(const ZhTermPtr& t, const FieldSpec* f, uint64_t max_enum = 0);

// Dense evaluation of a diagram term that may contain Fourier-state and
// scale-down boxes: those evaluate to the unnormalized Fourier column
// (w^{tr j})_j and to q^{-1/2}; all other generators contribute their
// counting matrices.
ScaledCycMatrix fourier_dense_eval(const TermPtr& t, const FieldSpec* f, uint64_t max_enum = 0);

// Structural translation of a circuit into a diagram term with Fourier
// boxes.  Soundness (fourier/dense route agreement) is checked in tests,
// not assumed.
TermPtr translate_to_gag(const ZhTermPtr& t, const FieldSpec* f);

// Detach every Fourier-state box of d (n -> m) and merge the freed wires
// into ONE new input wire, prepended, using the daggered-Add tree; with no
// Fourier state the new wire is killed by a daggered Zero.  Returns the
// number of scale-down boxes and the plain diagram D' (1+n -> m) with
// value(d) = q^{-k/2} * sum_j w^{tr j} * value((state(j) tensor id_n) ; D').
std::pair<int64_t, TermPtr> fourier_merge(const TermPtr& d, const FieldSpec* f);

// The merged q-query evaluation of a diagram with Fourier boxes, entries
// converted to the rows-index-outputs convention.
ScaledCycMatrix sem_z_one(const TermPtr& d, const FieldSpec* f, uint64_t max_enum = 0);

// Value of a closed circuit through translate + merge + exactly q
// count_closed queries.
ScaledCycScalar amplitude(const ZhTermPtr& t, const FieldSpec* f, uint64_t max_enum = 0);

}  // namespace gag
