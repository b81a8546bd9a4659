#pragma once

// Syntax trees for string diagrams over the algebra generators, with cached
// arities, structural dagger, and the derived constructions (function boxes,
// quotient gadgets, spiders, buses, transposes).

#include <memory>
#include <string>
#include <vector>

#include "gag/poly.hpp"

namespace gag {

enum class GenKind { Copy, Delete, Add, Zero, Mult, One, Scalar, FourierState, ScalarDown };

// One diagram box.  Base arities: Copy 1->2, Delete 1->0, Add 2->1,
// Zero 0->1, Mult 2->1, One 0->1, Scalar 1->1, FourierState 0->1,
// ScalarDown 0->0; `dag` swaps inputs and outputs.
struct Generator {
    GenKind kind = GenKind::Copy;
    bool dag = false;
    Scalar weight;  // the c of Scalar(c); ignored otherwise

    uint32_t n_in() const;
    uint32_t n_out() const;
    Generator daggered() const;
    bool operator==(const Generator& o) const;
    bool operator!=(const Generator& o) const { return !(*this == o); }
    std::string str() const;  // DSL spelling: "copy", "sc(2)'", ...
};

enum class TermKind { Empty, Id, Swap, Gen, Comp, Tensor };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    const TermKind kind;
    const Generator gen;  // Gen nodes only
    const TermPtr a, b;   // Comp: a then b; Tensor: a above b

    uint32_t n_in() const { return nin_; }
    uint32_t n_out() const { return nout_; }

    static TermPtr empty();                // 0 -> 0
    static TermPtr id();                   // 1 -> 1
    static TermPtr id_n(uint32_t n);       // n -> n
    static TermPtr swap();                 // 2 -> 2
    static TermPtr make_gen(const Generator& g);
    static TermPtr comp(const TermPtr& x, const TermPtr& y);    // x ; y, arity-checked
    static TermPtr tensor(const TermPtr& x, const TermPtr& y);  // x * y
    static TermPtr dagger(const TermPtr& t);

private:
    Term(TermKind k, Generator g, TermPtr a, TermPtr b, uint32_t nin, uint32_t nout)
        : kind(k), gen(std::move(g)), a(std::move(a)), b(std::move(b)), nin_(nin), nout_(nout) {}
    uint32_t nin_, nout_;
};

// Plain generator terms.
TermPtr gen_term(GenKind k, bool dag = false);
TermPtr scalar_term(const Scalar& c, bool dag = false);

size_t term_size(const TermPtr& t);  // number of generator boxes
std::string print_term(const TermPtr& t);  // valid DSL input

// Language layers, smallest to largest.  GAG adds the quotient rules on top
// of GCA without new generators, so detect_language never reports it; it
// exists as a rule-catalog layer.
enum class Language { LCALG, GCA, GAG, GAG_FOURIER };
Language detect_language(const TermPtr& t);
std::string language_name(Language l);
Language parse_language(const std::string& name);

// The coefficient ring of all Scalar(c) weights in the term, if any.
// Throws on mixed rings; returns fallback when the term has no weights.
Ring term_ring(const TermPtr& t, const Ring& fallback);

// ---- derived constructions ----

// Wire permutation: input wire i exits at position dst[i].  Built from
// adjacent swaps, so it is a plain term over id/swap.
TermPtr perm_term(const std::vector<uint32_t>& dst);

// n -> copies*n; the output is `copies` consecutive full copies of the bus.
TermPtr bus_copy(uint32_t copies, uint32_t n);
// 2n -> n; adds wire i with wire n+i, preserving order.
TermPtr bus_add(uint32_t n);
// 2n -> n; multiplies wire i with wire n+i.
TermPtr bus_mult(uint32_t n);
// n -> 0.
TermPtr bus_delete(uint32_t n);
// 1 -> m fanout tree (m = 0 deletes, m = 1 is a wire).
TermPtr copy_tree(uint32_t m);

// n -> 1 box computing the polynomial f(x1..xn).
TermPtr poly1(const Poly& f);
// n -> m box computing the tuple (f1..fm); all fs share nvars and ring.
TermPtr poly_box(const std::vector<Poly>& fs, uint32_t nvars, const Ring& ring);
// n -> n gadget imposing g = 0 for every generator g.
TermPtr ideal_gadget(const std::vector<Poly>& gens, uint32_t nvars, const Ring& ring);
// 0 -> 1 state of the point c.
TermPtr point_state(const Scalar& c);
// n -> m spider built from the copy structure.
TermPtr white_spider(uint32_t n, uint32_t m);

// 0 -> 2n and 2n -> 0; wire i pairs with wire n+i.
TermPtr cup_bus(uint32_t n);
TermPtr cap_bus(uint32_t n);
// m -> n transpose of t: n -> m, bending wires with cup/cap buses.
TermPtr transpose_term(const TermPtr& t);

}  // namespace gag
