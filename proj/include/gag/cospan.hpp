#pragma once

// Relational normal forms of diagrams: a diagram denotes a cospan of
// polynomial maps — interior variables, an ideal of relations, and one
// polynomial per boundary wire.  canonicalize() reduces the ideal to its
// Groebner basis, rewrites the legs to normal form, and eliminates every
// interior variable that the ideal determines linearly.

#include <vector>

#include "gag/groebner.hpp"
#include "gag/term.hpp"

namespace gag {

struct CospanForm {
    Ring ring;
    uint32_t r = 0;           // interior variables x1..xr
    std::vector<Poly> left;   // one polynomial per input wire, nvars == r
    std::vector<Poly> right;  // one per output wire
    std::vector<Poly> ideal;  // relation generators

    uint32_t n_in() const { return (uint32_t)left.size(); }
    uint32_t n_out() const { return (uint32_t)right.size(); }
    bool operator==(const CospanForm& o) const;
    std::string str() const;
};

// Structural evaluation: no simplification, one fresh variable block per
// generator.  Fourier boxes (z1, sdown) have no relational semantics and are
// rejected; use the amplitude pipeline for those.
CospanForm eval_cospan(const TermPtr& t, const Ring& ring);

// Deterministic, idempotent canonical form.  With q_reduce the field
// equations x^q - x are adjoined first (finite ring only), so the ideal is
// reduced over the functions on F_q^r.
CospanForm canonicalize(CospanForm c, const MonomialOrder& ord, bool q_reduce);

// Re-expansion into a diagram with the same counting semantics:
// poly_box(left)^dagger ; ideal_gadget(ideal) ; poly_box(right).
TermPtr cospan_to_term(const CospanForm& c);

}  // namespace gag
