#pragma once

// Buchberger's algorithm over an exact coefficient field (Q or GF(q)),
// normal forms by full multivariate division, and the finite-field
// saturation that adjoins the field equations x_i^q - x_i.

#include <vector>

#include "gag/poly.hpp"

namespace gag {

// Remainder of dividing f by the listed polynomials: no term of the result is
// divisible by any basis leading term.  Deterministic: reducers are tried in
// list order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord);

// The reduced Groebner basis of the ideal generated by gens: monic,
// auto-reduced, sorted ascending by leading monomial.  The result depends
// only on the ideal and the order, not on generator presentation.
std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord);

// gens together with x_i^q - x_i for every variable of the ambient ring, so
// that the ideal cuts out exactly the GF(q)-points of V(gens) and membership
// tests become pointwise-vanishing tests.  The ring must be finite.
std::vector<Poly> q_saturate(std::vector<Poly> gens, uint32_t nvars, const Ring& ring);

// True iff normal_form(f, basis, ord) == 0 for a Groebner basis `basis`.
bool reduces_to_zero(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord);

}  // namespace gag
