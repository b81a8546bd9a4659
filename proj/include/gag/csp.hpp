#pragma once

// Counting solutions of polynomial systems over a finite field by closing a
// diagram: prepare every variable wire in the uniform (sum-over-field) state,
// impose the constraints, and discard.  The resulting 0 -> 0 diagram counts
// the common zeros.

#include <string>
#include <vector>

#include "gag/term.hpp"

namespace gag {

struct PolySystem {
    Ring ring;
    uint32_t nvars = 0;
    std::vector<std::string> var_names;  // size nvars
    std::vector<Poly> constraints;       // each over (ring, nvars)
};

// Text format: '#' starts a comment, blank lines are skipped, then a
// `field p^t` line, a `vars x, y, z` line, and one polynomial per line.
PolySystem parse_poly_system(const std::string& text);

// DIMACS CNF.  Each clause becomes its violation polynomial over GF(2).
PolySystem parse_dimacs(const std::string& text);

// The polynomial that vanishes exactly where the clause holds: a factor
// (1 + x) per positive literal and x per negated one.  Literals are the
// DIMACS convention: nonzero, 1-based, negative for negation.
Poly clause_poly(uint32_t nvars, const std::vector<int>& literals);

// The closed diagram whose count is the number of solutions.
TermPtr system_to_diagram(const PolySystem& sys);

// Number of common zeros, evaluated through the diagram semantics.
uint64_t count_solutions(const PolySystem& sys, uint64_t max_enum = 0);

// Independent route: direct enumeration of all q^n assignments.
uint64_t brute_force_count(const PolySystem& sys, uint64_t max_enum = 0);

}  // namespace gag
