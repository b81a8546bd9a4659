#pragma once

// Counting semantics over a finite field: a diagram with n inputs and m
// outputs denotes the q^n x q^m matrix whose (x, y) entry counts the interior
// assignments compatible with boundary values x and y.  Row/column indices
// are mixed-radix over element indices, leftmost wire most significant.

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "gag/cospan.hpp"

namespace gag {

struct NMatrix {
    uint64_t rows = 0, cols = 0;
    std::vector<uint64_t> v;  // row-major

    NMatrix() = default;
    NMatrix(uint64_t r, uint64_t c) : rows(r), cols(c), v(r * c, 0) {}
    uint64_t& at(uint64_t r, uint64_t c) { return v[r * cols + c]; }
    uint64_t at(uint64_t r, uint64_t c) const { return v[r * cols + c]; }
    bool operator==(const NMatrix& o) const = default;
    NMatrix transpose() const;
    std::string str() const;
};

NMatrix matmul(const NMatrix& a, const NMatrix& b);
NMatrix kron(const NMatrix& a, const NMatrix& b);
NMatrix identity_matrix(uint64_t n);

// Enumeration budget for q^r interior sweeps and for matrix entry counts.
// 0 anywhere below means "use the default": 2^24, or the GAG_MAX_ENUM
// environment variable when set.
uint64_t default_enum_cap();

// Matrix of a cospan, enumerating the q^r interior points directly.
NMatrix cospan_matrix(const CospanForm& c, uint64_t max_enum = 0);

// Matrix of a term: canonicalizes first so the interior stays small.
NMatrix matrix_semantics(const TermPtr& t, const Ring& ring, uint64_t max_enum = 0);

// Value of a closed (0 -> 0) diagram.  Every call is counted so callers with
// an oracle budget can be audited.
uint64_t count_closed(const TermPtr& t, const Ring& ring, uint64_t max_enum = 0);
extern std::atomic<uint64_t> count_closed_calls;

enum class EquivResult { Equal, NotEqual, Unknown };
std::string equiv_result_name(EquivResult r);

// Over a finite field this is a complete decision (matrix comparison).  Over
// the rationals it compares canonical cospans up to a renaming of interior
// variables and answers Unknown when no certificate is found.
EquivResult equiv(const TermPtr& a, const TermPtr& b, const Ring& ring,
                  const MonomialOrder& ord, uint64_t max_enum = 0);

}  // namespace gag
