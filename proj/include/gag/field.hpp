#pragma once

// Exact arithmetic for GF(p^t): prime fields and extension fields in the power
// basis of a generator `a` modulo a monic irreducible polynomial over F_p.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gag {

// Error taxonomy shared by the whole library.  The CLI maps these onto its
// exit-code table.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};
struct semantic_error : std::runtime_error {
    explicit semantic_error(const std::string& m) : std::runtime_error(m) {}
};
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

class FieldSpec {
public:
    // Prime field F_p (t = 1) or extension GF(p^t) with a built-in modulus.
    // Built-in moduli exist for q in {4, 8, 9, 16, 25, 27}; other extensions
    // need an explicit irreducible.
    static const FieldSpec* get(uint32_t p, uint32_t t);
    // Extension with caller-supplied monic irreducible, coefficients
    // low-to-high, length t + 1.  Irreducibility is verified by trial
    // division against all monic divisors of degree <= t/2.
    static const FieldSpec* get(uint32_t p, uint32_t t, const std::vector<uint32_t>& irred);
    // Parses "p" or "p^t" as used by --field.
    static const FieldSpec* parse(const std::string& text);

    uint32_t p() const { return p_; }
    uint32_t t() const { return t_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& irreducible() const { return irred_; }
    std::string str() const;  // "2", "2^2", ...

private:
    FieldSpec(uint32_t p, uint32_t t, std::vector<uint32_t> irred);
    uint32_t p_, t_;
    uint64_t q_;
    std::vector<uint32_t> irred_;  // monic, degree t, low-to-high (empty when t = 1)
};

class FieldElement {
public:
    FieldElement() : f_(nullptr) {}
    static FieldElement zero(const FieldSpec* f);
    static FieldElement one(const FieldSpec* f);
    // Integer residue embedded into the prime subfield.
    static FieldElement from_int(const FieldSpec* f, long long v);
    // The power-basis generator `a` (requires t >= 2).
    static FieldElement generator(const FieldSpec* f);
    // Enumeration indexing: index = sum coeff[i] * p^i, so enumeration is
    // lexicographic on coefficient vectors with zero first.  This order fixes
    // every matrix row/column indexing in the library.
    static FieldElement from_index(const FieldSpec* f, uint64_t idx);
    uint64_t index() const;

    const FieldSpec* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Total order used only for deterministic printing/sorting.
    bool operator<(const FieldElement& o) const { return index() < o.index(); }

    // Field trace tr(x) = sum_{i<t} x^{p^i}, an element of the prime subfield.
    FieldElement trace() const;
    // Trace as an integer in [0, p); the ZH phase exponent.
    uint32_t trace_int() const;

    // "0", "1", "2", ... for prime fields; polynomials in `a` ("a+1", "2*a^2+a")
    // for extensions.  parse accepts the same grammar (+, -, *, ^, parens).
    std::string str() const;
    static FieldElement parse(const FieldSpec* f, const std::string& text);

    const std::vector<uint32_t>& coeffs() const { return c_; }

private:
    FieldElement(const FieldSpec* f, std::vector<uint32_t> c) : f_(f), c_(std::move(c)) {}
    void check_same(const FieldElement& o) const;
    const FieldSpec* f_;
    std::vector<uint32_t> c_;  // length t, residues mod p
};

// All q elements in index order; deterministic across runs.
std::vector<FieldElement> enumerate_field(const FieldSpec* f);

}  // namespace gag
