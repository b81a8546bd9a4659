#pragma once

// Multivariate polynomials with exact coefficients, over either the rationals
// or a finite field.  The coefficient ring is a runtime tag so that the whole
// rewriting / normal-form pipeline is a single code path.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gag/field.hpp"

namespace gag {

using Rational = boost::multiprecision::cpp_rational;

enum class RingKind { Rationals, Finite };

struct Ring {
    RingKind kind = RingKind::Rationals;
    const FieldSpec* field = nullptr;  // set iff kind == Finite

    static Ring rationals() { return {RingKind::Rationals, nullptr}; }
    static Ring finite(const FieldSpec* f) { return {RingKind::Finite, f}; }
    bool operator==(const Ring& o) const { return kind == o.kind && field == o.field; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
    std::string str() const;
};

// A coefficient: exact rational or finite-field element, tagged by its ring.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(FieldElement e) : v_(std::move(e)) {}
    static Scalar zero(const Ring& r);
    static Scalar one(const Ring& r);
    static Scalar from_int(const Ring& r, long long v);
    static Scalar parse(const Ring& r, const std::string& text);

    Ring ring() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(uint64_t e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order for deterministic sorting only (not algebraic).
    bool operator<(const Scalar& o) const;

    const Rational& rational() const { return std::get<Rational>(v_); }
    const FieldElement& element() const { return std::get<FieldElement>(v_); }
    std::string str() const;

private:
    std::variant<Rational, FieldElement> v_;
    void check_same(const Scalar& o) const;
};

// Exponent vector; one slot per variable of the ambient polynomial ring.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(uint32_t nvars) : e(nvars, 0) {}
    static Monomial var(uint32_t nvars, uint32_t i);

    uint32_t nvars() const { return (uint32_t)e.size(); }
    uint32_t degree() const;
    bool is_unit() const;  // degree 0
    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Plain lexicographic compare on exponent vectors; fixes the container
    // order of Poly independently of the active monomial order.
    bool operator<(const Monomial& o) const { return e < o.e; }
};

enum class OrderKind { Lex, GrLex, GRevLex };

// A monomial order plus an optional variable priority permutation.
// perm[k] is the index of the k-th most significant variable; empty = identity.
struct MonomialOrder {
    OrderKind kind = OrderKind::GRevLex;
    std::vector<uint32_t> perm;

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
    static MonomialOrder parse(const std::string& name);  // "lex" | "grlex" | "grevlex"
    std::string str() const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Scalar>;

    Poly() : ring_(Ring::rationals()), nvars_(0) {}
    Poly(const Ring& ring, uint32_t nvars) : ring_(ring), nvars_(nvars) {}
    static Poly constant(const Ring& ring, uint32_t nvars, const Scalar& c);
    static Poly var(const Ring& ring, uint32_t nvars, uint32_t i);
    static Poly term(const Ring& ring, const Monomial& m, const Scalar& c);

    const Ring& ring() const { return ring_; }
    uint32_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    uint32_t total_degree() const;  // 0 for the zero polynomial
    std::vector<bool> vars_used() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Scalar& c) const;
    Poly pow(uint32_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Deterministic total order (for sorting bases); not algebraic.
    bool operator<(const Poly& o) const;

    // Leading term with respect to an order; polynomial must be nonzero.
    const std::pair<const Monomial, Scalar>& leading(const MonomialOrder& ord) const;
    Poly monic(const MonomialOrder& ord) const;

    Scalar eval(const std::vector<Scalar>& point) const;
    // Substitute images[i] for variable i; images live in a common target ring.
    Poly substitute(const std::vector<Poly>& images) const;
    // Reindex x_i -> x_{i+offset} inside a ring with new_nvars variables.
    Poly shift_vars(uint32_t offset, uint32_t new_nvars) const;
    // Reindex x_i -> x_{image[i]}; every used variable needs a valid image.
    Poly rename_vars(const std::vector<uint32_t>& image, uint32_t new_nvars) const;
    Poly with_nvars(uint32_t new_nvars) const;  // grow variable count

    // Printing uses names[i] when provided, else "x1".."xn"; terms appear in
    // descending plain-lex order, so output is deterministic.
    std::string str(const std::vector<std::string>& names = {}) const;

    void add_term(const Monomial& m, const Scalar& c);  // accumulate, drop zeros

private:
    Ring ring_;
    uint32_t nvars_;
    TermMap terms_;
    void check_compat(const Poly& o) const;
};

// Parses "+ - * / ^ ( )" expressions over integer literals, the listed
// variable names, and (for extension fields) the generator `a`.  Division is
// only by nonzero constants.
Poly parse_poly(const Ring& ring, const std::string& text, const std::vector<std::string>& var_names);

// Default variable names x1..xn.
std::vector<std::string> default_var_names(uint32_t nvars);

}  // namespace gag
