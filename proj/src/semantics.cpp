#include "gag/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gag {

std::atomic<uint64_t> count_closed_calls{0};

NMatrix NMatrix::transpose() const {
    NMatrix t(cols, rows);
    for (uint64_t r = 0; r < rows; ++r)
        for (uint64_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string NMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (uint64_t r = 0; r < rows; ++r) {
        if (r) os << ", ";
        os << "[";
        for (uint64_t c = 0; c < cols; ++c) {
            if (c) os << ", ";
            os << at(r, c);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

NMatrix matmul(const NMatrix& a, const NMatrix& b) {
    if (a.cols != b.rows) throw semantic_error("matrix product shape mismatch");
    NMatrix r(a.rows, b.cols);
    for (uint64_t i = 0; i < a.rows; ++i)
        for (uint64_t k = 0; k < a.cols; ++k) {
            uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (uint64_t j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

NMatrix kron(const NMatrix& a, const NMatrix& b) {
    NMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (uint64_t i = 0; i < a.rows; ++i)
        for (uint64_t j = 0; j < a.cols; ++j) {
            uint64_t aij = a.at(i, j);
            if (!aij) continue;
            for (uint64_t k = 0; k < b.rows; ++k)
                for (uint64_t l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = aij * b.at(k, l);
        }
    return r;
}

NMatrix identity_matrix(uint64_t n) {
    NMatrix r(n, n);
    for (uint64_t i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

uint64_t default_enum_cap() {
    static const uint64_t cap = [] {
        if (const char* e = std::getenv("GAG_MAX_ENUM")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(e, &end, 10);
            if (end && *end == '\0' && v > 0) return (uint64_t)v;
        }
        return (uint64_t)1 << 24;
    }();
    return cap;
}

namespace {

uint64_t resolve_cap(uint64_t max_enum) {
    return max_enum ? max_enum : default_enum_cap();
}

uint64_t checked_pow(uint64_t q, uint32_t e, uint64_t cap, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > cap / q)
            throw resource_error(std::string(what) + " exceeds the enumeration budget (" +
                                 std::to_string(cap) + "); raise --max-enum or GAG_MAX_ENUM");
        r *= q;
    }
    if (r > cap)
        throw resource_error(std::string(what) + " exceeds the enumeration budget (" +
                             std::to_string(cap) + "); raise --max-enum or GAG_MAX_ENUM");
    return r;
}

// Index-based field arithmetic tables; elements are their enumeration index.
struct FastField {
    uint64_t q = 0;
    std::vector<uint32_t> addt, mult;  // q*q lookup

    uint32_t addi(uint32_t a, uint32_t b) const { return addt[a * q + b]; }
    uint32_t muli(uint32_t a, uint32_t b) const { return mult[a * q + b]; }
    uint32_t powi(uint32_t a, uint32_t e) const {
        uint32_t r = 1;  // index of 1 is 1 (coeff vector (1,0,..))
        uint32_t base = a;
        while (e) {
            if (e & 1) r = muli(r, base);
            base = muli(base, base);
            e >>= 1;
        }
        return r;
    }
};

const FastField& fast_field(const FieldSpec* f) {
    static std::mutex mu;
    static std::map<const FieldSpec*, FastField> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    if (f->q() > 4096) throw resource_error("field too large for table-driven enumeration (q > 4096)");
    FastField ff;
    ff.q = f->q();
    std::vector<FieldElement> els = enumerate_field(f);
    ff.addt.resize(ff.q * ff.q);
    ff.mult.resize(ff.q * ff.q);
    for (uint64_t a = 0; a < ff.q; ++a)
        for (uint64_t b = 0; b < ff.q; ++b) {
            ff.addt[a * ff.q + b] = (uint32_t)(els[a] + els[b]).index();
            ff.mult[a * ff.q + b] = (uint32_t)(els[a] * els[b]).index();
        }
    return cache.emplace(f, std::move(ff)).first->second;
}

struct CompiledPoly {
    struct Term {
        uint32_t coeff;
        std::vector<std::pair<uint32_t, uint32_t>> pows;  // (var, exponent)
    };
    std::vector<Term> terms;

    static CompiledPoly compile(const Poly& p) {
        CompiledPoly cp;
        for (const auto& [m, c] : p.terms()) {
            Term t;
            t.coeff = (uint32_t)c.element().index();
            for (uint32_t i = 0; i < m.nvars(); ++i)
                if (m.e[i] > 0) t.pows.emplace_back(i, m.e[i]);
            cp.terms.push_back(std::move(t));
        }
        return cp;
    }

    uint32_t eval(const FastField& F, const std::vector<uint32_t>& pt) const {
        uint32_t acc = 0;
        for (const Term& t : terms) {
            uint32_t v = t.coeff;
            for (const auto& [var, e] : t.pows) v = F.muli(v, F.powi(pt[var], e));
            acc = F.addi(acc, v);
        }
        return acc;
    }
};

}  // namespace

NMatrix cospan_matrix(const CospanForm& c, uint64_t max_enum) {
    if (c.ring.kind != RingKind::Finite)
        throw semantic_error("counting semantics needs a finite field (--field)");
    uint64_t cap = resolve_cap(max_enum);
    const FieldSpec* f = c.ring.field;
    uint64_t q = f->q();
    uint64_t rows = checked_pow(q, c.n_in(), cap, "input index space");
    uint64_t cols = checked_pow(q, c.n_out(), cap, "output index space");
    if (cols != 0 && rows > cap / cols)
        throw resource_error("matrix entry count exceeds the enumeration budget (" + std::to_string(cap) +
                             "); raise --max-enum or GAG_MAX_ENUM");
    checked_pow(q, c.r, cap, "interior point count");

    const FastField& F = fast_field(f);
    std::vector<CompiledPoly> ideal, lhs, rhs;
    for (const Poly& p : c.ideal) ideal.push_back(CompiledPoly::compile(p));
    for (const Poly& p : c.left) lhs.push_back(CompiledPoly::compile(p));
    for (const Poly& p : c.right) rhs.push_back(CompiledPoly::compile(p));

    NMatrix m(rows, cols);
    std::vector<uint32_t> pt(c.r, 0);
    for (;;) {
        bool vanishes = true;
        for (const CompiledPoly& g : ideal)
            if (g.eval(F, pt) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) {
            uint64_t row = 0, col = 0;
            for (const CompiledPoly& leg : lhs) row = row * q + leg.eval(F, pt);
            for (const CompiledPoly& leg : rhs) col = col * q + leg.eval(F, pt);
            m.at(row, col) += 1;
        }
        // odometer: rightmost variable fastest
        uint32_t k = c.r;
        while (k > 0) {
            --k;
            if (++pt[k] < q) break;
            pt[k] = 0;
            if (k == 0) return m;
        }
        if (c.r == 0) return m;
    }
}

NMatrix matrix_semantics(const TermPtr& t, const Ring& ring, uint64_t max_enum) {
    if (ring.kind != RingKind::Finite)
        throw semantic_error("counting semantics needs a finite field (--field)");
    CospanForm c = canonicalize(eval_cospan(t, ring), MonomialOrder{}, true);
    return cospan_matrix(c, max_enum);
}

uint64_t count_closed(const TermPtr& t, const Ring& ring, uint64_t max_enum) {
    count_closed_calls.fetch_add(1, std::memory_order_relaxed);
    if (t->n_in() != 0 || t->n_out() != 0)
        throw semantic_error("count requires a closed diagram (0 inputs, 0 outputs)");
    NMatrix m = matrix_semantics(t, ring, max_enum);
    return m.at(0, 0);
}

std::string equiv_result_name(EquivResult r) {
    switch (r) {
        case EquivResult::Equal: return "Equal";
        case EquivResult::NotEqual: return "NotEqual";
        case EquivResult::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

CospanForm permuted_canonical(const CospanForm& c, const std::vector<uint32_t>& image,
                              const MonomialOrder& ord) {
    CospanForm p = c;
    std::vector<Poly> gens;
    for (const Poly& g : c.ideal) gens.push_back(g.rename_vars(image, c.r));
    p.ideal = buchberger(gens, ord);
    for (size_t i = 0; i < c.left.size(); ++i)
        p.left[i] = normal_form(c.left[i].rename_vars(image, c.r), p.ideal, ord);
    for (size_t i = 0; i < c.right.size(); ++i)
        p.right[i] = normal_form(c.right[i].rename_vars(image, c.r), p.ideal, ord);
    return p;
}

}  // namespace

EquivResult equiv(const TermPtr& a, const TermPtr& b, const Ring& ring,
                  const MonomialOrder& ord, uint64_t max_enum) {
    if (a->n_in() != b->n_in() || a->n_out() != b->n_out())
        throw semantic_error("equiv: boundary arities differ (" +
                             std::to_string(a->n_in()) + "->" + std::to_string(a->n_out()) +
                             " vs " + std::to_string(b->n_in()) + "->" + std::to_string(b->n_out()) + ")");
    if (ring.kind == RingKind::Finite) {
        NMatrix ma = matrix_semantics(a, ring, max_enum);
        NMatrix mb = matrix_semantics(b, ring, max_enum);
        return ma == mb ? EquivResult::Equal : EquivResult::NotEqual;
    }
    CospanForm ca = canonicalize(eval_cospan(a, ring), ord, false);
    CospanForm cb = canonicalize(eval_cospan(b, ring), ord, false);
    if (ca == cb) return EquivResult::Equal;
    if (ca.r != cb.r) return EquivResult::Unknown;
    if (ca.r > 6) return EquivResult::Unknown;
    // Try to identify the forms under a renaming of interior variables.
    std::vector<uint32_t> image(cb.r);
    std::iota(image.begin(), image.end(), 0);
    while (std::next_permutation(image.begin(), image.end())) {
        if (permuted_canonical(cb, image, ord) == ca) return EquivResult::Equal;
    }
    return EquivResult::Unknown;
}

}  // namespace gag
