#pragma once

// Seeded random instances shared by the property tests and the acceptance
// suite: polynomials, diagram terms, ZH circuit terms, polynomial systems,
// CNF clause lists.  All draws go through std::mt19937_64 so every run of a
// fixed seed reproduces the same instances.

#include <random>
#include <vector>

#include "gag/csp.hpp"
#include "gag/term.hpp"
#include "gag/zh.hpp"

namespace gagtest {

using Rng = std::mt19937_64;

inline uint64_t pick(Rng& rng, uint64_t n) { return rng() % n; }

inline gag::Scalar random_scalar(Rng& rng, const gag::Ring& ring) {
    using namespace gag;
    if (ring.kind == RingKind::Finite)
        return Scalar(FieldElement::from_index(ring.field, pick(rng, ring.field->q())));
    static const long long nums[] = {0, 1, -1, 2, 3, -2, 5};
    long long n = nums[pick(rng, 7)];
    long long d = 1 + (long long)pick(rng, 3);
    return Scalar(Rational(n, d));
}

inline gag::Poly random_poly(Rng& rng, const gag::Ring& ring, uint32_t nvars, uint32_t max_deg,
                             uint32_t max_terms) {
    using namespace gag;
    Poly f(ring, nvars);
    uint32_t terms = 1 + (uint32_t)pick(rng, max_terms);
    for (uint32_t i = 0; i < terms; ++i) {
        Monomial m(nvars);
        uint32_t deg = (uint32_t)pick(rng, max_deg + 1);
        for (uint32_t d = 0; d < deg && nvars > 0; ++d) m.e[pick(rng, nvars)] += 1;
        Scalar c = random_scalar(rng, ring);
        if (!c.is_zero()) f.add_term(m, c);
    }
    return f;
}

// A random diagram built by stacking generator layers onto an identity bus.
// Boundary widths stay within [0, max_wires]; the result has `gens` boxes
// unless a draw would exceed the width cap, in which case that draw retries
// with a narrower generator.
inline gag::TermPtr random_term(Rng& rng, const gag::Ring& ring, uint32_t gens,
                                uint32_t max_wires) {
    using namespace gag;
    uint32_t width = 1 + (uint32_t)pick(rng, max_wires);
    TermPtr t = Term::id_n(width);
    for (uint32_t i = 0; i < gens; ++i) {
        uint32_t cur = t->n_out();
        for (int attempt = 0; attempt < 16; ++attempt) {
            GenKind kinds[] = {GenKind::Copy, GenKind::Delete, GenKind::Add,  GenKind::Zero,
                               GenKind::Mult, GenKind::One,    GenKind::Scalar};
            Generator g;
            g.kind = kinds[pick(rng, 7)];
            g.dag = pick(rng, 2) == 1;
            if (g.kind == GenKind::Scalar) g.weight = random_scalar(rng, ring);
            if (g.n_in() > cur) continue;
            uint32_t next = cur - g.n_in() + g.n_out();
            if (next > max_wires) continue;
            uint32_t pos = (uint32_t)pick(rng, cur - g.n_in() + 1);
            TermPtr layer = Term::make_gen(g);
            if (pos > 0) layer = Term::tensor(Term::id_n(pos), layer);
            if (cur - g.n_in() - pos > 0)
                layer = Term::tensor(layer, Term::id_n(cur - g.n_in() - pos));
            t = Term::comp(t, layer);
            break;
        }
        // Interleave an occasional swap layer for plumbing coverage.
        uint32_t w = t->n_out();
        if (w >= 2 && pick(rng, 3) == 0) {
            uint32_t pos = (uint32_t)pick(rng, w - 1);
            TermPtr layer = Term::swap();
            if (pos > 0) layer = Term::tensor(Term::id_n(pos), layer);
            if (w - 2 - pos > 0) layer = Term::tensor(layer, Term::id_n(w - 2 - pos));
            t = Term::comp(t, layer);
        }
    }
    return t;
}

inline gag::ZhTermPtr random_zh_term(Rng& rng, const gag::FieldSpec* f, uint32_t gens,
                                     uint32_t max_wires) {
    using namespace gag;
    uint32_t width = (uint32_t)pick(rng, max_wires + 1);
    ZhTermPtr t = width == 0 ? ZhTerm::empty() : nullptr;
    if (!t) {
        t = ZhTerm::id();
        for (uint32_t i = 1; i < width; ++i) t = ZhTerm::tensor(t, ZhTerm::id());
    }
    auto id_bus = [](uint32_t n) {
        ZhTermPtr r = ZhTerm::empty();
        for (uint32_t i = 0; i < n; ++i) r = ZhTerm::tensor(r, ZhTerm::id());
        return r;
    };
    for (uint32_t i = 0; i < gens; ++i) {
        uint32_t cur = t->n_out();
        for (int attempt = 0; attempt < 16; ++attempt) {
            ZhGen g;
            uint32_t which = (uint32_t)pick(rng, 3);
            if (which == 2) {
                g.kind = ZhKind::XState;
                g.x = FieldElement::from_index(f, pick(rng, f->q()));
            } else {
                g.kind = which == 0 ? ZhKind::ZSpider : ZhKind::HBox;
                g.n = (uint32_t)pick(rng, 3);
                g.m = (uint32_t)pick(rng, 3);
            }
            g.dag = pick(rng, 2) == 1;
            ZhTermPtr box = ZhTerm::make_gen(g);
            if (box->n_in() > cur) continue;
            uint32_t next = cur - box->n_in() + box->n_out();
            if (next > max_wires) continue;
            uint32_t pos = (uint32_t)pick(rng, cur - box->n_in() + 1);
            ZhTermPtr layer = box;
            if (pos > 0) layer = ZhTerm::tensor(id_bus(pos), layer);
            if (cur - box->n_in() - pos > 0)
                layer = ZhTerm::tensor(layer, id_bus(cur - box->n_in() - pos));
            t = ZhTerm::comp(t, layer);
            break;
        }
        uint32_t w = t->n_out();
        if (w >= 2 && pick(rng, 4) == 0) {
            uint32_t pos = (uint32_t)pick(rng, w - 1);
            ZhTermPtr layer = ZhTerm::swap();
            if (pos > 0) layer = ZhTerm::tensor(id_bus(pos), layer);
            if (w - 2 - pos > 0) layer = ZhTerm::tensor(layer, id_bus(w - 2 - pos));
            t = ZhTerm::comp(t, layer);
        }
    }
    return t;
}

// Closed circuit: random middle with its boundary capped by Z spiders.
inline gag::ZhTermPtr random_closed_zh_term(Rng& rng, const gag::FieldSpec* f, uint32_t gens,
                                            uint32_t max_wires) {
    using namespace gag;
    ZhTermPtr mid = random_zh_term(rng, f, gens, max_wires);
    ZhTermPtr t = mid;
    if (t->n_in() > 0) t = ZhTerm::comp(ZhTerm::make_gen({ZhKind::ZSpider, 0, t->n_in(), {}, false}), t);
    if (t->n_out() > 0) t = ZhTerm::comp(t, ZhTerm::make_gen({ZhKind::ZSpider, t->n_out(), 0, {}, false}));
    return t;
}

inline gag::PolySystem random_system(Rng& rng, const gag::FieldSpec* f, uint32_t max_vars,
                                     uint32_t max_constraints) {
    using namespace gag;
    PolySystem sys;
    sys.ring = Ring::finite(f);
    sys.nvars = 1 + (uint32_t)pick(rng, max_vars);
    sys.var_names = default_var_names(sys.nvars);
    uint32_t k = (uint32_t)pick(rng, max_constraints + 1);
    for (uint32_t i = 0; i < k; ++i)
        sys.constraints.push_back(random_poly(rng, sys.ring, sys.nvars, 3, 3));
    return sys;
}

inline std::vector<std::vector<int>> random_cnf(Rng& rng, uint32_t nvars, uint32_t clauses) {
    std::vector<std::vector<int>> cnf;
    for (uint32_t c = 0; c < clauses; ++c) {
        std::vector<int> clause;
        uint32_t width = 1 + (uint32_t)pick(rng, 3);
        for (uint32_t i = 0; i < width; ++i) {
            int lit = 1 + (int)pick(rng, nvars);
            if (pick(rng, 2)) lit = -lit;
            clause.push_back(lit);
        }
        cnf.push_back(clause);
    }
    return cnf;
}

}  // namespace gagtest
