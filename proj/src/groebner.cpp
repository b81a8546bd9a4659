#include "gag/groebner.hpp"

#include <algorithm>
#include <set>

namespace gag {

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    Poly p = f;
    Poly r(f.ring(), f.nvars());
    std::vector<std::pair<Monomial, Scalar>> lts;
    lts.reserve(basis.size());
    for (const Poly& g : basis)
        lts.emplace_back(g.is_zero() ? Monomial(f.nvars()) : g.leading(ord).first,
                         g.is_zero() ? Scalar::zero(f.ring()) : g.leading(ord).second);
    while (!p.is_zero()) {
        Monomial lm = p.leading(ord).first;
        Scalar lc = p.leading(ord).second;
        bool divided = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            if (!lts[i].first.divides(lm)) continue;
            p = p - basis[i] * Poly::term(p.ring(), lm / lts[i].first, lc / lts[i].second);
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return r;
}

bool reduces_to_zero(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    return normal_form(f, basis, ord).is_zero();
}

namespace {

// S-polynomial of two monic polynomials.
Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Monomial& mf = f.leading(ord).first;
    const Monomial& mg = g.leading(ord).first;
    Monomial l = Monomial::lcm(mf, mg);
    Scalar one = Scalar::one(f.ring());
    return f * Poly::term(f.ring(), l / mf, one) - g * Poly::term(f.ring(), l / mg, one);
}

}  // namespace

std::vector<Poly> buchberger(std::vector<Poly> gens, const MonomialOrder& ord) {
    std::vector<Poly> G;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        Poly m = g.monic(ord);
        if (std::find(G.begin(), G.end(), m) == G.end()) G.push_back(std::move(m));
    }
    std::vector<Monomial> lm;
    for (const Poly& g : G) lm.push_back(g.leading(ord).first);

    std::set<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.insert({i, j});

    while (!pairs.empty()) {
        // Normal selection: smallest lcm of leading monomials first.
        auto best = pairs.begin();
        Monomial best_l = Monomial::lcm(lm[best->first], lm[best->second]);
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = Monomial::lcm(lm[it->first], lm[it->second]);
            if (ord.less(l, best_l)) {
                best = it;
                best_l = l;
            }
        }
        auto [i, j] = *best;
        pairs.erase(best);
        // Product criterion: coprime leading terms never yield new elements.
        if (lm[i].coprime(lm[j])) continue;
        Poly s = normal_form(s_poly(G[i], G[j], ord), G, ord);
        if (s.is_zero()) continue;
        s = s.monic(ord);
        lm.push_back(s.leading(ord).first);
        G.push_back(std::move(s));
        for (size_t k = 0; k + 1 < G.size(); ++k) pairs.insert({k, G.size() - 1});
    }

    // Minimalize: drop any element whose leading term another element divides.
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lm[j].divides(lm[i]) && (lm[j] != lm[i] || j < i)) keep[i] = false;
        }
    }
    std::vector<Poly> M;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) M.push_back(G[i]);

    // Inter-reduce to the reduced basis (unique for the ideal and order).
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < M.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < M.size(); ++j)
                if (j != i) others.push_back(M[j]);
            Poly r = normal_form(M[i], others, ord);
            if (r.is_zero()) {
                M.erase(M.begin() + i);
                changed = true;
                break;
            }
            r = r.monic(ord);
            if (r != M[i]) {
                M[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(M.begin(), M.end(), [&](const Poly& a, const Poly& b) {
        const Monomial& ma = a.leading(ord).first;
        const Monomial& mb = b.leading(ord).first;
        if (ma != mb) return ord.less(ma, mb);
        return a < b;
    });
    return M;
}

std::vector<Poly> q_saturate(std::vector<Poly> gens, uint32_t nvars, const Ring& ring) {
    if (ring.kind != RingKind::Finite)
        throw semantic_error("q_saturate needs a finite coefficient field");
    const FieldSpec* field = ring.field;
    if (field->q() > (1u << 24)) throw resource_error("field equations too large (q > 2^24)");
    uint32_t n = nvars;
    for (uint32_t i = 0; i < n; ++i) {
        Monomial xq(n);
        xq.e[i] = (uint32_t)field->q();
        Poly f = Poly::term(ring, xq, Scalar::one(ring));
        f.add_term(Monomial::var(n, i), -Scalar::one(ring));
        gens.push_back(std::move(f));
    }
    return gens;
}

}  // namespace gag
