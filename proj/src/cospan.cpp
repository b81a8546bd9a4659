#include "gag/cospan.hpp"

#include <sstream>

namespace gag {

bool CospanForm::operator==(const CospanForm& o) const {
    return ring == o.ring && r == o.r && left == o.left && right == o.right && ideal == o.ideal;
}

std::string CospanForm::str() const {
    std::ostringstream os;
    auto list = [&](const std::vector<Poly>& ps) {
        os << "[";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) os << ", ";
            os << ps[i].str();
        }
        os << "]";
    };
    os << "r=" << r << "; left=";
    list(left);
    os << "; right=";
    list(right);
    os << "; ideal=";
    list(ideal);
    return os.str();
}

namespace {

CospanForm gen_cospan(const Generator& g, const Ring& ring) {
    CospanForm c;
    c.ring = ring;
    auto v = [&](uint32_t n, uint32_t i) { return Poly::var(ring, n, i); };
    switch (g.kind) {
        case GenKind::Copy:
            c.r = 1;
            c.left = {v(1, 0)};
            c.right = {v(1, 0), v(1, 0)};
            break;
        case GenKind::Delete:
            c.r = 1;
            c.left = {v(1, 0)};
            break;
        case GenKind::Add:
            c.r = 2;
            c.left = {v(2, 0), v(2, 1)};
            c.right = {v(2, 0) + v(2, 1)};
            break;
        case GenKind::Zero:
            c.r = 0;
            c.right = {Poly(ring, 0)};
            break;
        case GenKind::Mult:
            c.r = 2;
            c.left = {v(2, 0), v(2, 1)};
            c.right = {v(2, 0) * v(2, 1)};
            break;
        case GenKind::One:
            c.r = 0;
            c.right = {Poly::constant(ring, 0, Scalar::one(ring))};
            break;
        case GenKind::Scalar: {
            if (g.weight.ring() != ring)
                throw semantic_error("scalar weight " + g.weight.str() + " is not in " + ring.str());
            c.r = 1;
            c.left = {v(1, 0)};
            c.right = {v(1, 0) * g.weight};
            break;
        }
        case GenKind::FourierState:
        case GenKind::ScalarDown:
            throw semantic_error("generator '" + g.str() +
                                 "' has no relational semantics; use the amplitude pipeline");
    }
    if (g.dag) std::swap(c.left, c.right);
    return c;
}

std::vector<Poly> shift_all(const std::vector<Poly>& ps, uint32_t offset, uint32_t new_r) {
    std::vector<Poly> out;
    out.reserve(ps.size());
    for (const Poly& p : ps) out.push_back(p.shift_vars(offset, new_r));
    return out;
}

}  // namespace

CospanForm eval_cospan(const TermPtr& t, const Ring& ring) {
    switch (t->kind) {
        case TermKind::Empty: {
            CospanForm c;
            c.ring = ring;
            return c;
        }
        case TermKind::Id: {
            CospanForm c;
            c.ring = ring;
            c.r = 1;
            c.left = {Poly::var(ring, 1, 0)};
            c.right = c.left;
            return c;
        }
        case TermKind::Swap: {
            CospanForm c;
            c.ring = ring;
            c.r = 2;
            c.left = {Poly::var(ring, 2, 0), Poly::var(ring, 2, 1)};
            c.right = {Poly::var(ring, 2, 1), Poly::var(ring, 2, 0)};
            return c;
        }
        case TermKind::Gen: return gen_cospan(t->gen, ring);
        case TermKind::Comp: {
            CospanForm A = eval_cospan(t->a, ring);
            CospanForm B = eval_cospan(t->b, ring);
            CospanForm c;
            c.ring = ring;
            c.r = A.r + B.r;
            c.left = shift_all(A.left, 0, c.r);
            c.right = shift_all(B.right, A.r, c.r);
            c.ideal = shift_all(A.ideal, 0, c.r);
            for (const Poly& p : shift_all(B.ideal, A.r, c.r)) c.ideal.push_back(p);
            std::vector<Poly> mid_r = shift_all(A.right, 0, c.r);
            std::vector<Poly> mid_l = shift_all(B.left, A.r, c.r);
            for (size_t j = 0; j < mid_r.size(); ++j) {
                Poly w = mid_r[j] - mid_l[j];
                if (!w.is_zero()) c.ideal.push_back(std::move(w));
            }
            return c;
        }
        case TermKind::Tensor: {
            CospanForm A = eval_cospan(t->a, ring);
            CospanForm B = eval_cospan(t->b, ring);
            CospanForm c;
            c.ring = ring;
            c.r = A.r + B.r;
            c.left = shift_all(A.left, 0, c.r);
            for (const Poly& p : shift_all(B.left, A.r, c.r)) c.left.push_back(p);
            c.right = shift_all(A.right, 0, c.r);
            for (const Poly& p : shift_all(B.right, A.r, c.r)) c.right.push_back(p);
            c.ideal = shift_all(A.ideal, 0, c.r);
            for (const Poly& p : shift_all(B.ideal, A.r, c.r)) c.ideal.push_back(p);
            return c;
        }
    }
    throw semantic_error("eval_cospan: bad term");
}

namespace {

// A generator g determines x_v linearly when g = c*x_v + h with v not in h.
// Returns true and sets h (the value of x_v) on success.
bool linear_solve(const Poly& g, uint32_t v, Poly& h) {
    const uint32_t n = g.nvars();
    Monomial xv = Monomial::var(n, v);
    auto it = g.terms().find(xv);
    if (it == g.terms().end()) return false;
    for (const auto& [m, c] : g.terms())
        if (m != xv && m.e[v] > 0) return false;
    Scalar cinv = it->second.inverse();
    h = (Poly::term(g.ring(), xv, it->second) - g) * cinv;
    return true;
}

// Candidate = (generator index, variable) with the highest variable first,
// then the earliest generator.  This fixes the elimination order.
bool find_candidate(const std::vector<Poly>& gens, uint32_t r, size_t& gi, uint32_t& v, Poly& h) {
    for (uint32_t vv = r; vv-- > 0;) {
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) continue;
            if (linear_solve(gens[i], vv, h)) {
                gi = i;
                v = vv;
                return true;
            }
        }
    }
    return false;
}

// Substitute x_v := h everywhere and renumber the remaining variables.
void eliminate_var(CospanForm& c, std::vector<Poly>& gens, size_t gi, uint32_t v, const Poly& h) {
    const uint32_t r = c.r;
    std::vector<Poly> images;
    images.reserve(r);
    for (uint32_t i = 0; i < r; ++i)
        images.push_back(i == v ? h : Poly::var(c.ring, r, i));
    std::vector<uint32_t> renum(r, 0);
    for (uint32_t i = 0; i < r; ++i) renum[i] = i < v ? i : i - 1;
    auto reduce_one = [&](const Poly& p) { return p.substitute(images).rename_vars(renum, r - 1); };

    std::vector<Poly> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i == gi) continue;
        Poly p = reduce_one(gens[i]);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    gens = std::move(out);
    for (Poly& p : c.left) p = reduce_one(p);
    for (Poly& p : c.right) p = reduce_one(p);
    c.r = r - 1;
}

}  // namespace

CospanForm canonicalize(CospanForm c, const MonomialOrder& ord, bool q_reduce) {
    if (q_reduce && c.ring.kind != RingKind::Finite)
        throw semantic_error("field-equation reduction needs a finite field");

    // Pre-elimination: collapse the linear wire equations before any
    // Groebner computation so the variable count stays small.
    {
        size_t gi;
        uint32_t v;
        Poly h;
        while (find_candidate(c.ideal, c.r, gi, v, h)) eliminate_var(c, c.ideal, gi, v, h);
    }

    if (q_reduce) c.ideal = q_saturate(std::move(c.ideal), c.r, c.ring);
    std::vector<Poly> G = buchberger(c.ideal, ord);
    for (Poly& p : c.left) p = normal_form(p, G, ord);
    for (Poly& p : c.right) p = normal_form(p, G, ord);

    // The basis may still determine variables linearly; eliminate until none
    // are left, recomputing the basis each round.
    for (;;) {
        size_t gi;
        uint32_t v;
        Poly h;
        if (!find_candidate(G, c.r, gi, v, h)) break;
        eliminate_var(c, G, gi, v, h);
        G = buchberger(G, ord);
        for (Poly& p : c.left) p = normal_form(p, G, ord);
        for (Poly& p : c.right) p = normal_form(p, G, ord);
    }
    c.ideal = std::move(G);
    return c;
}

TermPtr cospan_to_term(const CospanForm& c) {
    TermPtr lbox = Term::dagger(poly_box(c.left, c.r, c.ring));
    TermPtr gadget = ideal_gadget(c.ideal, c.r, c.ring);
    TermPtr rbox = poly_box(c.right, c.r, c.ring);
    return Term::comp(Term::comp(lbox, gadget), rbox);
}

}  // namespace gag
