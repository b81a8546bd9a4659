#include "gag/term.hpp"

#include <algorithm>

namespace gag {

namespace {

uint32_t base_in(GenKind k) {
    switch (k) {
        case GenKind::Copy: return 1;
        case GenKind::Delete: return 1;
        case GenKind::Add: return 2;
        case GenKind::Zero: return 0;
        case GenKind::Mult: return 2;
        case GenKind::One: return 0;
        case GenKind::Scalar: return 1;
        case GenKind::FourierState: return 0;
        case GenKind::ScalarDown: return 0;
    }
    return 0;
}

uint32_t base_out(GenKind k) {
    switch (k) {
        case GenKind::Copy: return 2;
        case GenKind::Delete: return 0;
        case GenKind::Add: return 1;
        case GenKind::Zero: return 1;
        case GenKind::Mult: return 1;
        case GenKind::One: return 1;
        case GenKind::Scalar: return 1;
        case GenKind::FourierState: return 1;
        case GenKind::ScalarDown: return 0;
    }
    return 0;
}

}  // namespace

uint32_t Generator::n_in() const {
    return dag ? base_out(kind) : base_in(kind);
}

uint32_t Generator::n_out() const {
    return dag ? base_in(kind) : base_out(kind);
}

Generator Generator::daggered() const {
    Generator g = *this;
    g.dag = !g.dag;
    return g;
}

bool Generator::operator==(const Generator& o) const {
    if (kind != o.kind || dag != o.dag) return false;
    if (kind == GenKind::Scalar) return weight == o.weight;
    return true;
}

std::string Generator::str() const {
    std::string s;
    switch (kind) {
        case GenKind::Copy: s = "copy"; break;
        case GenKind::Delete: s = "del"; break;
        case GenKind::Add: s = "add"; break;
        case GenKind::Zero: s = "zero"; break;
        case GenKind::Mult: s = "mul"; break;
        case GenKind::One: s = "one"; break;
        case GenKind::Scalar: s = "sc(" + weight.str() + ")"; break;
        case GenKind::FourierState: s = "z1"; break;
        case GenKind::ScalarDown: s = "sdown"; break;
    }
    if (dag) s += "'";
    return s;
}

TermPtr Term::empty() {
    static const TermPtr t(new Term(TermKind::Empty, Generator{}, nullptr, nullptr, 0, 0));
    return t;
}

TermPtr Term::id() {
    static const TermPtr t(new Term(TermKind::Id, Generator{}, nullptr, nullptr, 1, 1));
    return t;
}

TermPtr Term::swap() {
    static const TermPtr t(new Term(TermKind::Swap, Generator{}, nullptr, nullptr, 2, 2));
    return t;
}

TermPtr Term::id_n(uint32_t n) {
    if (n == 0) return empty();
    TermPtr t = id();
    for (uint32_t i = 1; i < n; ++i) t = tensor(t, id());
    return t;
}

TermPtr Term::make_gen(const Generator& g) {
    return TermPtr(new Term(TermKind::Gen, g, nullptr, nullptr, g.n_in(), g.n_out()));
}

TermPtr Term::comp(const TermPtr& x, const TermPtr& y) {
    if (x->n_out() != y->n_in())
        throw semantic_error("composition arity mismatch: left has " + std::to_string(x->n_out()) +
                             " outputs, right has " + std::to_string(y->n_in()) + " inputs");
    return TermPtr(new Term(TermKind::Comp, Generator{}, x, y, x->n_in(), y->n_out()));
}

TermPtr Term::tensor(const TermPtr& x, const TermPtr& y) {
    return TermPtr(new Term(TermKind::Tensor, Generator{}, x, y,
                            x->n_in() + y->n_in(), x->n_out() + y->n_out()));
}

TermPtr Term::dagger(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Empty:
        case TermKind::Id:
        case TermKind::Swap: return t;
        case TermKind::Gen: return make_gen(t->gen.daggered());
        case TermKind::Comp: return comp(dagger(t->b), dagger(t->a));
        case TermKind::Tensor: return tensor(dagger(t->a), dagger(t->b));
    }
    throw semantic_error("dagger: bad term");
}

TermPtr gen_term(GenKind k, bool dag) {
    Generator g;
    g.kind = k;
    g.dag = dag;
    return Term::make_gen(g);
}

TermPtr scalar_term(const Scalar& c, bool dag) {
    Generator g;
    g.kind = GenKind::Scalar;
    g.dag = dag;
    g.weight = c;
    return Term::make_gen(g);
}

size_t term_size(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Gen: return 1;
        case TermKind::Comp:
        case TermKind::Tensor: return term_size(t->a) + term_size(t->b);
        default: return 0;
    }
}

namespace {

void print_rec(const TermPtr& t, std::string& out, TermKind parent, bool right_child) {
    bool parens = false;
    if (t->kind == TermKind::Comp || t->kind == TermKind::Tensor) {
        // ";" and "*" share one precedence level and associate left.
        if (parent == TermKind::Comp || parent == TermKind::Tensor)
            parens = right_child || t->kind != parent;
    }
    if (parens) out += "(";
    switch (t->kind) {
        case TermKind::Empty: out += "id0"; break;
        case TermKind::Id: out += "id"; break;
        case TermKind::Swap: out += "swap"; break;
        case TermKind::Gen: out += t->gen.str(); break;
        case TermKind::Comp:
            print_rec(t->a, out, TermKind::Comp, false);
            out += " ; ";
            print_rec(t->b, out, TermKind::Comp, true);
            break;
        case TermKind::Tensor:
            print_rec(t->a, out, TermKind::Tensor, false);
            out += " * ";
            print_rec(t->b, out, TermKind::Tensor, true);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_term(const TermPtr& t) {
    std::string out;
    print_rec(t, out, TermKind::Empty, false);
    return out;
}

Language detect_language(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Empty:
        case TermKind::Id:
        case TermKind::Swap: return Language::LCALG;
        case TermKind::Gen:
            if (t->gen.kind == GenKind::FourierState || t->gen.kind == GenKind::ScalarDown)
                return Language::GAG_FOURIER;
            return t->gen.dag ? Language::GCA : Language::LCALG;
        case TermKind::Comp:
        case TermKind::Tensor: {
            Language la = detect_language(t->a);
            Language lb = detect_language(t->b);
            return la > lb ? la : lb;
        }
    }
    return Language::LCALG;
}

std::string language_name(Language l) {
    switch (l) {
        case Language::LCALG: return "lcalg";
        case Language::GCA: return "gca";
        case Language::GAG: return "gag";
        case Language::GAG_FOURIER: return "gag-fourier";
    }
    return "?";
}

Language parse_language(const std::string& name) {
    for (Language l : {Language::LCALG, Language::GCA, Language::GAG, Language::GAG_FOURIER})
        if (language_name(l) == name) return l;
    throw parse_error("unknown language '" + name + "'");
}

namespace {

bool ring_of(const TermPtr& t, Ring& out, bool& found) {
    switch (t->kind) {
        case TermKind::Gen:
            if (t->gen.kind == GenKind::Scalar) {
                Ring r = t->gen.weight.ring();
                if (found && !(r == out)) return false;
                out = r;
                found = true;
            }
            return true;
        case TermKind::Comp:
        case TermKind::Tensor:
            return ring_of(t->a, out, found) && ring_of(t->b, out, found);
        default: return true;
    }
}

}  // namespace

Ring term_ring(const TermPtr& t, const Ring& fallback) {
    Ring r = fallback;
    bool found = false;
    if (!ring_of(t, r, found)) throw semantic_error("term mixes scalar weights from different rings");
    return found ? r : fallback;
}

TermPtr perm_term(const std::vector<uint32_t>& dst) {
    uint32_t n = (uint32_t)dst.size();
    std::vector<uint32_t> cur(n);  // cur[pos] = destination of the wire now at pos
    for (uint32_t i = 0; i < n; ++i) cur[i] = dst[i];
    TermPtr t = Term::id_n(n);
    bool moved = true;
    while (moved) {
        moved = false;
        for (uint32_t k = 0; k + 1 < n; ++k) {
            if (cur[k] <= cur[k + 1]) continue;
            std::swap(cur[k], cur[k + 1]);
            TermPtr layer = Term::swap();
            if (k > 0) layer = Term::tensor(Term::id_n(k), layer);
            if (k + 2 < n) layer = Term::tensor(layer, Term::id_n(n - k - 2));
            t = Term::comp(t, layer);
            moved = true;
        }
    }
    return t;
}

TermPtr bus_delete(uint32_t n) {
    TermPtr t = Term::empty();
    for (uint32_t i = 0; i < n; ++i) t = Term::tensor(t, gen_term(GenKind::Delete));
    return t;
}

namespace {

// Grouping permutation for n interleaved pairs: position 2i -> i, 2i+1 -> n+i.
TermPtr ungroup_pairs(uint32_t n) {
    std::vector<uint32_t> dst(2 * n);
    for (uint32_t i = 0; i < n; ++i) {
        dst[2 * i] = i;
        dst[2 * i + 1] = n + i;
    }
    return perm_term(dst);
}

}  // namespace

TermPtr bus_copy(uint32_t copies, uint32_t n) {
    if (n == 0) return Term::empty();
    if (copies == 0) return bus_delete(n);
    if (copies == 1) return Term::id_n(n);
    TermPtr copy_layer = Term::empty();
    for (uint32_t i = 0; i < n; ++i) copy_layer = Term::tensor(copy_layer, gen_term(GenKind::Copy));
    TermPtr two = Term::comp(copy_layer, ungroup_pairs(n));
    if (copies == 2) return two;
    return Term::comp(two, Term::tensor(Term::id_n(n), bus_copy(copies - 1, n)));
}

TermPtr bus_add(uint32_t n) {
    if (n == 0) return Term::empty();
    // [x-bus | y-bus] -> interleaved pairs -> pointwise Add.
    std::vector<uint32_t> dst(2 * n);
    for (uint32_t i = 0; i < n; ++i) {
        dst[i] = 2 * i;
        dst[n + i] = 2 * i + 1;
    }
    TermPtr add_layer = Term::empty();
    for (uint32_t i = 0; i < n; ++i) add_layer = Term::tensor(add_layer, gen_term(GenKind::Add));
    return Term::comp(perm_term(dst), add_layer);
}

TermPtr bus_mult(uint32_t n) {
    if (n == 0) return Term::empty();
    std::vector<uint32_t> dst(2 * n);
    for (uint32_t i = 0; i < n; ++i) {
        dst[i] = 2 * i;
        dst[n + i] = 2 * i + 1;
    }
    TermPtr mul_layer = Term::empty();
    for (uint32_t i = 0; i < n; ++i) mul_layer = Term::tensor(mul_layer, gen_term(GenKind::Mult));
    return Term::comp(perm_term(dst), mul_layer);
}

TermPtr copy_tree(uint32_t m) {
    if (m == 0) return gen_term(GenKind::Delete);
    if (m == 1) return Term::id();
    return Term::comp(gen_term(GenKind::Copy), Term::tensor(Term::id(), copy_tree(m - 1)));
}

namespace {

// n -> 1 projection onto wire i (deletes the rest).
TermPtr projection(uint32_t n, uint32_t i) {
    TermPtr t = Term::empty();
    for (uint32_t k = 0; k < n; ++k)
        t = Term::tensor(t, k == i ? Term::id() : gen_term(GenKind::Delete));
    return t;
}

}  // namespace

TermPtr poly1(const Poly& f) {
    uint32_t n = f.nvars();
    const Ring ring = f.ring();
    if (f.is_zero()) return Term::comp(bus_delete(n), gen_term(GenKind::Zero));
    if (f.terms().size() >= 2) {
        // f = t1 + rest, split off the container-least term.
        auto it = f.terms().begin();
        Poly head = Poly::term(ring, it->first, it->second);
        Poly rest = f - head;
        return Term::comp(bus_copy(2, n),
                          Term::comp(Term::tensor(poly1(head), poly1(rest)), gen_term(GenKind::Add)));
    }
    const auto& [m, c] = *f.terms().begin();
    if (m.is_unit()) {
        TermPtr t = Term::comp(bus_delete(n), gen_term(GenKind::One));
        if (!c.is_one()) t = Term::comp(t, scalar_term(c));
        return t;
    }
    if (!c.is_one()) return Term::comp(poly1(Poly::term(ring, m, Scalar::one(ring))), scalar_term(c));
    uint32_t v = 0;
    while (m.e[v] == 0) ++v;
    if (m.degree() == 1) return projection(n, v);
    // m = x_v * m'
    Monomial rest = m / Monomial::var(n, v);
    return Term::comp(bus_copy(2, n),
                      Term::comp(Term::tensor(projection(n, v), poly1(Poly::term(ring, rest, c))),
                                 gen_term(GenKind::Mult)));
}

TermPtr poly_box(const std::vector<Poly>& fs, uint32_t nvars, const Ring& ring) {
    for (const Poly& f : fs)
        if (f.nvars() != nvars || f.ring() != ring)
            throw semantic_error("poly_box components must share one polynomial ring");
    if (fs.empty()) return bus_delete(nvars);
    if (fs.size() == 1) return poly1(fs[0]);
    TermPtr boxes = poly1(fs[0]);
    for (size_t j = 1; j < fs.size(); ++j) boxes = Term::tensor(boxes, poly1(fs[j]));
    return Term::comp(bus_copy((uint32_t)fs.size(), nvars), boxes);
}

TermPtr ideal_gadget(const std::vector<Poly>& gens, uint32_t nvars, const Ring& ring) {
    TermPtr t = Term::id_n(nvars);
    for (const Poly& g : gens) {
        if (g.nvars() != nvars || g.ring() != ring)
            throw semantic_error("ideal_gadget generators must share one polynomial ring");
        TermPtr test = Term::comp(poly1(g), gen_term(GenKind::Zero, true));  // n -> 0, pins g = 0
        TermPtr step = Term::comp(bus_copy(2, nvars), Term::tensor(Term::id_n(nvars), test));
        t = Term::comp(t, step);
    }
    return t;
}

TermPtr point_state(const Scalar& c) {
    return Term::comp(gen_term(GenKind::One), scalar_term(c));
}

TermPtr white_spider(uint32_t n, uint32_t m) {
    return Term::comp(Term::dagger(copy_tree(n)), copy_tree(m));
}

TermPtr cup_bus(uint32_t n) {
    if (n == 0) return Term::empty();
    TermPtr cup = Term::comp(gen_term(GenKind::Delete, true), gen_term(GenKind::Copy));
    TermPtr cups = cup;
    for (uint32_t i = 1; i < n; ++i) cups = Term::tensor(cups, cup);
    return Term::comp(cups, ungroup_pairs(n));
}

TermPtr cap_bus(uint32_t n) {
    return Term::dagger(cup_bus(n));
}

TermPtr transpose_term(const TermPtr& t) {
    uint32_t n = t->n_in(), m = t->n_out();
    TermPtr s = Term::tensor(cup_bus(n), Term::id_n(m));                    // m -> n + n + m
    s = Term::comp(s, Term::tensor(Term::id_n(n), Term::tensor(t, Term::id_n(m))));  // -> n + m + m
    return Term::comp(s, Term::tensor(Term::id_n(n), cap_bus(m)));          // -> n
}

}  // namespace gag
