#include "gag/zh.hpp"

#include <sstream>

#include "gag/semantics.hpp"

namespace gag {

// ------------------------------------------------------------- cyclotomic

namespace {

void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.p != b.p) throw semantic_error("cyclotomic root orders differ");
}

// Reduce a coefficient vector over exponents 0..p-1 to the 1..w^{p-2} basis
// using w^{p-1} = -(1 + w + ... + w^{p-2}).
Cyclotomic fold(uint32_t p, const std::vector<Int>& full) {
    Cyclotomic r(p);
    for (uint32_t i = 0; i + 1 < p; ++i) r.c[i] = full[i] - full[p - 1];
    return r;
}

}  // namespace

Cyclotomic Cyclotomic::from_int(uint32_t p, const Int& n) {
    Cyclotomic r(p);
    r.c[0] = n;
    return r;
}

Cyclotomic Cyclotomic::root_pow(uint32_t p, uint64_t e) {
    std::vector<Int> full(p, 0);
    full[e % p] = 1;
    return fold(p, full);
}

bool Cyclotomic::is_zero() const {
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same_order(*this, o);
    Cyclotomic r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    check_same_order(*this, o);
    Cyclotomic r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same_order(*this, o);
    std::vector<Int> full(p, 0);
    for (uint32_t i = 0; i + 1 < p; ++i)
        for (uint32_t j = 0; j + 1 < p; ++j) full[(i + j) % p] += c[i] * o.c[j];
    return fold(p, full);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(p);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Int> full(p, 0);
    for (uint32_t i = 0; i + 1 < p; ++i) full[(p - i) % p] += c[i];
    return fold(p, full);
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int mag = c[i] < 0 ? Int(-c[i]) : c[i];
        if (first) {
            if (c[i] < 0) out << "-";
            first = false;
        } else {
            out << (c[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.str();
        if (i > 0) {
            if (mag != 1) out << "*";
            out << "w";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

// ---------------------------------------------------------------- matrices

ScaledCycMatrix ScaledCycMatrix::dagger() const {
    ScaledCycMatrix r{p, q, k, cols, rows, std::vector<Cyclotomic>(v.size(), Cyclotomic(p))};
    for (uint64_t i = 0; i < rows; ++i)
        for (uint64_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

namespace {

std::string half_power_str(uint64_t, int64_t k) {
    std::string e = k % 2 == 0 ? std::to_string(k / 2)
                               : "(" + std::to_string(k) + "/2)";
    if (k % 2 == 0 && k < 0) e = "(" + e + ")";
    return "q^" + e;
}

}  // namespace

std::string ScaledCycMatrix::str() const {
    std::ostringstream out;
    if (k != 0) out << half_power_str(q, k) << " * ";
    out << "[";
    for (uint64_t i = 0; i < rows; ++i) {
        if (i) out << ", ";
        out << "[";
        for (uint64_t j = 0; j < cols; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string ScaledCycScalar::str() const {
    if (k == 0) return value.str();
    std::string v = value.str();
    if (v.find(' ') != std::string::npos) v = "(" + v + ")";
    return half_power_str(q, k) + " * " + v;
}

ScaledCycMatrix cyc_matmul(const ScaledCycMatrix& a, const ScaledCycMatrix& b) {
    if (a.p != b.p || a.q != b.q) throw semantic_error("matrix fields differ");
    if (a.cols != b.rows) throw semantic_error("matrix dimensions do not compose");
    ScaledCycMatrix r{a.p, a.q, a.k + b.k, a.rows, b.cols,
                      std::vector<Cyclotomic>(a.rows * b.cols, Cyclotomic(a.p))};
    for (uint64_t i = 0; i < a.rows; ++i)
        for (uint64_t l = 0; l < a.cols; ++l) {
            if (a.at(i, l).is_zero()) continue;
            for (uint64_t j = 0; j < b.cols; ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, l) * b.at(l, j);
        }
    return r;
}

ScaledCycMatrix cyc_kron(const ScaledCycMatrix& a, const ScaledCycMatrix& b) {
    if (a.p != b.p || a.q != b.q) throw semantic_error("matrix fields differ");
    ScaledCycMatrix r{a.p, a.q, a.k + b.k, a.rows * b.rows, a.cols * b.cols,
                      std::vector<Cyclotomic>(a.rows * b.rows * a.cols * b.cols,
                                              Cyclotomic(a.p))};
    for (uint64_t i = 0; i < a.rows; ++i)
        for (uint64_t j = 0; j < a.cols; ++j)
            for (uint64_t i2 = 0; i2 < b.rows; ++i2)
                for (uint64_t j2 = 0; j2 < b.cols; ++j2)
                    r.at(i * b.rows + i2, j * b.cols + j2) = a.at(i, j) * b.at(i2, j2);
    return r;
}

bool cyc_equal(const ScaledCycMatrix& a, const ScaledCycMatrix& b) {
    if (a.p != b.p || a.q != b.q || a.rows != b.rows || a.cols != b.cols) return false;
    auto all_zero = [](const ScaledCycMatrix& m) {
        for (const Cyclotomic& x : m.v)
            if (!x.is_zero()) return false;
        return true;
    };
    if ((a.k - b.k) % 2 != 0) return all_zero(a) && all_zero(b);
    const ScaledCycMatrix& hi = a.k >= b.k ? a : b;
    const ScaledCycMatrix& lo = a.k >= b.k ? b : a;
    Int scale = pow(Int(a.q), (unsigned)((hi.k - lo.k) / 2));
    Cyclotomic factor = Cyclotomic::from_int(a.p, scale);
    for (size_t i = 0; i < a.v.size(); ++i)
        if (!(hi.v[i] * factor == lo.v[i])) return false;
    return true;
}

// ------------------------------------------------------------------ terms

bool ZhGen::operator==(const ZhGen& o) const {
    if (kind != o.kind || dag != o.dag) return false;
    if (kind == ZhKind::XState) return x == o.x;
    return n == o.n && m == o.m;
}

std::string ZhGen::str() const {
    std::string s;
    switch (kind) {
        case ZhKind::ZSpider:
            s = "Z(" + std::to_string(n) + "," + std::to_string(m) + ")";
            break;
        case ZhKind::HBox:
            s = "H(" + std::to_string(n) + "," + std::to_string(m) + ")";
            break;
        case ZhKind::XState: s = "xstate(" + x.str() + ")"; break;
    }
    if (dag) s += "'";
    return s;
}

ZhTermPtr ZhTerm::empty() {
    return ZhTermPtr(new ZhTerm(TermKind::Empty, {}, nullptr, nullptr, 0, 0));
}

ZhTermPtr ZhTerm::id() { return ZhTermPtr(new ZhTerm(TermKind::Id, {}, nullptr, nullptr, 1, 1)); }

ZhTermPtr ZhTerm::swap() {
    return ZhTermPtr(new ZhTerm(TermKind::Swap, {}, nullptr, nullptr, 2, 2));
}

ZhTermPtr ZhTerm::make_gen(const ZhGen& g) {
    uint32_t ni = g.kind == ZhKind::XState ? 0 : g.n;
    uint32_t no = g.kind == ZhKind::XState ? 1 : g.m;
    if (g.dag) std::swap(ni, no);
    return ZhTermPtr(new ZhTerm(TermKind::Gen, g, nullptr, nullptr, ni, no));
}

ZhTermPtr ZhTerm::comp(const ZhTermPtr& x, const ZhTermPtr& y) {
    if (x->n_out() != y->n_in())
        throw semantic_error("composition arity mismatch: left has " +
                             std::to_string(x->n_out()) + " outputs, right has " +
                             std::to_string(y->n_in()) + " inputs");
    return ZhTermPtr(new ZhTerm(TermKind::Comp, {}, x, y, x->n_in(), y->n_out()));
}

ZhTermPtr ZhTerm::tensor(const ZhTermPtr& x, const ZhTermPtr& y) {
    return ZhTermPtr(new ZhTerm(TermKind::Tensor, {}, x, y, x->n_in() + y->n_in(),
                                x->n_out() + y->n_out()));
}

ZhTermPtr ZhTerm::dagger(const ZhTermPtr& t) {
    switch (t->kind) {
        case TermKind::Empty:
        case TermKind::Id:
        case TermKind::Swap: return t;
        case TermKind::Gen: {
            ZhGen g = t->gen;
            g.dag = !g.dag;
            return make_gen(g);
        }
        case TermKind::Comp: return comp(dagger(t->b), dagger(t->a));
        case TermKind::Tensor: return tensor(dagger(t->a), dagger(t->b));
    }
    throw semantic_error("bad term");
}

ZhTermPtr zh_gen(ZhKind k, uint32_t n, uint32_t m, bool dag) {
    if (k == ZhKind::XState) throw semantic_error("X states carry an element, not leg counts");
    ZhGen g;
    g.kind = k;
    g.n = n;
    g.m = m;
    g.dag = dag;
    return ZhTerm::make_gen(g);
}

ZhTermPtr zh_xstate(const FieldElement& x, bool dag) {
    ZhGen g;
    g.kind = ZhKind::XState;
    g.x = x;
    g.dag = dag;
    return ZhTerm::make_gen(g);
}

size_t zh_term_size(const ZhTermPtr& t) {
    switch (t->kind) {
        case TermKind::Gen: return 1;
        case TermKind::Comp:
        case TermKind::Tensor: return zh_term_size(t->a) + zh_term_size(t->b);
        default: return 0;
    }
}

namespace {

void print_zh_rec(const ZhTermPtr& t, std::string& out, TermKind parent, bool right_child) {
    bool parens = false;
    if (t->kind == TermKind::Comp || t->kind == TermKind::Tensor) {
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
            print_zh_rec(t->a, out, TermKind::Comp, false);
            out += " ; ";
            print_zh_rec(t->b, out, TermKind::Comp, true);
            break;
        case TermKind::Tensor:
            print_zh_rec(t->a, out, TermKind::Tensor, false);
            out += " * ";
            print_zh_rec(t->b, out, TermKind::Tensor, true);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_zh_term(const ZhTermPtr& t) {
    std::string out;
    print_zh_rec(t, out, TermKind::Empty, false);
    return out;
}

// --------------------------------------------------------- dense semantics

namespace {

uint64_t cap_of(uint64_t max_enum) { return max_enum ? max_enum : default_enum_cap(); }

uint64_t checked_qpow(uint64_t q, uint32_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > cap / q)
            throw resource_error("matrix dimension exceeds the enumeration budget; raise "
                                 "--max-enum or GAG_MAX_ENUM");
        r *= q;
    }
    return r;
}

ScaledCycMatrix cyc_zeros(const FieldSpec* f, int64_t k, uint64_t rows, uint64_t cols,
                          uint64_t cap) {
    if (rows != 0 && cols > cap / rows)
        throw resource_error("matrix size exceeds the enumeration budget; raise "
                             "--max-enum or GAG_MAX_ENUM");
    return {f->p(), f->q(), k, rows, cols,
            std::vector<Cyclotomic>(rows * cols, Cyclotomic(f->p()))};
}

ScaledCycMatrix cyc_identity(const FieldSpec* f, uint64_t n, uint64_t cap) {
    ScaledCycMatrix r = cyc_zeros(f, 0, n, n, cap);
    for (uint64_t i = 0; i < n; ++i) r.at(i, i) = Cyclotomic::from_int(f->p(), 1);
    return r;
}

// Decode a mixed-radix index (leftmost wire most significant) into element
// indices.
std::vector<uint64_t> digits_of(uint64_t x, uint32_t wires, uint64_t q) {
    std::vector<uint64_t> d(wires);
    for (uint32_t i = wires; i-- > 0;) {
        d[i] = x % q;
        x /= q;
    }
    return d;
}

ScaledCycMatrix zh_gen_matrix(const ZhGen& g, const FieldSpec* f, uint64_t cap) {
    uint64_t q = f->q();
    uint32_t p = f->p();
    ScaledCycMatrix base;
    switch (g.kind) {
        case ZhKind::ZSpider: {
            if (g.n == 0 && g.m == 0) {
                base = cyc_zeros(f, 0, 1, 1, cap);
                base.at(0, 0) = Cyclotomic::from_int(p, Int(q));
                break;
            }
            uint64_t rows = checked_qpow(q, g.m, cap), cols = checked_qpow(q, g.n, cap);
            base = cyc_zeros(f, 0, rows, cols, cap);
            for (uint64_t j = 0; j < q; ++j) {
                uint64_t r = 0, c = 0;
                for (uint32_t i = 0; i < g.m; ++i) r = r * q + j;
                for (uint32_t i = 0; i < g.n; ++i) c = c * q + j;
                base.at(r, c) = Cyclotomic::from_int(p, 1);
            }
            break;
        }
        case ZhKind::HBox: {
            uint64_t rows = checked_qpow(q, g.m, cap), cols = checked_qpow(q, g.n, cap);
            base = cyc_zeros(f, -1, rows, cols, cap);
            for (uint64_t r = 0; r < rows; ++r) {
                std::vector<uint64_t> ro = digits_of(r, g.m, q);
                for (uint64_t c = 0; c < cols; ++c) {
                    std::vector<uint64_t> ci = digits_of(c, g.n, q);
                    FieldElement prod = FieldElement::one(f);
                    for (uint64_t d : ro) prod = prod * FieldElement::from_index(f, d);
                    for (uint64_t d : ci) prod = prod * FieldElement::from_index(f, d);
                    base.at(r, c) = Cyclotomic::root_pow(p, prod.trace_int());
                }
            }
            break;
        }
        case ZhKind::XState: {
            if (g.x.field() != f) throw semantic_error("X state element from a different field");
            base = cyc_zeros(f, 1, q, 1, cap);
            base.at(g.x.index(), 0) = Cyclotomic::from_int(p, 1);
            break;
        }
    }
    return g.dag ? base.dagger() : base;
}

}  // namespace

ScaledCycMatrix zh_dense_eval(const ZhTermPtr& t, const FieldSpec* f, uint64_t max_enum) {
    uint64_t cap = cap_of(max_enum);
    uint64_t q = f->q();
    switch (t->kind) {
        case TermKind::Empty: return cyc_identity(f, 1, cap);
        case TermKind::Id: return cyc_identity(f, q, cap);
        case TermKind::Swap: {
            ScaledCycMatrix r = cyc_zeros(f, 0, q * q, q * q, cap);
            for (uint64_t x = 0; x < q; ++x)
                for (uint64_t y = 0; y < q; ++y)
                    r.at(y * q + x, x * q + y) = Cyclotomic::from_int(f->p(), 1);
            return r;
        }
        case TermKind::Gen: return zh_gen_matrix(t->gen, f, cap);
        case TermKind::Comp:
            return cyc_matmul(zh_dense_eval(t->b, f, max_enum), zh_dense_eval(t->a, f, max_enum));
        case TermKind::Tensor: {
            ScaledCycMatrix r =
                cyc_kron(zh_dense_eval(t->a, f, max_enum), zh_dense_eval(t->b, f, max_enum));
            if (r.rows != 0 && r.cols > cap / std::max<uint64_t>(r.rows, 1))
                throw resource_error("matrix size exceeds the enumeration budget; raise "
                                     "--max-enum or GAG_MAX_ENUM");
            return r;
        }
    }
    throw semantic_error("bad term");
}

ScaledCycMatrix fourier_dense_eval(const TermPtr& t, const FieldSpec* f, uint64_t max_enum) {
    uint64_t cap = cap_of(max_enum);
    uint64_t q = f->q();
    uint32_t p = f->p();
    switch (t->kind) {
        case TermKind::Empty: return cyc_identity(f, 1, cap);
        case TermKind::Id: return cyc_identity(f, q, cap);
        case TermKind::Swap: {
            ScaledCycMatrix r = cyc_zeros(f, 0, q * q, q * q, cap);
            for (uint64_t x = 0; x < q; ++x)
                for (uint64_t y = 0; y < q; ++y)
                    r.at(y * q + x, x * q + y) = Cyclotomic::from_int(p, 1);
            return r;
        }
        case TermKind::Gen: {
            const Generator& g = t->gen;
            if (g.kind == GenKind::FourierState) {
                ScaledCycMatrix base = cyc_zeros(f, 0, q, 1, cap);
                for (uint64_t j = 0; j < q; ++j)
                    base.at(j, 0) =
                        Cyclotomic::root_pow(p, FieldElement::from_index(f, j).trace_int());
                return g.dag ? base.dagger() : base;
            }
            if (g.kind == GenKind::ScalarDown) {
                ScaledCycMatrix r = cyc_zeros(f, -1, 1, 1, cap);
                r.at(0, 0) = Cyclotomic::from_int(p, 1);
                return r;
            }
            NMatrix nm = matrix_semantics(t, Ring::finite(f), max_enum);
            ScaledCycMatrix r = cyc_zeros(f, 0, nm.cols, nm.rows, cap);
            for (uint64_t i = 0; i < nm.rows; ++i)
                for (uint64_t j = 0; j < nm.cols; ++j)
                    r.at(j, i) = Cyclotomic::from_int(p, Int(nm.at(i, j)));
            return r;
        }
        case TermKind::Comp:
            return cyc_matmul(fourier_dense_eval(t->b, f, max_enum),
                              fourier_dense_eval(t->a, f, max_enum));
        case TermKind::Tensor: {
            ScaledCycMatrix r = cyc_kron(fourier_dense_eval(t->a, f, max_enum),
                                         fourier_dense_eval(t->b, f, max_enum));
            if (r.rows != 0 && r.cols > cap / std::max<uint64_t>(r.rows, 1))
                throw resource_error("matrix size exceeds the enumeration budget; raise "
                                     "--max-enum or GAG_MAX_ENUM");
            return r;
        }
    }
    throw semantic_error("bad term");
}

// -------------------------------------------------------------- translation

namespace {

TermPtr tpI() { return Term::id(); }

// k -> 1 left-fold product; the empty product is the unit.
TermPtr mult_tree(uint32_t k) {
    if (k == 0) return gen_term(GenKind::One);
    if (k == 1) return tpI();
    return Term::comp(Term::tensor(mult_tree(k - 1), tpI()), gen_term(GenKind::Mult));
}

// 1 -> 0: cap the wire against the Fourier state (conjugated when asked).
TermPtr fourier_cap(const Ring& ring, bool conj) {
    TermPtr state = gen_term(GenKind::FourierState);
    if (conj) state = Term::comp(state, scalar_term(-Scalar::one(ring)));
    return Term::comp(Term::tensor(tpI(), state), cap_bus(1));
}

// n -> m box with entries w^{+-tr(product of all leg elements)}, scaled by
// one ScalarDown: each output leg comes off a cup, the cup partners and then
// the inputs feed one left-fold product, and the product wire is capped
// against the Fourier state.
TermPtr translate_h(uint32_t n, uint32_t m, const Ring& ring, bool conj) {
    TermPtr cups = Term::empty();
    for (uint32_t i = 0; i < m; ++i) cups = Term::tensor(cups, cup_bus(1));
    TermPtr step1 = Term::tensor(cups, Term::id_n(n));  // order c1 c1' ... cm cm' x1..xn
    std::vector<uint32_t> dst(2 * m + n);
    for (uint32_t j = 0; j < m; ++j) {
        dst[2 * j] = j;
        dst[2 * j + 1] = m + j;
    }
    for (uint32_t i = 0; i < n; ++i) dst[2 * m + i] = 2 * m + i;
    TermPtr sort = perm_term(dst);  // -> c1..cm c1'..cm' x1..xn
    TermPtr mul = Term::tensor(Term::id_n(m), mult_tree(m + n));
    TermPtr cap = Term::tensor(Term::id_n(m), fourier_cap(ring, conj));
    TermPtr core = Term::comp(Term::comp(Term::comp(step1, sort), mul), cap);
    return Term::tensor(gen_term(GenKind::ScalarDown), core);
}

TermPtr translate_gen(const ZhGen& g, const FieldSpec* f) {
    Ring ring = Ring::finite(f);
    switch (g.kind) {
        case ZhKind::ZSpider:
            return g.dag ? white_spider(g.m, g.n) : white_spider(g.n, g.m);
        case ZhKind::HBox:
            return g.dag ? translate_h(g.m, g.n, ring, true) : translate_h(g.n, g.m, ring, false);
        case ZhKind::XState: {
            if (g.x.field() != f) throw semantic_error("X state element from a different field");
            TermPtr loop = Term::comp(cup_bus(1), cap_bus(1));
            TermPtr t = Term::tensor(Term::tensor(gen_term(GenKind::ScalarDown), loop),
                                     point_state(Scalar(g.x)));
            return g.dag ? Term::dagger(t) : t;
        }
    }
    throw semantic_error("bad generator");
}

}  // namespace

TermPtr translate_to_gag(const ZhTermPtr& t, const FieldSpec* f) {
    switch (t->kind) {
        case TermKind::Empty: return Term::empty();
        case TermKind::Id: return Term::id();
        case TermKind::Swap: return Term::swap();
        case TermKind::Gen: return translate_gen(t->gen, f);
        case TermKind::Comp:
            return Term::comp(translate_to_gag(t->a, f), translate_to_gag(t->b, f));
        case TermKind::Tensor:
            return Term::tensor(translate_to_gag(t->a, f), translate_to_gag(t->b, f));
    }
    throw semantic_error("bad term");
}

// -------------------------------------------------------------------- merge

namespace {

struct Strip {
    const Ring& ring;
    int64_t k = 0;

    // Returns (core, z): core has z extra input wires prepended, one per
    // detached Fourier state, so that t = (z1^z tensor id) ; core.
    std::pair<TermPtr, uint32_t> run(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Empty:
            case TermKind::Id:
            case TermKind::Swap: return {t, 0};
            case TermKind::Gen:
                if (t->gen.kind == GenKind::FourierState) {
                    if (!t->gen.dag) return {Term::id(), 1};
                    // effect form: negate, then cap against a fresh state
                    return run(Term::comp(scalar_term(-Scalar::one(ring)),
                                          Term::comp(Term::tensor(Term::id(),
                                                                  gen_term(GenKind::FourierState)),
                                                     cap_bus(1))));
                }
                if (t->gen.kind == GenKind::ScalarDown) {
                    ++k;
                    return {Term::empty(), 0};
                }
                return {t, 0};
            case TermKind::Comp: {
                auto [ca, za] = run(t->a);
                auto [cb, zb] = run(t->b);
                TermPtr core = Term::comp(Term::tensor(Term::id_n(zb), ca), cb);
                return {core, zb + za};
            }
            case TermKind::Tensor: {
                auto [ca, za] = run(t->a);
                auto [cb, zb] = run(t->b);
                uint32_t na = t->a->n_in(), nb = t->b->n_in();
                // incoming order [za][zb][na][nb] -> feed (ca tensor cb)
                std::vector<uint32_t> dst(zb + na);
                for (uint32_t i = 0; i < zb; ++i) dst[i] = na + i;
                for (uint32_t i = 0; i < na; ++i) dst[zb + i] = i;
                TermPtr shuffle = Term::tensor(
                    Term::tensor(Term::id_n(za), perm_term(dst)), Term::id_n(nb));
                return {Term::comp(shuffle, Term::tensor(ca, cb)), za + zb};
            }
        }
        throw semantic_error("bad term");
    }
};

// 1 -> z fanout through daggered Adds; z = 0 kills the wire instead.
TermPtr fourier_fanout(uint32_t z) {
    if (z == 0) return Term::dagger(gen_term(GenKind::Zero));
    if (z == 1) return Term::id();
    return Term::comp(Term::dagger(gen_term(GenKind::Add)),
                      Term::tensor(Term::id(), fourier_fanout(z - 1)));
}

}  // namespace

std::pair<int64_t, TermPtr> fourier_merge(const TermPtr& d, const FieldSpec* f) {
    Ring ring = Ring::finite(f);
    Strip s{ring};
    auto [core, z] = s.run(d);
    TermPtr d_prime = Term::comp(Term::tensor(fourier_fanout(z), Term::id_n(d->n_in())), core);
    return {s.k, d_prime};
}

ScaledCycMatrix sem_z_one(const TermPtr& d, const FieldSpec* f, uint64_t max_enum) {
    uint64_t cap = cap_of(max_enum);
    Ring ring = Ring::finite(f);
    uint64_t q = f->q();
    uint32_t p = f->p();
    auto [k, d_prime] = fourier_merge(d, f);
    uint64_t rows = checked_qpow(q, d->n_out(), cap), cols = checked_qpow(q, d->n_in(), cap);
    ScaledCycMatrix r = cyc_zeros(f, -k, rows, cols, cap);
    for (uint64_t j = 0; j < q; ++j) {
        FieldElement e = FieldElement::from_index(f, j);
        TermPtr plugged = Term::comp(
            Term::tensor(point_state(Scalar(e)), Term::id_n(d->n_in())), d_prime);
        NMatrix nm = matrix_semantics(plugged, ring, max_enum);  // rows index inputs
        Cyclotomic w = Cyclotomic::root_pow(p, e.trace_int());
        for (uint64_t in = 0; in < cols; ++in)
            for (uint64_t out = 0; out < rows; ++out)
                r.at(out, in) = r.at(out, in) + w * Cyclotomic::from_int(p, Int(nm.at(in, out)));
    }
    return r;
}

ScaledCycScalar amplitude(const ZhTermPtr& t, const FieldSpec* f, uint64_t max_enum) {
    if (t->n_in() != 0 || t->n_out() != 0)
        throw semantic_error("amplitude requires a closed circuit");
    Ring ring = Ring::finite(f);
    auto [k, d_prime] = fourier_merge(translate_to_gag(t, f), f);
    uint32_t p = f->p();
    Cyclotomic acc(p);
    for (uint64_t j = 0; j < f->q(); ++j) {
        FieldElement e = FieldElement::from_index(f, j);
        uint64_t cnt = count_closed(Term::comp(point_state(Scalar(e)), d_prime), ring, max_enum);
        acc = acc + Cyclotomic::root_pow(p, e.trace_int()) * Cyclotomic::from_int(p, Int(cnt));
    }
    return {f->q(), -k, acc};
}

}  // namespace gag
