#include "gag/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gag {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// F_p[x] helpers on low-to-high coefficient vectors (no trailing zeros).
using PPoly = std::vector<uint32_t>;

void strip(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % p;
    strip(r);
    return r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // Fermat; p is prime and a != 0.
    uint64_t r = 1, base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (uint32_t)r;
}

// a mod m, destructive on a.
PPoly pmod(PPoly a, const PPoly& m, uint32_t p) {
    strip(a);
    uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        uint64_t c = (uint64_t)a.back() * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = c * m[i] % p;
            a[shift + i] = (uint32_t)((a[shift + i] + p - sub) % p);
        }
        strip(a);
        if (a.empty()) break;
    }
    return a;
}

// Enumerate all monic polynomials of exact degree d over F_p.
std::vector<PPoly> monic_polys(uint32_t d, uint32_t p) {
    std::vector<PPoly> out;
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        PPoly f(d + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < d; ++i) {
            f[i] = (uint32_t)(c % p);
            c /= p;
        }
        f[d] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

bool is_irreducible(const PPoly& f, uint32_t p) {
    uint32_t t = (uint32_t)f.size() - 1;
    for (uint32_t d = 1; d <= t / 2; ++d)
        for (const PPoly& g : monic_polys(d, p))
            if (pmod(f, g, p).empty()) return false;
    return true;
}

// Conway polynomials for the shipped small extensions, low-to-high.
const std::map<std::pair<uint32_t, uint32_t>, PPoly>& builtin_irreducibles() {
    static const std::map<std::pair<uint32_t, uint32_t>, PPoly> table = {
        {{2, 2}, {1, 1, 1}},        // a^2 + a + 1
        {{2, 3}, {1, 1, 0, 1}},     // a^3 + a + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // a^4 + a + 1
        {{3, 2}, {2, 2, 1}},        // a^2 + 2a + 2
        {{3, 3}, {1, 2, 0, 1}},     // a^3 + 2a + 1
        {{5, 2}, {2, 4, 1}},        // a^2 + 4a + 2
    };
    return table;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t t, std::vector<uint32_t> irred)
    : p_(p), t_(t), irred_(std::move(irred)) {
    if (!is_prime(p)) throw semantic_error("field characteristic " + std::to_string(p) + " is not prime");
    if (t < 1) throw semantic_error("extension degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < t; ++i) {
        if (q_ > UINT64_MAX / p) throw resource_error("field order overflows");
        q_ *= p;
    }
    if (t == 1) {
        irred_.clear();
        return;
    }
    if (irred_.size() != t + 1) throw semantic_error("irreducible must have degree t");
    for (uint32_t& c : irred_) c %= p;
    if (irred_.back() != 1) throw semantic_error("irreducible must be monic");
    if (!is_irreducible(irred_, p)) throw semantic_error("modulus polynomial is reducible over F_" + std::to_string(p));
}

const FieldSpec* FieldSpec::get(uint32_t p, uint32_t t) {
    if (t == 1) return get(p, 1, {});
    auto it = builtin_irreducibles().find({p, t});
    if (it == builtin_irreducibles().end())
        throw semantic_error("no built-in irreducible for GF(" + std::to_string(p) + "^" + std::to_string(t) +
                             "); supply one with --irreducible");
    return get(p, t, it->second);
}

const FieldSpec* FieldSpec::get(uint32_t p, uint32_t t, const std::vector<uint32_t>& irred) {
    // Interned so FieldElement can hold a stable pointer.
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<FieldSpec>> cache;
    std::vector<uint32_t> key_irred = irred;
    if (t == 1) key_irred.clear();
    for (uint32_t& c : key_irred) c %= p;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, t, key_irred);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, t, key_irred))).first;
    return it->second.get();
}

const FieldSpec* FieldSpec::parse(const std::string& text) {
    parse_error bad("cannot parse field spec '" + text + "' (expected p or p^t)");
    size_t caret = text.find('^');
    try {
        if (caret == std::string::npos) {
            size_t pos = 0;
            unsigned long q = std::stoul(text, &pos);
            if (pos != text.size() || q < 2) throw bad;
            // factor a bare prime power
            unsigned long p = q;
            for (unsigned long d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    break;
                }
            uint32_t t = 0;
            unsigned long rest = q;
            while (rest % p == 0) {
                rest /= p;
                ++t;
            }
            if (rest != 1) throw parse_error("'" + text + "' is not a prime power");
            return get((uint32_t)p, t);
        }
        size_t pos = 0;
        unsigned long p = std::stoul(text.substr(0, caret), &pos);
        if (pos != caret) throw bad;
        unsigned long t = std::stoul(text.substr(caret + 1), &pos);
        if (pos != text.size() - caret - 1) throw bad;
        return get((uint32_t)p, (uint32_t)t);
    } catch (const std::logic_error&) {
        throw bad;
    }
}

std::string FieldSpec::str() const {
    if (t_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(t_);
}

FieldElement FieldElement::zero(const FieldSpec* f) {
    return FieldElement(f, std::vector<uint32_t>(f->t(), 0));
}

FieldElement FieldElement::one(const FieldSpec* f) {
    std::vector<uint32_t> c(f->t(), 0);
    c[0] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_int(const FieldSpec* f, long long v) {
    long long m = v % (long long)f->p();
    if (m < 0) m += f->p();
    std::vector<uint32_t> c(f->t(), 0);
    c[0] = (uint32_t)m;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::generator(const FieldSpec* f) {
    if (f->t() < 2) throw semantic_error("prime field has no extension generator 'a'");
    std::vector<uint32_t> c(f->t(), 0);
    c[1] = 1;
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_index(const FieldSpec* f, uint64_t idx) {
    if (idx >= f->q()) throw semantic_error("element index out of range");
    std::vector<uint32_t> c(f->t(), 0);
    for (uint32_t i = 0; i < f->t(); ++i) {
        c[i] = (uint32_t)(idx % f->p());
        idx /= f->p();
    }
    return FieldElement(f, std::move(c));
}

uint64_t FieldElement::index() const {
    uint64_t idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * f_->p() + c_[i];
    return idx;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t x) { return x == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
    if (f_ != o.f_) throw semantic_error("field mismatch between operands");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c_[i] + o.c_[i]) % f_->p();
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c_[i] + f_->p() - o.c_[i]) % f_->p();
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (f_->p() - c_[i]) % f_->p();
    return FieldElement(f_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    PPoly a(c_), b(o.c_);
    strip(a);
    strip(b);
    PPoly prod = pmul(a, b, f_->p());
    if (f_->t() > 1 && prod.size() >= f_->irreducible().size())
        prod = pmod(std::move(prod), f_->irreducible(), f_->p());
    prod.resize(f_->t(), 0);
    return FieldElement(f_, std::move(prod));
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = one(f_);
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw semantic_error("division by zero in " + f_->str());
    return pow(f_->q() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    return f_ == o.f_ && c_ == o.c_;
}

FieldElement FieldElement::trace() const {
    // tr(x) = sum of Frobenius conjugates; lands in the prime subfield.
    return FieldElement::from_int(FieldSpec::get(f_->p(), 1), trace_int());
}

uint32_t FieldElement::trace_int() const {
    FieldElement acc = zero(f_);
    uint64_t pe = 1;
    for (uint32_t i = 0; i < f_->t(); ++i) {
        acc = acc + this->pow(pe);
        pe *= f_->p();
    }
    return acc.c_[0];
}

std::string FieldElement::str() const {
    if (f_->t() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

namespace {

// Recursive-descent parser for element expressions over `a` and integers.
struct ElemParser {
    const FieldSpec* f;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("element '" + s + "': " + what + " at offset " + std::to_string(pos));
    }

    FieldElement expr() {
        FieldElement v = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    FieldElement term() {
        FieldElement v = factor();
        for (;;) {
            skip();
            if (eat('*'))
                v = v * factor();
            else
                return v;
        }
    }
    FieldElement factor() {
        FieldElement v = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected exponent");
            v = v.pow(std::stoull(s.substr(start, pos - start)));
        }
        return v;
    }
    FieldElement atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            FieldElement v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s[pos] == 'a') {
            ++pos;
            return FieldElement::generator(f);
        }
        if (isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            return FieldElement::from_int(f, std::stoll(s.substr(start, pos - start)));
        }
        fail("unexpected character");
    }
};

}  // namespace

FieldElement FieldElement::parse(const FieldSpec* f, const std::string& text) {
    ElemParser p{f, text};
    FieldElement v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

std::vector<FieldElement> enumerate_field(const FieldSpec* f) {
    std::vector<FieldElement> out;
    out.reserve(f->q());
    for (uint64_t i = 0; i < f->q(); ++i) out.push_back(FieldElement::from_index(f, i));
    return out;
}

}  // namespace gag
