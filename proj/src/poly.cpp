#include "gag/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gag {

std::string Ring::str() const {
    if (kind == RingKind::Rationals) return "Q";
    return "F_" + field->str();
}

Scalar Scalar::zero(const Ring& r) {
    if (r.kind == RingKind::Rationals) return Scalar(Rational(0));
    return Scalar(FieldElement::zero(r.field));
}

Scalar Scalar::one(const Ring& r) {
    if (r.kind == RingKind::Rationals) return Scalar(Rational(1));
    return Scalar(FieldElement::one(r.field));
}

Scalar Scalar::from_int(const Ring& r, long long v) {
    if (r.kind == RingKind::Rationals) return Scalar(Rational(v));
    return Scalar(FieldElement::from_int(r.field, v));
}

Scalar Scalar::parse(const Ring& r, const std::string& text) {
    if (r.kind == RingKind::Finite) return Scalar(FieldElement::parse(r.field, text));
    // Rational literal: [-]digits[/digits].
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && isspace((unsigned char)text[i])) ++i; };
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    skip();
    size_t start = i;
    while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
    if (start == i) throw parse_error("cannot parse rational '" + text + "'");
    Rational num(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        start = i;
        while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
        if (start == i) throw parse_error("cannot parse rational '" + text + "'");
        Rational den(text.substr(start, i - start));
        if (den == 0) throw semantic_error("zero denominator in '" + text + "'");
        num /= den;
    }
    skip();
    if (i != text.size()) throw parse_error("trailing input in rational '" + text + "'");
    return Scalar(neg ? Rational(-num) : num);
}

Ring Scalar::ring() const {
    if (std::holds_alternative<Rational>(v_)) return Ring::rationals();
    return Ring::finite(std::get<FieldElement>(v_).field());
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r == 0;
    return std::get<FieldElement>(v_).is_zero();
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r == 1;
    return std::get<FieldElement>(v_).is_one();
}

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index()) throw semantic_error("coefficient ring mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(*r + o.rational()));
    return Scalar(element() + o.element());
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(*r - o.rational()));
    return Scalar(element() - o.element());
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(*r * o.rational()));
    return Scalar(element() * o.element());
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(-*r));
    return Scalar(-element());
}

Scalar Scalar::inverse() const {
    if (auto* r = std::get_if<Rational>(&v_)) {
        if (*r == 0) throw semantic_error("division by zero");
        return Scalar(Rational(1 / *r));
    }
    return Scalar(element().inverse());
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar acc = one(ring());
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (auto* r = std::get_if<Rational>(&v_)) return *r == o.rational();
    return element() == o.element();
}

bool Scalar::operator<(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
    if (auto* r = std::get_if<Rational>(&v_)) return *r < o.rational();
    return element().index() < o.element().index();
}

std::string Scalar::str() const {
    if (auto* r = std::get_if<Rational>(&v_)) return r->str();
    return element().str();
}

Monomial Monomial::var(uint32_t nvars, uint32_t i) {
    Monomial m(nvars);
    m.e[i] = 1;
    return m;
}

uint32_t Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool Monomial::is_unit() const {
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    auto at = [&](const Monomial& m, size_t k) -> uint32_t {
        return perm.empty() ? m.e[k] : m.e[perm[k]];
    };
    size_t n = a.e.size();
    if (kind != OrderKind::Lex) {
        uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
    }
    if (kind == OrderKind::GRevLex) {
        for (size_t k = n; k-- > 0;)
            if (at(a, k) != at(b, k)) return at(a, k) > at(b, k);
        return false;
    }
    for (size_t k = 0; k < n; ++k)
        if (at(a, k) != at(b, k)) return at(a, k) < at(b, k);
    return false;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
    if (name == "lex") return {OrderKind::Lex, {}};
    if (name == "grlex") return {OrderKind::GrLex, {}};
    if (name == "grevlex") return {OrderKind::GRevLex, {}};
    throw parse_error("unknown monomial order '" + name + "' (expected lex, grlex, or grevlex)");
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrLex: return "grlex";
        case OrderKind::GRevLex: return "grevlex";
    }
    return "?";
}

Poly Poly::constant(const Ring& ring, uint32_t nvars, const Scalar& c) {
    Poly p(ring, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::var(const Ring& ring, uint32_t nvars, uint32_t i) {
    Poly p(ring, nvars);
    p.add_term(Monomial::var(nvars, i), Scalar::one(ring));
    return p;
}

Poly Poly::term(const Ring& ring, const Monomial& m, const Scalar& c) {
    Poly p(ring, m.nvars());
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

uint32_t Poly::total_degree() const {
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<bool> Poly::vars_used() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& [m, c] : terms_)
        for (uint32_t i = 0; i < nvars_; ++i)
            if (m.e[i] > 0) used[i] = true;
    return used;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

void Poly::check_compat(const Poly& o) const {
    if (ring_ != o.ring_ || nvars_ != o.nvars_)
        throw semantic_error("polynomial ring mismatch (" + ring_.str() + "[" + std::to_string(nvars_) +
                             "] vs " + o.ring_.str() + "[" + std::to_string(o.nvars_) + "])");
}

Poly Poly::operator+(const Poly& o) const {
    check_compat(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compat(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compat(o);
    Poly r(ring_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
}

Poly Poly::pow(uint32_t e) const {
    Poly acc = constant(ring_, nvars_, Scalar::one(ring_));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool Poly::operator<(const Poly& o) const {
    auto ita = terms_.begin(), itb = o.terms_.begin();
    for (; ita != terms_.end() && itb != o.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return ita->first < itb->first;
        if (ita->second != itb->second) return ita->second < itb->second;
    }
    return itb != o.terms_.end();
}

const std::pair<const Monomial, Scalar>& Poly::leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw semantic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return *best;
}

Poly Poly::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    return *this * leading(ord).second.inverse();
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (uint32_t i = 0; i < nvars_; ++i)
            if (m.e[i] > 0) t = t * point[i].pow(m.e[i]);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw semantic_error("substitute: wrong image count");
    Ring target = ring_;
    uint32_t tn = nvars_;
    if (!images.empty()) {
        target = images[0].ring();
        tn = images[0].nvars();
    }
    Poly acc(target, tn);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, tn, c);
        for (uint32_t i = 0; i < nvars_; ++i)
            if (m.e[i] > 0) t = t * images[i].pow(m.e[i]);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::shift_vars(uint32_t offset, uint32_t new_nvars) const {
    std::vector<uint32_t> image(nvars_);
    for (uint32_t i = 0; i < nvars_; ++i) image[i] = i + offset;
    return rename_vars(image, new_nvars);
}

Poly Poly::rename_vars(const std::vector<uint32_t>& image, uint32_t new_nvars) const {
    Poly r(ring_, new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars);
        for (uint32_t i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (i >= image.size() || image[i] >= new_nvars)
                throw semantic_error("rename_vars: used variable has no image");
            nm.e[image[i]] += m.e[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

Poly Poly::with_nvars(uint32_t new_nvars) const {
    return shift_vars(0, new_nvars);
}

std::vector<std::string> default_var_names(uint32_t nvars) {
    std::vector<std::string> names(nvars);
    for (uint32_t i = 0; i < nvars; ++i) names[i] = "x" + std::to_string(i + 1);
    return names;
}

std::string Poly::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = names_in.empty() ? default_var_names(nvars_) : names_in;
    std::ostringstream os;
    bool first = true;
    // Reverse container order: descending plain lex.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool wrote_coeff = false;
        if (m.is_unit() || cs != "1") {
            bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
            if (needs_parens && !m.is_unit())
                os << "(" << cs << ")";
            else
                os << cs;
            wrote_coeff = true;
        }
        bool first_var = true;
        for (uint32_t i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (wrote_coeff || !first_var) os << "*";
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            first_var = false;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const Ring& ring;
    const std::string& s;
    const std::vector<std::string>& names;
    uint32_t nvars;
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
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("polynomial '" + s + "': " + what + " at offset " + std::to_string(pos));
    }

    Poly expr() {
        Poly v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    Poly term() {
        Poly v = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v = v * factor();
            } else if (c == '/') {
                ++pos;
                Poly d = factor();
                if (!d.is_constant()) fail("division only by constants");
                Scalar dc = d.is_zero() ? Scalar::zero(ring) : d.terms().begin()->second;
                v = v * dc.inverse();
            } else {
                return v;
            }
        }
    }
    Poly factor() {
        // Unary minus binds looser than '^': -x^2 is -(x^2).
        if (eat('-')) return -factor();
        Poly v = base();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected exponent");
            v = v.pow((uint32_t)std::stoul(s.substr(start, pos - start)));
        }
        return v;
    }
    Poly base() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            Poly v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            return Poly::constant(ring, nvars, Scalar::from_int(ring, std::stoll(s.substr(start, pos - start))));
        }
        if (isalpha((unsigned char)s[pos]) || s[pos] == '_') {
            size_t start = pos;
            while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            for (uint32_t i = 0; i < names.size(); ++i)
                if (names[i] == name) return Poly::var(ring, nvars, i);
            if (name == "a" && ring.kind == RingKind::Finite && ring.field->t() > 1)
                return Poly::constant(ring, nvars, Scalar(FieldElement::generator(ring.field)));
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

Poly parse_poly(const Ring& ring, const std::string& text, const std::vector<std::string>& var_names) {
    PolyParser p{ring, text, var_names, (uint32_t)var_names.size()};
    Poly v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace gag
