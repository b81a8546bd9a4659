#include "gag/dsl.hpp"

#include <cctype>

namespace gag {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at offset " + std::to_string(i));
    }
    std::string ident() {
        skip_ws();
        size_t b = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (b == i) fail("expected a name");
        return s.substr(b, i - b);
    }
    uint32_t number() {
        skip_ws();
        size_t b = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (b == i) fail("expected a number");
        return (uint32_t)std::stoul(s.substr(b, i - b));
    }
    // Consume up to the closing delimiter, tracking '(' nesting.
    std::string until(char open, char close) {
        skip_ws();
        size_t b = i;
        int depth = 1;
        while (i < s.size()) {
            if (s[i] == open) ++depth;
            if (s[i] == close && --depth == 0) {
                std::string body = s.substr(b, i - b);
                ++i;
                return body;
            }
            ++i;
        }
        fail(std::string("missing '") + close + "'");
    }
};

// Top-level comma split of a bracket body, respecting parentheses.
std::vector<std::string> split_commas(const std::string& body) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')') --depth;
        if (body[i] == ',' && depth == 0) {
            out.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(body.substr(start));
    return out;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace((unsigned char)c)) return false;
    return true;
}

// Highest x<k> index mentioned; 0 when none.
uint32_t max_var_index(const std::string& text) {
    uint32_t best = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        if (i > 0 && (std::isalnum((unsigned char)text[i - 1]) || text[i - 1] == '_')) continue;
        size_t j = i + 1, b = j;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        if (j == b) continue;
        if (j < text.size() && (std::isalpha((unsigned char)text[j]) || text[j] == '_')) continue;
        best = std::max(best, (uint32_t)std::stoul(text.substr(b, j - b)));
    }
    return best;
}

// Body of poly[...] / ideal[...]: optional "n;" wire-count override, then
// comma-separated polynomials.
std::pair<std::vector<Poly>, uint32_t> parse_poly_list(Cursor& c, const std::string& body,
                                                       const Ring& ring) {
    std::string polys = body;
    uint32_t nvars = 0;
    bool forced = false;
    size_t semi = body.find(';');
    if (semi != std::string::npos) {
        std::string head = body.substr(0, semi);
        size_t pos = 0;
        unsigned long n = 0;
        try {
            n = std::stoul(head, &pos);
        } catch (const std::exception&) {
            c.fail("expected a wire count before ';'");
        }
        if (!blank(head.substr(pos))) c.fail("expected a wire count before ';'");
        nvars = (uint32_t)n;
        forced = true;
        polys = body.substr(semi + 1);
    }
    std::vector<std::string> parts = split_commas(polys);
    if (parts.size() == 1 && blank(parts[0])) parts.clear();
    if (!forced)
        for (const std::string& p : parts) nvars = std::max(nvars, max_var_index(p));
    std::vector<Poly> out;
    std::vector<std::string> names = default_var_names(nvars);
    for (const std::string& p : parts) out.push_back(parse_poly(ring, p, names));
    return {out, nvars};
}

struct TermParser {
    Cursor c;
    const Ring& ring;

    TermPtr parse() {
        TermPtr t = atom();
        for (;;) {
            if (c.eat(';')) {
                TermPtr rhs = atom();
                if (t->n_out() != rhs->n_in())
                    c.fail("';' joins " + std::to_string(t->n_out()) + " outputs to " +
                           std::to_string(rhs->n_in()) + " inputs");
                t = Term::comp(t, rhs);
            } else if (c.eat('*')) {
                t = Term::tensor(t, atom());
            } else {
                break;
            }
        }
        return t;
    }

    TermPtr atom() {
        TermPtr t;
        if (c.eat('(')) {
            t = parse();
            c.expect(')');
        } else {
            std::string w = c.ident();
            if (w == "id") t = Term::id();
            else if (w == "id0") t = Term::empty();
            else if (w == "swap") t = Term::swap();
            else if (w == "copy") t = gen_term(GenKind::Copy);
            else if (w == "del") t = gen_term(GenKind::Delete);
            else if (w == "add") t = gen_term(GenKind::Add);
            else if (w == "zero") t = gen_term(GenKind::Zero);
            else if (w == "mul") t = gen_term(GenKind::Mult);
            else if (w == "one") t = gen_term(GenKind::One);
            else if (w == "z1") t = gen_term(GenKind::FourierState);
            else if (w == "sdown") t = gen_term(GenKind::ScalarDown);
            else if (w == "sc") {
                c.expect('(');
                t = scalar_term(Scalar::parse(ring, c.until('(', ')')));
            } else if (w == "state") {
                c.expect('(');
                t = point_state(Scalar::parse(ring, c.until('(', ')')));
            } else if (w == "poly") {
                c.expect('[');
                auto [fs, n] = parse_poly_list(c, c.until('\0', ']'), ring);
                t = poly_box(fs, n, ring);
            } else if (w == "ideal") {
                c.expect('[');
                auto [fs, n] = parse_poly_list(c, c.until('\0', ']'), ring);
                t = ideal_gadget(fs, n, ring);
            } else {
                c.fail("unknown name '" + w + "'");
            }
        }
        while (c.eat('\'')) t = Term::dagger(t);
        return t;
    }
};

struct ZhParser {
    Cursor c;
    const FieldSpec* f;

    ZhTermPtr parse() {
        ZhTermPtr t = atom();
        for (;;) {
            if (c.eat(';')) {
                ZhTermPtr rhs = atom();
                if (t->n_out() != rhs->n_in())
                    c.fail("';' joins " + std::to_string(t->n_out()) + " outputs to " +
                           std::to_string(rhs->n_in()) + " inputs");
                t = ZhTerm::comp(t, rhs);
            } else if (c.eat('*')) {
                t = ZhTerm::tensor(t, atom());
            } else {
                break;
            }
        }
        return t;
    }

    ZhTermPtr atom() {
        ZhTermPtr t;
        if (c.eat('(')) {
            t = parse();
            c.expect(')');
        } else {
            std::string w = c.ident();
            if (w == "id") t = ZhTerm::id();
            else if (w == "id0") t = ZhTerm::empty();
            else if (w == "swap") t = ZhTerm::swap();
            else if (w == "Z" || w == "H") {
                c.expect('(');
                uint32_t n = c.number();
                c.expect(',');
                uint32_t m = c.number();
                c.expect(')');
                t = zh_gen(w == "Z" ? ZhKind::ZSpider : ZhKind::HBox, n, m);
            } else if (w == "xstate") {
                c.expect('(');
                t = zh_xstate(FieldElement::parse(f, c.until('(', ')')));
            } else {
                c.fail("unknown name '" + w + "'");
            }
        }
        while (c.eat('\'')) t = ZhTerm::dagger(t);
        return t;
    }
};

}  // namespace

TermPtr parse_term(const std::string& text, const Ring& ring, Language lang) {
    TermParser p{{text}, ring};
    TermPtr t;
    try {
        t = p.parse();
    } catch (const semantic_error& e) {
        // arity violations from factories surface as parse errors with position
        p.c.fail(e.what());
    }
    if (!p.c.done()) p.c.fail("trailing input");
    Language used = detect_language(t);
    if (used > lang)
        throw parse_error("term uses " + language_name(used) +
                          " generators, not admissible in " + language_name(lang));
    if (used == Language::GAG_FOURIER && ring.kind != RingKind::Finite)
        throw semantic_error("Fourier generators require a finite field");
    return t;
}

ZhTermPtr parse_zh_term(const std::string& text, const FieldSpec* f) {
    ZhParser p{{text}, f};
    ZhTermPtr t;
    try {
        t = p.parse();
    } catch (const semantic_error& e) {
        p.c.fail(e.what());
    }
    if (!p.c.done()) p.c.fail("trailing input");
    return t;
}

}  // namespace gag
