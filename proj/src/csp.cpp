#include "gag/csp.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "gag/semantics.hpp"

namespace gag {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> significant_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

bool valid_var_name(const std::string& s) {
    if (s.empty() || (!std::isalpha((unsigned char)s[0]) && s[0] != '_')) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

uint64_t capped_pow(uint64_t base, uint32_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (base != 0 && r > cap / base)
            throw resource_error("assignment space exceeds the enumeration budget; raise "
                                 "--max-enum or GAG_MAX_ENUM");
        r *= base;
    }
    return r;
}

}  // namespace

PolySystem parse_poly_system(const std::string& text) {
    std::vector<std::string> lines = significant_lines(text);
    if (lines.size() < 2 || lines[0].rfind("field ", 0) != 0)
        throw parse_error("expected a 'field p^t' line first");
    PolySystem sys;
    sys.ring = Ring::finite(FieldSpec::parse(strip(lines[0].substr(6))));
    if (lines[1].rfind("vars", 0) != 0)
        throw parse_error("expected a 'vars ...' line after the field line");
    std::string vars = strip(lines[1].substr(4));
    if (!vars.empty()) {
        std::istringstream vin(vars);
        std::string name;
        while (std::getline(vin, name, ',')) {
            name = strip(name);
            if (!valid_var_name(name)) throw parse_error("bad variable name '" + name + "'");
            if (sys.ring.field->t() > 1 && name == "a")
                throw parse_error("variable name 'a' collides with the field generator");
            for (const std::string& prev : sys.var_names)
                if (prev == name) throw parse_error("duplicate variable name '" + name + "'");
            sys.var_names.push_back(name);
        }
    }
    sys.nvars = (uint32_t)sys.var_names.size();
    for (size_t i = 2; i < lines.size(); ++i)
        sys.constraints.push_back(parse_poly(sys.ring, lines[i], sys.var_names));
    return sys;
}

Poly clause_poly(uint32_t nvars, const std::vector<int>& literals) {
    Ring f2 = Ring::finite(FieldSpec::get(2, 1));
    Poly p = Poly::constant(f2, nvars, Scalar::one(f2));
    for (int lit : literals) {
        if (lit == 0 || (uint32_t)std::abs(lit) > nvars)
            throw parse_error("literal out of range");
        Poly x = Poly::var(f2, nvars, (uint32_t)std::abs(lit) - 1);
        p = p * (lit > 0 ? x + Poly::constant(f2, nvars, Scalar::one(f2)) : x);
    }
    return p;
}

PolySystem parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    PolySystem sys;
    sys.ring = Ring::finite(FieldSpec::get(2, 1));
    long nclauses = -1;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == '%') break;  // SATLIB end marker
        if (line[0] == 'p') {
            std::istringstream h(line);
            std::string p, cnf;
            long nv = -1;
            if (!(h >> p >> cnf >> nv >> nclauses) || cnf != "cnf" || nv < 0 || nclauses < 0)
                throw parse_error("bad DIMACS header '" + line + "'");
            sys.nvars = (uint32_t)nv;
            sys.var_names = default_var_names(sys.nvars);
            continue;
        }
        if (nclauses < 0) throw parse_error("DIMACS clause before 'p cnf' header");
        std::istringstream body(line);
        int lit;
        while (body >> lit) {
            if (lit == 0) {
                sys.constraints.push_back(clause_poly(sys.nvars, clause));
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (nclauses < 0) throw parse_error("missing DIMACS 'p cnf' header");
    if (!clause.empty()) throw parse_error("unterminated DIMACS clause");
    if ((long)sys.constraints.size() != nclauses)
        throw parse_error("DIMACS clause count does not match the header");
    return sys;
}

TermPtr system_to_diagram(const PolySystem& sys) {
    TermPtr prep = Term::empty();
    TermPtr drop = Term::empty();
    for (uint32_t i = 0; i < sys.nvars; ++i) {
        prep = Term::tensor(prep, gen_term(GenKind::Delete, true));
        drop = Term::tensor(drop, gen_term(GenKind::Delete));
    }
    return Term::comp(Term::comp(prep, ideal_gadget(sys.constraints, sys.nvars, sys.ring)), drop);
}

uint64_t count_solutions(const PolySystem& sys, uint64_t max_enum) {
    return count_closed(system_to_diagram(sys), sys.ring, max_enum);
}

uint64_t brute_force_count(const PolySystem& sys, uint64_t max_enum) {
    uint64_t cap = max_enum ? max_enum : default_enum_cap();
    uint64_t q = sys.ring.field->q();
    uint64_t total = capped_pow(q, sys.nvars, cap);
    std::vector<FieldElement> elems = enumerate_field(sys.ring.field);
    std::vector<uint32_t> point(sys.nvars, 0);
    uint64_t hits = 0;
    for (uint64_t it = 0; it < total; ++it) {
        bool ok = true;
        for (const Poly& g : sys.constraints) {
            FieldElement sum = FieldElement::zero(sys.ring.field);
            for (const auto& [mono, coeff] : g.terms()) {
                FieldElement term = coeff.element();
                for (uint32_t v = 0; v < mono.nvars(); ++v)
                    for (uint32_t k = 0; k < mono.e[v]; ++k) term = term * elems[point[v]];
                sum = sum + term;
            }
            if (!sum.is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) ++hits;
        for (uint32_t v = sys.nvars; v-- > 0;) {
            if (++point[v] < q) break;
            point[v] = 0;
        }
    }
    return hits;
}

}  // namespace gag
