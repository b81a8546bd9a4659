#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "gag/csp.hpp"
#include "gag/dsl.hpp"
#include "gag/rewrite.hpp"
#include "gag/semantics.hpp"
#include "gag/zh.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace gag;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string field;
    std::string irreducible;
    std::string order = "grevlex";
    uint64_t max_enum = 0;
    std::string format = "text";
    bool expr = false;  // positionals are DSL text, not paths
};

void add_common(CLI::App* cmd, Config& cfg, bool with_order = true) {
    cmd->add_option("--field", cfg.field, "coefficient field, p or p^t (default: rationals)");
    cmd->add_option("--irreducible", cfg.irreducible,
                    "custom irreducible polynomial, comma-separated coefficients low to high");
    if (with_order)
        cmd->add_option("--order", cfg.order, "monomial order: lex, grlex, grevlex")
            ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    cmd->add_option("--max-enum", cfg.max_enum, "enumeration budget (0 = default)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--expr,-e", cfg.expr, "treat positional arguments as inline text");
}

const FieldSpec* field_of(const Config& cfg, bool required) {
    if (cfg.field.empty()) {
        if (required) throw usage_error("this command requires --field");
        return nullptr;
    }
    if (cfg.irreducible.empty()) return FieldSpec::parse(cfg.field);
    const FieldSpec* base = FieldSpec::parse(cfg.field);
    std::vector<uint32_t> coeffs;
    std::stringstream ss(cfg.irreducible);
    std::string part;
    while (std::getline(ss, part, ',')) coeffs.push_back((uint32_t)std::stoul(part));
    return FieldSpec::get(base->p(), base->t(), coeffs);
}

Ring ring_of(const Config& cfg, bool required) {
    const FieldSpec* f = field_of(cfg, required);
    return f ? Ring::finite(f) : Ring::rationals();
}

std::string slurp(const Config& cfg, const std::string& arg) {
    if (cfg.expr) return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + arg + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json matrix_json(const NMatrix& m) {
    json rows = json::array();
    for (uint64_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (uint64_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

json cospan_json(const CospanForm& c) {
    auto polys = [](const std::vector<Poly>& ps) {
        json a = json::array();
        for (const Poly& p : ps) a.push_back(p.str());
        return a;
    };
    return json{{"r", c.r},
                {"left", polys(c.left)},
                {"right", polys(c.right)},
                {"ideal", polys(c.ideal)}};
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- subcommand bodies ----

int cmd_parse(const Config& cfg, const std::string& arg, const std::string& language) {
    Ring ring = ring_of(cfg, false);
    TermPtr t = parse_term(slurp(cfg, arg), ring, parse_language(language));
    std::ostringstream text;
    text << print_term(t) << "\n"
         << "arity: " << t->n_in() << " -> " << t->n_out() << "\n"
         << "language: " << language_name(detect_language(t)) << "\n";
    json j{{"term", print_term(t)},
           {"arity", {{"in", t->n_in()}, {"out", t->n_out()}}},
           {"language", language_name(detect_language(t))},
           {"size", term_size(t)}};
    emit(cfg, j, text.str());
    return 0;
}

int cmd_normalize(const Config& cfg, const std::string& arg, bool with_matrix) {
    Ring ring = ring_of(cfg, false);
    TermPtr t = parse_term(slurp(cfg, arg), ring);
    MonomialOrder ord = MonomialOrder::parse(cfg.order);
    CospanForm c = canonicalize(eval_cospan(t, ring), ord, /*q_reduce=*/false);
    std::ostringstream text;
    text << c.str() << "\n";
    json j = cospan_json(c);
    j["order"] = cfg.order;
    j["field"] = ring.kind == RingKind::Finite ? json(ring.field->str()) : json(nullptr);
    if (with_matrix) {
        if (ring.kind != RingKind::Finite)
            throw usage_error("--with-matrix requires --field");
        NMatrix m = cospan_matrix(c, cfg.max_enum);
        text << "matrix = " << m.str() << "\n";
        j["matrix"] = matrix_json(m);
    }
    emit(cfg, j, text.str());
    return 0;
}

int cmd_matrix(const Config& cfg, const std::string& arg) {
    Ring ring = ring_of(cfg, true);
    TermPtr t = parse_term(slurp(cfg, arg), ring);
    NMatrix m = matrix_semantics(t, ring, cfg.max_enum);
    json j = matrix_json(m);
    j["field"] = ring.field->str();
    emit(cfg, j, m.str() + "\n");
    return 0;
}

int cmd_equiv(const Config& cfg, const std::string& a, const std::string& b) {
    Ring ring = ring_of(cfg, false);
    TermPtr ta = parse_term(slurp(cfg, a), ring);
    TermPtr tb = parse_term(slurp(cfg, b), ring);
    MonomialOrder ord = MonomialOrder::parse(cfg.order);
    EquivResult r = equiv(ta, tb, ring, ord, cfg.max_enum);
    emit(cfg, json{{"result", equiv_result_name(r)}}, equiv_result_name(r) + "\n");
    switch (r) {
        case EquivResult::Equal: return 0;
        case EquivResult::NotEqual: return 5;
        case EquivResult::Unknown: return 6;
    }
    return 6;
}

int cmd_count(const Config& cfg, const std::string& arg) {
    std::string text = slurp(cfg, arg);
    bool is_cnf = !cfg.expr && arg.size() >= 4 && arg.substr(arg.size() - 4) == ".cnf";
    PolySystem sys = is_cnf ? parse_dimacs(text) : parse_poly_system(text);
    const FieldSpec* f = field_of(cfg, is_cnf);
    if (f && Ring::finite(f) != sys.ring)
        throw semantic_error("--field " + f->str() + " does not match the system's field " +
                             sys.ring.field->str());
    uint64_t n = count_solutions(sys, cfg.max_enum);
    json j{{"count", n},
           {"n", sys.nvars},
           {"q", sys.ring.field->q()},
           {"method", "diagram"}};
    emit(cfg, j, std::to_string(n) + "\n");
    return 0;
}

int cmd_zh_amp(const Config& cfg, const std::string& arg) {
    const FieldSpec* f = field_of(cfg, true);
    ZhTermPtr t = parse_zh_term(slurp(cfg, arg), f);
    uint64_t before = count_closed_calls.load();
    ScaledCycScalar amp = amplitude(t, f, cfg.max_enum);
    uint64_t calls = count_closed_calls.load() - before;
    std::ostringstream text;
    text << amp.str() << "\n" << "oracle calls: " << calls << "\n";
    json coeffs = json::array();
    for (const Int& c : amp.value.c) {
        if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
            coeffs.push_back((int64_t)c);
        else
            coeffs.push_back(c.str());
    }
    json j{{"k", amp.k},
           {"value", coeffs},
           {"p", f->p()},
           {"q", f->q()},
           {"oracle_calls", calls},
           {"text", amp.str()}};
    emit(cfg, j, text.str());
    return 0;
}

int cmd_rules_list(const Config& cfg, const std::string& language) {
    Ring ring = ring_of(cfg, false);
    std::vector<RewriteRule> rules = builtin_rules(parse_language(language), ring);
    std::ostringstream text;
    json arr = json::array();
    for (const RewriteRule& r : rules) {
        text << r.name << " (" << ruleset_name(r.set) << "): " << print_term(r.lhs) << " = "
             << print_term(r.rhs) << "\n";
        arr.push_back(json{{"name", r.name},
                           {"ruleset", ruleset_name(r.set)},
                           {"lhs", print_term(r.lhs)},
                           {"rhs", print_term(r.rhs)}});
    }
    emit(cfg, json{{"language", language}, {"rules", arr}}, text.str());
    return 0;
}

int cmd_rules_check(const Config& cfg, const std::string& qlist) {
    std::vector<const FieldSpec*> fields;
    std::stringstream ss(qlist);
    std::string part;
    while (std::getline(ss, part, ',')) fields.push_back(FieldSpec::parse(part));
    std::ostringstream text;
    json per_q = json::array();
    size_t checked = 0;
    std::vector<std::string> failures;
    for (const FieldSpec* f : fields) {
        Ring ring = Ring::finite(f);
        size_t here = 0;
        for (const RewriteRule& r : rule_catalog(ring)) {
            bool ok;
            if (r.set == RuleSet::ZhExt)
                ok = cyc_equal(fourier_dense_eval(r.lhs, f, cfg.max_enum),
                               fourier_dense_eval(r.rhs, f, cfg.max_enum));
            else
                ok = matrix_semantics(r.lhs, ring, cfg.max_enum) ==
                     matrix_semantics(r.rhs, ring, cfg.max_enum);
            if (!ok) failures.push_back("q=" + f->str() + " " + r.name);
            ++here;
        }
        checked += here;
        text << "q=" << f->str() << ": " << here << " rules checked\n";
        per_q.push_back(json{{"q", f->str()}, {"rules", here}});
    }
    for (const std::string& fl : failures) text << "UNSOUND: " << fl << "\n";
    text << (failures.empty() ? "all rules sound\n" : "catalog unsound\n");
    json j{{"checked", checked}, {"per_q", per_q}, {"failures", failures},
           {"sound", failures.empty()}};
    emit(cfg, j, text.str());
    return failures.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagrammatic commutative algebra over exact fields"};
    app.require_subcommand(1);
    Config cfg;

    std::string input, input2, language = "gag-fourier", qlist = "2,3,4,5";
    bool with_matrix = false;

    CLI::App* parse = app.add_subcommand("parse", "parse a diagram and report its shape");
    add_common(parse, cfg, false);
    parse->add_option("--language", language, "admissible language layer");
    parse->add_option("input", input, "diagram file")->required();

    CLI::App* normalize =
        app.add_subcommand("normalize", "canonical relational form of a diagram");
    add_common(normalize, cfg);
    normalize->add_flag("--with-matrix", with_matrix, "also print the counting matrix");
    normalize->add_option("input", input, "diagram file")->required();

    CLI::App* matrix = app.add_subcommand("matrix", "counting matrix of a diagram");
    add_common(matrix, cfg);
    matrix->add_option("input", input, "diagram file")->required();

    CLI::App* equivc = app.add_subcommand("equiv", "decide semantic equality of two diagrams");
    add_common(equivc, cfg);
    equivc->add_option("input", input, "first diagram file")->required();
    equivc->add_option("input2", input2, "second diagram file")->required();

    CLI::App* count = app.add_subcommand("count", "count solutions of a constraint system");
    add_common(count, cfg, false);
    count->add_option("input", input, "system file (.cnf is DIMACS, else the polynomial format)")
        ->required();

    CLI::App* zhamp = app.add_subcommand("zh-amp", "amplitude of a closed ZH circuit");
    add_common(zhamp, cfg, false);
    zhamp->add_option("input", input, "circuit file")->required();

    CLI::App* rules = app.add_subcommand("rules", "rewrite-rule catalog");
    rules->require_subcommand(1);
    CLI::App* rules_list = rules->add_subcommand("list", "print the catalog for a language");
    add_common(rules_list, cfg, false);
    rules_list->add_option("--language", language, "language layer");
    CLI::App* rules_check =
        rules->add_subcommand("check", "verify soundness of the full catalog");
    rules_check->alias("check-soundness");
    add_common(rules_check, cfg, false);
    rules_check->add_option("--q", qlist, "comma-separated field sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (parse->parsed()) return cmd_parse(cfg, input, language);
        if (normalize->parsed()) return cmd_normalize(cfg, input, with_matrix);
        if (matrix->parsed()) return cmd_matrix(cfg, input);
        if (equivc->parsed()) return cmd_equiv(cfg, input, input2);
        if (count->parsed()) return cmd_count(cfg, input);
        if (zhamp->parsed()) return cmd_zh_amp(cfg, input);
        if (rules_list->parsed()) return cmd_rules_list(cfg, language);
        if (rules_check->parsed()) return cmd_rules_check(cfg, qlist);
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const semantic_error& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
