#include "doctest.h"

#include <algorithm>
#include <set>

#include "gag/dsl.hpp"
#include "gag/rewrite.hpp"
#include "gag/semantics.hpp"
#include "random_gen.hpp"

using namespace gag;

namespace {

Ring GFq(uint32_t p, uint32_t t = 1) { return Ring::finite(FieldSpec::get(p, t)); }

TermPtr T(const std::string& src, const Ring& ring) { return parse_term(src, ring); }

NMatrix graph_matrix(const OpenGraph& g, const Ring& ring) {
    return cospan_matrix(canonicalize(graph_cospan(g, ring), MonomialOrder{}, true));
}

const RewriteRule& by_name(const std::vector<RewriteRule>& rules, const std::string& name) {
    for (const auto& r : rules)
        if (r.name == name) return r;
    REQUIRE_MESSAGE(false, "missing rule ", name);
    return rules.front();
}

bool has_rule(const std::vector<RewriteRule>& rules, const std::string& name) {
    return std::any_of(rules.begin(), rules.end(),
                       [&](const RewriteRule& r) { return r.name == name; });
}

}  // namespace

TEST_CASE("rule sets have stable names") {
    for (RuleSet s : {RuleSet::LCalg, RuleSet::Scalable, RuleSet::GCA, RuleSet::Red,
                      RuleSet::QRed, RuleSet::ZhExt})
        CHECK(parse_ruleset(ruleset_name(s)) == s);
    CHECK(ruleset_name(RuleSet::ZhExt) == "zh-ext");
    CHECK_THROWS_AS(parse_ruleset("frobenius"), parse_error);
}

TEST_CASE("catalog layers grow monotonically with the language") {
    Ring f2 = GFq(2);
    auto lcalg = builtin_rules(Language::LCALG, f2);
    auto gca = builtin_rules(Language::GCA, f2);
    auto gag = builtin_rules(Language::GAG, f2);
    auto fourier = builtin_rules(Language::GAG_FOURIER, f2);

    CHECK(lcalg.size() < gca.size());
    CHECK(gca.size() < gag.size());
    CHECK(gag.size() < fourier.size());
    CHECK(fourier.size() == rule_catalog(f2).size());
    CHECK(fourier.size() == 56);

    // Every layer keeps the previous one as a prefix of names.
    std::set<std::string> lcalg_names, gca_names;
    for (const auto& r : lcalg) lcalg_names.insert(r.name);
    for (const auto& r : gca) gca_names.insert(r.name);
    for (const auto& n : lcalg_names) CHECK(gca_names.count(n) == 1);

    CHECK(has_rule(lcalg, "z-unit"));
    CHECK(has_rule(lcalg, "zx-bialg"));
    CHECK(has_rule(lcalg, "poly-comp"));  // scalable schemas live below gca
    CHECK(!has_rule(lcalg, "z-frob"));
    CHECK(!has_rule(lcalg, "qred"));
    CHECK(has_rule(gca, "z-frob"));
    CHECK(has_rule(gca, "mult-trp"));
    CHECK(!has_rule(gca, "red"));
    CHECK(!has_rule(gca, "z1-copy"));
    CHECK(has_rule(gag, "red"));
    CHECK(has_rule(gag, "qred"));
    CHECK(!has_rule(gag, "z1-copy"));
    CHECK(has_rule(fourier, "z1-copy"));
    CHECK(has_rule(fourier, "z1-del"));

    // Scalar-indexed schemas range over the whole finite field...
    Ring f4 = GFq(2, 2);
    auto cat4 = rule_catalog(f4);
    CHECK(has_rule(cat4, "k-copy[a]"));
    CHECK(has_rule(cat4, "k-copy[a+1]"));
    // ... and over a fixed sample set on the rationals, with no
    // field-equation or Fourier rules at all.
    auto catq = rule_catalog(Ring::rationals());
    for (const auto& c : {"0", "1", "-1", "2", "1/2"})
        CHECK(has_rule(catq, std::string("k-copy[") + c + "]"));
    CHECK(!has_rule(catq, "qred"));
    CHECK(has_rule(catq, "red"));  // sound over any field, not just finite ones
    CHECK(!has_rule(catq, "z1-copy"));

    // Rule sides always agree on boundary arities.
    for (const auto& r : fourier) {
        CHECK(r.lhs->n_in() == r.rhs->n_in());
        CHECK(r.lhs->n_out() == r.rhs->n_out());
    }
}

TEST_CASE("matching: occurrences, bare wires, and boundary cuts") {
    Ring f2 = GFq(2);
    auto rules = builtin_rules(Language::GAG, f2);
    const RewriteRule& z_unit = by_name(rules, "z-unit");

    OpenGraph own = OpenGraph::from_term(z_unit.lhs);
    auto ms = find_rule_matches(z_unit, own);
    REQUIRE(!ms.empty());
    // copy ; (id * del) has two nodes and a 1 -> 1 boundary: two cuts.
    CHECK(ms[0].nodes.size() == 2);
    CHECK(ms[0].cuts.size() == 2);

    // No copy node in a bare wire: nothing to rewrite forward.
    CHECK(find_rule_matches(z_unit, OpenGraph::from_term(Term::id())).empty());
    // Reverse direction matches the bare wire itself (both orientations).
    CHECK(find_rule_matches(z_unit, OpenGraph::from_term(Term::id()), true).size() == 2);

    // A bare-wire pattern matches every wire of the host twice.
    OpenGraph host = OpenGraph::from_term(T("copy", f2));
    CHECK(find_matches(host, OpenGraph::from_term(Term::id())).size() == 6);

    // Applying z-unit to its own left side yields a bare wire.
    OpenGraph rewritten = apply_rule(z_unit, own, ms[0]);
    CHECK(rewritten.isomorphic(OpenGraph::from_term(Term::id())));
    CHECK(graph_matrix(rewritten, f2) == matrix_semantics(Term::id(), f2));
}

TEST_CASE("field-equation reduction rewrites a wire into a power gadget and back") {
    Ring f2 = GFq(2);
    auto rules = builtin_rules(Language::GAG, f2);
    const RewriteRule& qred = by_name(rules, "qred");

    OpenGraph wire = OpenGraph::from_term(Term::id());
    auto back_ms = find_rule_matches(qred, wire, true);
    REQUIRE(!back_ms.empty());
    OpenGraph powered = apply_rule(qred, wire, back_ms[0], true);
    CHECK(!powered.isomorphic(wire));
    CHECK(graph_matrix(powered, f2) == identity_matrix(2));

    auto fwd_ms = find_rule_matches(qred, powered);
    REQUIRE(!fwd_ms.empty());
    CHECK(apply_rule(qred, powered, fwd_ms[0]).isomorphic(wire));
}

TEST_CASE("Fourier-state rules rewrite structurally") {
    Ring f3 = GFq(3);
    auto rules = builtin_rules(Language::GAG_FOURIER, f3);
    const RewriteRule& z1_copy = by_name(rules, "z1-copy");
    OpenGraph lhs = OpenGraph::from_term(T("z1 ; add'", f3));
    auto ms = find_rule_matches(z1_copy, lhs);
    REQUIRE(!ms.empty());
    CHECK(apply_rule(z1_copy, lhs, ms[0]).isomorphic(OpenGraph::from_term(T("z1 * z1", f3))));
}

TEST_CASE("every catalog rule preserves the counting matrix") {
    for (Ring ring : {GFq(2), GFq(3)}) {
        for (const auto& r : builtin_rules(Language::GAG, ring)) {
            NMatrix lhs = matrix_semantics(r.lhs, ring);
            NMatrix rhs = matrix_semantics(r.rhs, ring);
            CHECK_MESSAGE(lhs == rhs, r.name, " over ", ring.str());
        }
    }
}

TEST_CASE("rewriting anywhere inside a host preserves the counting matrix") {
    gagtest::Rng rng(0xca7a106ULL);
    std::vector<Ring> rings = {GFq(2), GFq(3)};
    int applied = 0, reversed = 0;
    for (int i = 0; applied < 220 && i < 2000; ++i) {
        Ring ring = rings[i % rings.size()];
        TermPtr host = gagtest::random_term(rng, ring, 1 + gagtest::pick(rng, 5), 3);
        OpenGraph g = OpenGraph::from_term(host);
        NMatrix reference = matrix_semantics(host, ring);

        auto rules = builtin_rules(Language::GAG, ring);
        const RewriteRule& r = rules[gagtest::pick(rng, rules.size())];
        bool rev = gagtest::pick(rng, 2) == 1;
        auto ms = find_rule_matches(r, g, rev);
        if (ms.empty()) continue;
        const Match& m = ms[gagtest::pick(rng, ms.size())];
        OpenGraph out = apply_rule(r, g, m, rev);

        CHECK(out.nin == g.nin);
        CHECK(out.nout == g.nout);
        CHECK_MESSAGE(graph_matrix(out, ring) == reference, r.name,
                      (rev ? " (reversed)" : ""), " on ", print_term(host));
        ++applied;
        if (rev) ++reversed;
    }
    CHECK(applied == 220);
    CHECK(reversed > 40);  // both directions genuinely exercised
}

TEST_CASE("rewriting composes: chains of sound steps stay sound") {
    gagtest::Rng rng(99);
    Ring ring = GFq(2);
    auto rules = builtin_rules(Language::GAG, ring);
    for (int i = 0; i < 25; ++i) {
        TermPtr host = gagtest::random_term(rng, ring, 3, 3);
        OpenGraph g = OpenGraph::from_term(host);
        NMatrix reference = matrix_semantics(host, ring);
        for (int step = 0; step < 4; ++step) {
            const RewriteRule& r = rules[gagtest::pick(rng, rules.size())];
            bool rev = gagtest::pick(rng, 2) == 1;
            auto ms = find_rule_matches(r, g, rev);
            if (ms.empty()) continue;
            g = apply_rule(r, g, ms[gagtest::pick(rng, ms.size())], rev);
        }
        CHECK(graph_matrix(g, ring) == reference);
    }
}
