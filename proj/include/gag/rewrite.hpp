#pragma once

// The rewrite-rule catalog and graph rewriting: occurrence matching up to
// monoidal bookkeeping (matches are found on the combinatorial graphs) and
// match replacement by cutting wires at the pattern boundary and gluing the
// replacement in.

#include <string>
#include <vector>

#include "gag/opengraph.hpp"

namespace gag {

enum class RuleSet { LCalg, Scalable, GCA, Red, QRed, ZhExt };
std::string ruleset_name(RuleSet s);
RuleSet parse_ruleset(const std::string& name);

struct RewriteRule {
    std::string name;
    RuleSet set = RuleSet::LCalg;
    TermPtr lhs, rhs;  // equal boundary arities; every rule is bidirectional
};

// All rule schemas instantiated over one coefficient ring.  Scalar-indexed
// schemas range over the whole field when it is finite, or over the sample
// set {0, 1, -1, 2, 1/2} over the rationals.  Finite-field-only schemas
// (field-equation reduction, Fourier-state rules) are skipped over Q.
std::vector<RewriteRule> rule_catalog(const Ring& ring);

// The catalog admissible in a language layer: lcalg gets the plain and
// scalable rules, gca adds the daggered rules, gag adds the quotient rules,
// gag-fourier adds the Fourier-state rules.
std::vector<RewriteRule> builtin_rules(Language lang, const Ring& ring);

struct Match {
    std::vector<uint32_t> nodes;  // pattern node -> host node, injective
    struct Cut {
        uint32_t wire;   // host wire this pattern boundary port cuts
        bool side_b;     // endpoint whose external connection the port inherits
    };
    std::vector<Cut> cuts;  // pattern boundary ports: inputs, then outputs
};

// Every injective, port-exact occurrence of pattern in host.  Pattern
// boundary ports cut host wires; a bare-wire pattern (boundary-to-boundary)
// matches any host wire not touched by the node image, in both orientations.
std::vector<Match> find_matches(const OpenGraph& host, const OpenGraph& pattern);

// Replace one occurrence.  Wires that close into endpoint-free cycles are
// materialized as a del' ; del component, which has the same count (q).
OpenGraph apply_match(const OpenGraph& host, const OpenGraph& pattern, const Match& m,
                      const OpenGraph& replacement);

// Rule-level wrappers.  reverse = false rewrites lhs -> rhs.
std::vector<Match> find_rule_matches(const RewriteRule& r, const OpenGraph& host,
                                     bool reverse = false);
OpenGraph apply_rule(const RewriteRule& r, const OpenGraph& host, const Match& m,
                     bool reverse = false);

}  // namespace gag
