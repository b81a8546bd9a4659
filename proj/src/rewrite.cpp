#include "gag/rewrite.hpp"

#include <algorithm>
#include <map>

namespace gag {

std::string ruleset_name(RuleSet s) {
    switch (s) {
        case RuleSet::LCalg: return "lcalg";
        case RuleSet::Scalable: return "scalable";
        case RuleSet::GCA: return "gca";
        case RuleSet::Red: return "red";
        case RuleSet::QRed: return "qred";
        case RuleSet::ZhExt: return "zh-ext";
    }
    return "?";
}

RuleSet parse_ruleset(const std::string& name) {
    for (RuleSet s : {RuleSet::LCalg, RuleSet::Scalable, RuleSet::GCA, RuleSet::Red,
                      RuleSet::QRed, RuleSet::ZhExt})
        if (ruleset_name(s) == name) return s;
    throw parse_error("unknown rule set '" + name + "'");
}

// ---------------------------------------------------------------- matching

namespace {

struct Matcher {
    const OpenGraph& host;
    const OpenGraph& pattern;
    std::vector<Match>& out;

    std::vector<uint32_t> node_map;
    std::vector<bool> host_used;

    // pattern wires split by shape
    struct PWire {
        PortRef a, b;
    };
    std::vector<PWire> internal;   // both endpoints on pattern nodes
    std::vector<PWire> halves;     // a = node port, b = boundary
    std::vector<PWire> pure;       // both endpoints boundary

    Matcher(const OpenGraph& h, const OpenGraph& p, std::vector<Match>& o)
        : host(h), pattern(p), out(o), node_map(p.nodes.size()), host_used(h.nodes.size(), false) {
        for (const OpenGraph::Wire& w : pattern.wires) {
            bool ab = w.a.is_boundary(), bb = w.b.is_boundary();
            if (!ab && !bb)
                internal.push_back({w.a, w.b});
            else if (ab && bb)
                pure.push_back({w.a, w.b});
            else if (ab)
                halves.push_back({w.b, w.a});
            else
                halves.push_back({w.a, w.b});
        }
    }

    PortRef map_port(const PortRef& p) const {
        return {(int32_t)node_map[p.node], p.out, p.idx};
    }

    // pattern boundary port -> cut slot index (inputs then outputs)
    uint32_t slot(const PortRef& b) const {
        return b.node == -1 ? b.idx : pattern.nin + b.idx;
    }

    bool nodes_consistent(size_t placed) const {
        // wires whose endpoints are both on nodes < placed and at least one
        // on the newest node must be realized in the host
        for (const PWire& w : internal) {
            if ((size_t)w.a.node >= placed || (size_t)w.b.node >= placed) continue;
            if ((size_t)w.a.node + 1 != placed && (size_t)w.b.node + 1 != placed) continue;
            if (host.peer(map_port(w.a)) != map_port(w.b)) return false;
        }
        return true;
    }

    void assign(size_t i) {
        if (i == pattern.nodes.size()) {
            finish();
            return;
        }
        for (uint32_t h = 0; h < host.nodes.size(); ++h) {
            if (host_used[h] || !(host.nodes[h] == pattern.nodes[i])) continue;
            node_map[i] = h;
            host_used[h] = true;
            if (nodes_consistent(i + 1)) assign(i + 1);
            host_used[h] = false;
        }
    }

    void finish() {
        Match m;
        m.nodes = node_map;
        m.cuts.assign(pattern.nin + pattern.nout, Match::Cut{0, false});
        for (const PWire& w : halves) {
            uint32_t hw = host.wire_at(map_port(w.a));
            bool inherit_b = host.wires[hw].a == map_port(w.a);  // the other side
            m.cuts[slot(w.b)] = {hw, inherit_b};
        }
        // pure wires pick host wires disjoint from the node image
        std::vector<bool> covered_wire(host.wires.size(), false);
        std::vector<bool> image(host.nodes.size(), false);
        for (uint32_t h : node_map) image[h] = true;
        for (uint32_t wi = 0; wi < host.wires.size(); ++wi) {
            const auto& w = host.wires[wi];
            if ((!w.a.is_boundary() && image[w.a.node]) || (!w.b.is_boundary() && image[w.b.node]))
                covered_wire[wi] = true;
        }
        choose_pure(0, covered_wire, m);
    }

    void choose_pure(size_t k, std::vector<bool>& taken, Match& m) {
        if (k == pure.size()) {
            out.push_back(m);
            return;
        }
        for (uint32_t wi = 0; wi < host.wires.size(); ++wi) {
            if (taken[wi]) continue;
            for (bool a_first : {false, true}) {
                m.cuts[slot(pure[k].a)] = {wi, a_first};
                m.cuts[slot(pure[k].b)] = {wi, !a_first};
                taken[wi] = true;
                choose_pure(k + 1, taken, m);
                taken[wi] = false;
            }
        }
    }
};

}  // namespace

std::vector<Match> find_matches(const OpenGraph& host, const OpenGraph& pattern) {
    std::vector<Match> out;
    Matcher m(host, pattern, out);
    m.assign(0);
    return out;
}

std::vector<Match> find_rule_matches(const RewriteRule& r, const OpenGraph& host, bool reverse) {
    return find_matches(host, OpenGraph::from_term(reverse ? r.rhs : r.lhs));
}

// ---------------------------------------------------------------- applying

namespace {

// Vertex of the reassembly multigraph.
struct VKey {
    enum Kind { HostPort, ReplPort, Token } kind;
    PortRef port;   // HostPort/ReplPort (ReplPort nodes indexed within replacement)
    uint32_t token; // Token
    bool operator==(const VKey& o) const {
        if (kind != o.kind) return false;
        if (kind == Token) return token == o.token;
        return port == o.port;
    }
    bool operator<(const VKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (kind == Token) return token < o.token;
        return port < o.port;
    }
};

VKey host_v(const PortRef& p) { return {VKey::HostPort, p, 0}; }
VKey repl_v(const PortRef& p) { return {VKey::ReplPort, p, 0}; }
VKey token_v(uint32_t t) { return {VKey::Token, {}, t}; }

}  // namespace

OpenGraph apply_match(const OpenGraph& host, const OpenGraph& pattern, const Match& m,
                      const OpenGraph& replacement) {
    std::vector<bool> removed(host.nodes.size(), false);
    for (uint32_t h : m.nodes) removed[h] = true;
    auto covered = [&](const PortRef& p) { return !p.is_boundary() && removed[p.node]; };

    // claims: host wire -> (token, inherit side) pairs
    std::map<uint32_t, std::vector<std::pair<uint32_t, bool>>> claims;
    for (uint32_t t = 0; t < m.cuts.size(); ++t) claims[m.cuts[t].wire].emplace_back(t, m.cuts[t].side_b);

    std::vector<std::pair<VKey, VKey>> edges;
    for (uint32_t wi = 0; wi < host.wires.size(); ++wi) {
        const auto& w = host.wires[wi];
        int cov = (covered(w.a) ? 1 : 0) + (covered(w.b) ? 1 : 0);
        auto it = claims.find(wi);
        size_t nclaims = it == claims.end() ? 0 : it->second.size();
        if (nclaims == 0) {
            if (cov == 0) edges.emplace_back(host_v(w.a), host_v(w.b));
            // cov == 2: wire interior to the match, consumed
            continue;
        }
        if (nclaims == 1) {
            auto [t, side_b] = it->second[0];
            edges.emplace_back(host_v(side_b ? w.b : w.a), token_v(t));
            continue;
        }
        // two claims: either a wire crossing the match twice (both endpoints
        // covered) or a bare-wire pattern cutting an untouched wire
        auto [t0, s0] = it->second[0];
        auto [t1, s1] = it->second[1];
        if (cov == 2) {
            edges.emplace_back(token_v(t0), token_v(t1));
        } else {
            edges.emplace_back(host_v(s0 ? w.b : w.a), token_v(t0));
            edges.emplace_back(host_v(s1 ? w.b : w.a), token_v(t1));
        }
    }
    for (const auto& rw : replacement.wires) {
        auto vert = [&](const PortRef& p) -> VKey {
            if (p.node == -1) return token_v(p.idx);
            if (p.node == -2) return token_v(replacement.nin + p.idx);
            return repl_v(p);
        };
        edges.emplace_back(vert(rw.a), vert(rw.b));
    }

    // Build the result graph: kept host nodes, then replacement nodes, then
    // loop materializations.
    OpenGraph g;
    g.nin = host.nin;
    g.nout = host.nout;
    std::vector<uint32_t> host_index(host.nodes.size(), 0);
    for (uint32_t i = 0; i < host.nodes.size(); ++i) {
        if (removed[i]) continue;
        host_index[i] = (uint32_t)g.nodes.size();
        g.nodes.push_back(host.nodes[i]);
    }
    uint32_t repl_base = (uint32_t)g.nodes.size();
    for (const Generator& gen : replacement.nodes) g.nodes.push_back(gen);

    auto final_port = [&](const VKey& v) -> PortRef {
        if (v.kind == VKey::HostPort) {
            if (v.port.is_boundary()) return v.port;
            return {(int32_t)host_index[v.port.node], v.port.out, v.port.idx};
        }
        return {(int32_t)(repl_base + v.port.node), v.port.out, v.port.idx};
    };

    // adjacency; real vertices have degree 1, tokens degree 2
    std::map<VKey, std::vector<size_t>> adj;
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back(e);
        adj[edges[e].second].push_back(e);
    }
    std::vector<bool> used_edge(edges.size(), false);
    auto walk = [&](VKey v, size_t e) -> VKey {
        for (;;) {
            used_edge[e] = true;
            VKey u = edges[e].first == v ? edges[e].second : edges[e].first;
            if (u.kind != VKey::Token) return u;
            const auto& es = adj[u];
            size_t next = es[0] == e ? es[1] : es[0];
            if (next == e) {  // token whose both edge slots are this edge: self-loop
                return u;
            }
            v = u;
            e = next;
        }
    };

    auto add_wire = [&](PortRef a, PortRef b) {
        if (b < a) std::swap(a, b);
        g.wires.push_back({a, b});
    };

    for (size_t e = 0; e < edges.size(); ++e) {
        if (used_edge[e]) continue;
        const VKey& s = edges[e].first;
        const VKey& t = edges[e].second;
        if (s.kind == VKey::Token && t.kind == VKey::Token) continue;  // maybe mid-path; visit from an end
        VKey start = s.kind != VKey::Token ? s : t;
        used_edge[e] = false;
        VKey end = walk(start, e);
        add_wire(final_port(start), final_port(end));
    }
    // Anything left is a token-only cycle: close it with a del' ; del pair.
    for (size_t e = 0; e < edges.size(); ++e) {
        if (used_edge[e]) continue;
        // mark the whole cycle
        VKey v = edges[e].first;
        size_t cur = e;
        while (!used_edge[cur]) {
            used_edge[cur] = true;
            VKey u = edges[cur].first == v ? edges[cur].second : edges[cur].first;
            const auto& es = adj[u];
            size_t next = es[0] == cur ? es[1] : es[0];
            v = u;
            cur = next;
        }
        uint32_t d1 = (uint32_t)g.nodes.size();
        Generator del_dag;
        del_dag.kind = GenKind::Delete;
        del_dag.dag = true;
        g.nodes.push_back(del_dag);
        Generator del;
        del.kind = GenKind::Delete;
        g.nodes.push_back(del);
        add_wire({(int32_t)d1, true, 0}, {(int32_t)(d1 + 1), false, 0});
    }
    return g;
}

OpenGraph apply_rule(const RewriteRule& r, const OpenGraph& host, const Match& m, bool reverse) {
    return apply_match(host, OpenGraph::from_term(reverse ? r.rhs : r.lhs), m,
                       OpenGraph::from_term(reverse ? r.lhs : r.rhs));
}

// ----------------------------------------------------------------- catalog

namespace {

TermPtr C() { return gen_term(GenKind::Copy); }
TermPtr D() { return gen_term(GenKind::Delete); }
TermPtr A() { return gen_term(GenKind::Add); }
TermPtr Z() { return gen_term(GenKind::Zero); }
TermPtr M() { return gen_term(GenKind::Mult); }
TermPtr O() { return gen_term(GenKind::One); }
TermPtr I() { return Term::id(); }
TermPtr S() { return Term::swap(); }
TermPtr E() { return Term::empty(); }
TermPtr dg(const TermPtr& t) { return Term::dagger(t); }
TermPtr cm(const TermPtr& a, const TermPtr& b) { return Term::comp(a, b); }
TermPtr cm(const TermPtr& a, const TermPtr& b, const TermPtr& c) { return cm(cm(a, b), c); }
TermPtr cm(const TermPtr& a, const TermPtr& b, const TermPtr& c, const TermPtr& d) {
    return cm(cm(a, b, c), d);
}
TermPtr tn(const TermPtr& a, const TermPtr& b) { return Term::tensor(a, b); }
TermPtr tn(const TermPtr& a, const TermPtr& b, const TermPtr& c) { return tn(tn(a, b), c); }

std::vector<Scalar> scalar_samples(const Ring& ring) {
    std::vector<Scalar> out;
    if (ring.kind == RingKind::Finite) {
        for (const FieldElement& e : enumerate_field(ring.field)) out.push_back(Scalar(e));
    } else {
        out.push_back(Scalar(Rational(0)));
        out.push_back(Scalar(Rational(1)));
        out.push_back(Scalar(Rational(-1)));
        out.push_back(Scalar(Rational(2)));
        out.push_back(Scalar(Rational(1) / 2));
    }
    return out;
}

}  // namespace

std::vector<RewriteRule> rule_catalog(const Ring& ring) {
    std::vector<RewriteRule> rules;
    auto add = [&](const std::string& name, RuleSet set, const TermPtr& lhs, const TermPtr& rhs) {
        if (lhs->n_in() != rhs->n_in() || lhs->n_out() != rhs->n_out())
            throw semantic_error("rule " + name + " has mismatched arities");
        rules.push_back({name, set, lhs, rhs});
    };
    std::vector<Scalar> ks = scalar_samples(ring);

    // --- commutative-bialgebra core ---
    add("z-assoc", RuleSet::LCalg, cm(C(), tn(C(), I())), cm(C(), tn(I(), C())));
    add("z-symm", RuleSet::LCalg, cm(C(), S()), C());
    add("z-unit", RuleSet::LCalg, cm(C(), tn(I(), D())), I());
    add("x-assoc", RuleSet::LCalg, cm(tn(A(), I()), A()), cm(tn(I(), A()), A()));
    add("x-symm", RuleSet::LCalg, cm(S(), A()), A());
    add("x-unit", RuleSet::LCalg, cm(tn(Z(), I()), A()), I());
    add("m-assoc", RuleSet::LCalg, cm(tn(M(), I()), M()), cm(tn(I(), M()), M()));
    add("m-symm", RuleSet::LCalg, cm(S(), M()), M());
    add("m-unit", RuleSet::LCalg, cm(tn(O(), I()), M()), I());
    add("add-cp", RuleSet::LCalg, cm(A(), C()),
        cm(tn(C(), C()), tn(I(), S(), I()), tn(A(), A())));
    add("zero-cp", RuleSet::LCalg, cm(Z(), C()), tn(Z(), Z()));
    add("mult-cp", RuleSet::LCalg, cm(M(), C()),
        cm(tn(C(), C()), tn(I(), S(), I()), tn(M(), M())));
    add("one-cp", RuleSet::LCalg, cm(O(), C()), tn(O(), O()));
    add("add-del", RuleSet::LCalg, cm(A(), D()), tn(D(), D()));
    add("zero-del", RuleSet::LCalg, cm(Z(), D()), E());
    add("mult-del", RuleSet::LCalg, cm(M(), D()), tn(D(), D()));
    add("one-del", RuleSet::LCalg, cm(O(), D()), E());
    add("zx-bialg", RuleSet::LCalg, cm(tn(I(), A()), M()),
        cm(tn(C(), I(), I()), tn(I(), S(), I()), tn(M(), M()), A()));
    add("sc-one", RuleSet::LCalg, scalar_term(Scalar::one(ring)), I());
    add("zero-in-k", RuleSet::LCalg, scalar_term(Scalar::zero(ring)), cm(D(), Z()));
    for (const Scalar& c : ks) {
        std::string cs = "[" + c.str() + "]";
        add("k-copy" + cs, RuleSet::LCalg, cm(scalar_term(c), C()),
            cm(C(), tn(scalar_term(c), scalar_term(c))));
        add("k-del" + cs, RuleSet::LCalg, cm(scalar_term(c), D()), D());
        add("k-mult" + cs, RuleSet::LCalg, cm(tn(scalar_term(c), I()), M()), cm(M(), scalar_term(c)));
        add("k-add2" + cs, RuleSet::LCalg, cm(tn(scalar_term(c), scalar_term(c)), A()),
            cm(A(), scalar_term(c)));
    }
    for (const Scalar& x : ks)
        for (const Scalar& y : ks) {
            std::string cs = "[" + x.str() + "," + y.str() + "]";
            add("k-add" + cs, RuleSet::LCalg,
                cm(C(), tn(scalar_term(x), scalar_term(y)), A()), scalar_term(x + y));
            add("k-assoc" + cs, RuleSet::LCalg, cm(scalar_term(x), scalar_term(y)),
                scalar_term(x * y));
        }

    // --- dagger rules ---
    add("x-bone", RuleSet::GCA, cm(Z(), dg(Z())), E());
    add("z-frob", RuleSet::GCA, cm(tn(C(), I()), tn(I(), dg(C()))), cm(dg(C()), C()));
    add("x-frob", RuleSet::GCA, cm(tn(dg(A()), I()), tn(I(), A())), cm(A(), dg(A())));
    add("z-fusion", RuleSet::GCA, cm(tn(I(), C()), tn(dg(C()), I())), cm(dg(C()), C()));
    {
        Scalar minus_one = -Scalar::one(ring);
        add("cup", RuleSet::GCA, cm(Z(), dg(A()), tn(I(), scalar_term(minus_one))),
            cm(dg(D()), C()));
        add("cap", RuleSet::GCA, cm(tn(I(), scalar_term(minus_one)), A(), dg(Z())),
            cm(dg(C()), D()));
    }
    add("mult-trp", RuleSet::GCA, transpose_term(M()), dg(M()));
    add("one-trp", RuleSet::GCA, cm(tn(I(), O()), cap_bus(1)), dg(O()));
    for (const Scalar& c : ks) {
        std::string cs = "[" + c.str() + "]";
        add("k-trp" + cs, RuleSet::GCA, transpose_term(scalar_term(c)), scalar_term(c, true));
        if (!c.is_zero())
            add("k-inv" + cs, RuleSet::GCA, scalar_term(c, true), scalar_term(c.inverse()));
    }

    // --- scalable (function-box) rules, at a fixed instantiating tuple ---
    {
        uint32_t n = 3, mm = 2;
        auto X = [&](uint32_t i) { return Poly::var(ring, n, i); };
        std::vector<Poly> f = {X(0) + X(1), X(0) * X(2) + X(0) * X(0)};
        std::vector<Poly> g = {X(2), X(0)};
        TermPtr bf = poly_box(f, n, ring);
        TermPtr bg = poly_box(g, n, ring);
        add("poly-copy", RuleSet::Scalable, cm(bf, bus_copy(2, mm)),
            cm(bus_copy(2, n), tn(bf, bf)));
        add("poly-del", RuleSet::Scalable, cm(bf, bus_delete(mm)), bus_delete(n));
        std::vector<Poly> fg_sum = {f[0] + g[0], f[1] + g[1]};
        add("poly-add", RuleSet::Scalable, cm(bus_copy(2, n), tn(bf, bg), bus_add(mm)),
            poly_box(fg_sum, n, ring));
        std::vector<Poly> fg_prod = {f[0] * g[0], f[1] * g[1]};
        add("poly-mult", RuleSet::Scalable, cm(bus_copy(2, n), tn(bf, bg), bus_mult(mm)),
            poly_box(fg_prod, n, ring));
        Poly h = Poly::var(ring, mm, 0) * Poly::var(ring, mm, 1);  // h(y1,y2) = y1*y2
        std::vector<Poly> hf = {h.substitute({f[0], f[1]})};
        add("poly-comp", RuleSet::Scalable, cm(bf, poly_box({h}, mm, ring)),
            poly_box(hf, n, ring));
    }

    // --- quotient rules ---
    {
        Poly x = Poly::var(ring, 1, 0);
        add("red", RuleSet::Red, cm(poly1(x * x), dg(Z())), dg(Z()));
        if (ring.kind == RingKind::Finite) {
            uint64_t q = ring.field->q();
            add("qred", RuleSet::QRed, poly1(x.pow((uint32_t)q)), I());
        }
    }

    // --- Fourier-state rules ---
    if (ring.kind == RingKind::Finite) {
        TermPtr z1 = gen_term(GenKind::FourierState);
        add("z1-copy", RuleSet::ZhExt, cm(z1, dg(A())), tn(z1, z1));
        add("z1-del", RuleSet::ZhExt, cm(z1, dg(Z())), E());
    }
    return rules;
}

std::vector<RewriteRule> builtin_rules(Language lang, const Ring& ring) {
    auto admits = [&](RuleSet s) {
        switch (s) {
            case RuleSet::LCalg:
            case RuleSet::Scalable: return true;
            case RuleSet::GCA: return lang >= Language::GCA;
            case RuleSet::Red:
            case RuleSet::QRed: return lang >= Language::GAG;
            case RuleSet::ZhExt: return lang >= Language::GAG_FOURIER;
        }
        return false;
    };
    std::vector<RewriteRule> out;
    for (RewriteRule& r : rule_catalog(ring))
        if (admits(r.set)) out.push_back(std::move(r));
    return out;
}

}  // namespace gag
