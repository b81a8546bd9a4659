#include "gag/opengraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gag {

std::string PortRef::str() const {
    if (node == -1) return "in" + std::to_string(idx);
    if (node == -2) return "out" + std::to_string(idx);
    return "n" + std::to_string(node) + (out ? ".out" : ".in") + std::to_string(idx);
}

namespace {

struct Dsu {
    std::vector<uint32_t> parent;
    uint32_t make() {
        parent.push_back((uint32_t)parent.size());
        return (uint32_t)parent.size() - 1;
    }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

struct Builder {
    Dsu dsu;
    std::vector<std::pair<uint32_t, PortRef>> endpoints;  // (half id, real port)
    std::vector<Generator> nodes;

    struct Iface {
        std::vector<uint32_t> ins, outs;
    };

    uint32_t attached_half(const PortRef& p) {
        uint32_t h = dsu.make();
        endpoints.emplace_back(h, p);
        return h;
    }

    Iface build(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Empty: return {};
            case TermKind::Id: {
                uint32_t h = dsu.make();
                return {{h}, {h}};
            }
            case TermKind::Swap: {
                uint32_t h0 = dsu.make(), h1 = dsu.make();
                return {{h0, h1}, {h1, h0}};
            }
            case TermKind::Gen: {
                int32_t k = (int32_t)nodes.size();
                nodes.push_back(t->gen);
                Iface f;
                for (uint32_t i = 0; i < t->n_in(); ++i)
                    f.ins.push_back(attached_half({k, false, i}));
                for (uint32_t i = 0; i < t->n_out(); ++i)
                    f.outs.push_back(attached_half({k, true, i}));
                return f;
            }
            case TermKind::Comp: {
                Iface fa = build(t->a);
                Iface fb = build(t->b);
                for (size_t i = 0; i < fa.outs.size(); ++i) dsu.unite(fa.outs[i], fb.ins[i]);
                return {fa.ins, fb.outs};
            }
            case TermKind::Tensor: {
                Iface fa = build(t->a);
                Iface fb = build(t->b);
                for (uint32_t h : fb.ins) fa.ins.push_back(h);
                for (uint32_t h : fb.outs) fa.outs.push_back(h);
                return fa;
            }
        }
        throw semantic_error("from_term: bad term");
    }
};

}  // namespace

OpenGraph OpenGraph::from_term(const TermPtr& t) {
    Builder b;
    Builder::Iface f = b.build(t);
    OpenGraph g;
    g.nin = t->n_in();
    g.nout = t->n_out();
    g.nodes = std::move(b.nodes);
    for (uint32_t i = 0; i < g.nin; ++i) b.dsu.unite(b.attached_half(PortRef::boundary_in(i)), f.ins[i]);
    for (uint32_t i = 0; i < g.nout; ++i) b.dsu.unite(b.attached_half(PortRef::boundary_out(i)), f.outs[i]);

    // Each connectivity class carries exactly two real ports: one wire.
    std::map<uint32_t, std::vector<PortRef>> classes;
    std::vector<uint32_t> class_order;
    for (const auto& [h, p] : b.endpoints) {
        uint32_t root = b.dsu.find(h);
        auto it = classes.find(root);
        if (it == classes.end()) {
            classes.emplace(root, std::vector<PortRef>{p});
            class_order.push_back(root);
        } else {
            it->second.push_back(p);
        }
    }
    for (uint32_t root : class_order) {
        auto& ps = classes[root];
        if (ps.size() != 2) throw semantic_error("internal error: wire with " + std::to_string(ps.size()) + " endpoints");
        Wire w{ps[0], ps[1]};
        if (w.b < w.a) std::swap(w.a, w.b);
        g.wires.push_back(w);
    }
    return g;
}

uint32_t OpenGraph::wire_at(const PortRef& p) const {
    for (uint32_t i = 0; i < wires.size(); ++i)
        if (wires[i].a == p || wires[i].b == p) return i;
    throw semantic_error("internal error: port " + p.str() + " has no wire");
}

PortRef OpenGraph::peer(const PortRef& p) const {
    const Wire& w = wires[wire_at(p)];
    return w.a == p ? w.b : w.a;
}

std::string OpenGraph::str() const {
    std::ostringstream os;
    os << "graph " << nin << " -> " << nout << "\n";
    for (size_t i = 0; i < nodes.size(); ++i) os << "  n" << i << ": " << nodes[i].str() << "\n";
    for (const Wire& w : wires) os << "  " << w.a.str() << " -- " << w.b.str() << "\n";
    return os.str();
}

namespace {

// Canonical labeling by color refinement with backtracking individualization.
struct Canon {
    const OpenGraph& g;
    size_t n;
    std::vector<std::vector<std::pair<PortRef, PortRef>>> ports;  // per node: (own port, peer)

    explicit Canon(const OpenGraph& gg) : g(gg), n(gg.nodes.size()) {
        ports.resize(n);
        for (size_t k = 0; k < n; ++k) {
            for (uint32_t i = 0; i < g.nodes[k].n_in(); ++i) {
                PortRef p{(int32_t)k, false, i};
                ports[k].emplace_back(p, g.peer(p));
            }
            for (uint32_t i = 0; i < g.nodes[k].n_out(); ++i) {
                PortRef p{(int32_t)k, true, i};
                ports[k].emplace_back(p, g.peer(p));
            }
        }
    }

    std::vector<uint32_t> initial_colors() const {
        std::vector<std::string> sig(n);
        for (size_t k = 0; k < n; ++k) sig[k] = g.nodes[k].str();
        return rank(sig);
    }

    static std::vector<uint32_t> rank(const std::vector<std::string>& sig) {
        std::vector<std::string> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<uint32_t> col(sig.size());
        for (size_t i = 0; i < sig.size(); ++i)
            col[i] = (uint32_t)(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
        return col;
    }

    std::string peer_desc(const PortRef& peer, const std::vector<uint32_t>& col) const {
        if (peer.node == -1) return "I" + std::to_string(peer.idx);
        if (peer.node == -2) return "O" + std::to_string(peer.idx);
        return "c" + std::to_string(col[peer.node]) + (peer.out ? "o" : "i") + std::to_string(peer.idx);
    }

    void refine(std::vector<uint32_t>& col) const {
        for (;;) {
            std::vector<std::string> sig(n);
            for (size_t k = 0; k < n; ++k) {
                std::string s = std::to_string(col[k]) + "|" + g.nodes[k].str();
                for (const auto& [own, peer] : ports[k]) s += ";" + peer_desc(peer, col);
                sig[k] = s;
            }
            std::vector<uint32_t> next = rank(sig);
            if (next == col) return;
            // rank() is order-consistent per round only; iterate on raw ranks.
            bool same_partition = true;
            for (size_t i = 0; i < n && same_partition; ++i)
                for (size_t j = i + 1; j < n && same_partition; ++j)
                    if ((col[i] == col[j]) != (next[i] == next[j])) same_partition = false;
            col = next;
            if (same_partition) return;
        }
    }

    std::string serialize(const std::vector<uint32_t>& col) const {
        // col must be discrete: node k gets position col[k].
        std::vector<size_t> by_rank(n);
        for (size_t k = 0; k < n; ++k) by_rank[col[k]] = k;
        std::ostringstream os;
        os << "g:" << g.nin << ">" << g.nout << "/";
        for (size_t r = 0; r < n; ++r) os << g.nodes[by_rank[r]].str() << ",";
        std::vector<std::string> ws;
        auto pdesc = [&](const PortRef& p) {
            if (p.node == -1) return "I" + std::to_string(p.idx);
            if (p.node == -2) return "O" + std::to_string(p.idx);
            return "n" + std::to_string(col[p.node]) + (p.out ? "o" : "i") + std::to_string(p.idx);
        };
        for (const OpenGraph::Wire& w : g.wires) {
            std::string sa = pdesc(w.a), sb = pdesc(w.b);
            if (sb < sa) std::swap(sa, sb);
            ws.push_back(sa + "-" + sb);
        }
        std::sort(ws.begin(), ws.end());
        os << "/";
        for (const std::string& w : ws) os << w << ";";
        return os.str();
    }

    bool discrete(const std::vector<uint32_t>& col) const {
        std::vector<bool> seen(n, false);
        for (uint32_t c : col) {
            if (seen[c]) return false;
            seen[c] = true;
        }
        return true;
    }

    std::string best;

    void search(std::vector<uint32_t> col) {
        refine(col);
        if (discrete(col)) {
            // Re-rank to a permutation 0..n-1 (refinement keeps ranks dense).
            std::string s = serialize(col);
            if (best.empty() || s < best) best = s;
            return;
        }
        // Split the lowest-colored non-singleton class.
        uint32_t target = UINT32_MAX;
        for (size_t i = 0; i < n; ++i) {
            size_t cnt = 0;
            for (size_t j = 0; j < n; ++j)
                if (col[j] == col[i]) ++cnt;
            if (cnt > 1 && col[i] < target) target = col[i];
        }
        for (size_t k = 0; k < n; ++k) {
            if (col[k] != target) continue;
            std::vector<uint32_t> next = col;
            // Promote node k: shift every color >= target+1 up, give k target+?
            for (size_t j = 0; j < n; ++j)
                if (next[j] > target || (next[j] == target && j != k)) next[j] += 1;
            // now k keeps `target`, its old classmates moved to target+1
            search(std::move(next));
        }
    }
};

}  // namespace

std::string OpenGraph::canonical_string() const {
    Canon c(*this);
    if (nodes.empty()) return c.serialize({});
    c.search(c.initial_colors());
    return c.best;
}

bool OpenGraph::isomorphic(const OpenGraph& o) const {
    if (nin != o.nin || nout != o.nout || nodes.size() != o.nodes.size() || wires.size() != o.wires.size())
        return false;
    return canonical_string() == o.canonical_string();
}

CospanForm graph_cospan(const OpenGraph& g, const Ring& ring) {
    CospanForm c;
    c.ring = ring;
    c.r = (uint32_t)g.wires.size();
    auto wv = [&](const PortRef& p) { return Poly::var(ring, c.r, g.wire_at(p)); };
    for (uint32_t i = 0; i < g.nin; ++i) c.left.push_back(wv(PortRef::boundary_in(i)));
    for (uint32_t i = 0; i < g.nout; ++i) c.right.push_back(wv(PortRef::boundary_out(i)));
    for (size_t k = 0; k < g.nodes.size(); ++k) {
        const Generator& gen = g.nodes[k];
        // Relation variables: A = base-input side, B = base-output side.
        std::vector<Poly> A, B;
        uint32_t ins = gen.n_in(), outs = gen.n_out();
        std::vector<Poly>& to_in = gen.dag ? B : A;
        std::vector<Poly>& to_out = gen.dag ? A : B;
        for (uint32_t i = 0; i < ins; ++i) to_in.push_back(wv({(int32_t)k, false, i}));
        for (uint32_t i = 0; i < outs; ++i) to_out.push_back(wv({(int32_t)k, true, i}));
        switch (gen.kind) {
            case GenKind::Copy:
                c.ideal.push_back(B[0] - A[0]);
                c.ideal.push_back(B[1] - A[0]);
                break;
            case GenKind::Delete: break;
            case GenKind::Add: c.ideal.push_back(B[0] - (A[0] + A[1])); break;
            case GenKind::Zero: c.ideal.push_back(B[0]); break;
            case GenKind::Mult: c.ideal.push_back(B[0] - A[0] * A[1]); break;
            case GenKind::One:
                c.ideal.push_back(B[0] - Poly::constant(ring, c.r, Scalar::one(ring)));
                break;
            case GenKind::Scalar: {
                if (gen.weight.ring() != ring)
                    throw semantic_error("scalar weight " + gen.weight.str() + " is not in " + ring.str());
                c.ideal.push_back(B[0] - A[0] * gen.weight);
                break;
            }
            case GenKind::FourierState:
            case GenKind::ScalarDown:
                throw semantic_error("generator '" + gen.str() +
                                     "' has no relational semantics; use the amplitude pipeline");
        }
    }
    return c;
}

}  // namespace gag
