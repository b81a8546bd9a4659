#pragma once

// Combinatorial form of a diagram: generator nodes with ordered ports, wires
// as unordered endpoint pairs, and labeled boundary positions.  Terms that
// differ only by monoidal-category bookkeeping (associativity, identity
// wires, swap plumbing) produce isomorphic graphs; generator port order is
// significant.

#include <string>
#include <vector>

#include "gag/cospan.hpp"
#include "gag/term.hpp"

namespace gag {

struct PortRef {
    int32_t node = 0;  // >= 0: generator node; -1: input boundary; -2: output boundary
    bool out = false;  // node ports only: output side
    uint32_t idx = 0;

    static PortRef boundary_in(uint32_t i) { return {-1, false, i}; }
    static PortRef boundary_out(uint32_t i) { return {-2, false, i}; }
    bool is_boundary() const { return node < 0; }
    auto operator<=>(const PortRef&) const = default;
    std::string str() const;
};

struct OpenGraph {
    struct Wire {
        PortRef a, b;  // normalized so a <= b
        bool operator==(const Wire&) const = default;
    };

    std::vector<Generator> nodes;
    std::vector<Wire> wires;
    uint32_t nin = 0, nout = 0;

    static OpenGraph from_term(const TermPtr& t);

    // Every node port and boundary position lies on exactly one wire.
    uint32_t wire_at(const PortRef& p) const;
    PortRef peer(const PortRef& p) const;

    // Deterministic complete invariant: two graphs are isomorphic (as
    // boundary-labeled port graphs) iff their canonical strings coincide.
    std::string canonical_string() const;
    bool isomorphic(const OpenGraph& o) const;
    std::string str() const;
};

// Relational reading: one variable per wire, node equations as the ideal.
CospanForm graph_cospan(const OpenGraph& g, const Ring& ring);

}  // namespace gag
