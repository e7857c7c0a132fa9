#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cayleynut/group.hpp"

namespace cayleynut {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; self-loops and parallel edges are rejected.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string provenance = "");

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return edge_count_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;

    // Common degree if the graph is regular, -1 otherwise (or if n = 0).
    int regular_degree() const;

    // Sorted degree sequence, descending.
    std::vector<int> degree_sequence() const;

    // All edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& provenance() const noexcept { return provenance_; }

    // Structural equality on (order, adjacency); provenance is ignored.
    bool operator==(const Graph& other) const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::string provenance_;
    int edge_count_ = 0;
};

// Cycle C_n, n >= 3.
Graph cycle_graph(int n);

// Single edge on two vertices.
Graph k2();

// Cayley graph of g with respect to the generator set: vertices are the group
// elements, with an edge {x, x*a} for every element x and generator a. The
// generator-set invariants guarantee the result is simple, undirected and
// |s|-regular.
Graph cayley_graph(const FiniteGroup& g, const GeneratorSet& s);
Graph cayley_graph(const FiniteGroup& g, std::vector<Element> generators);

// Cartesian product: vertex (u, v) has index u * |b| + v; (u,v) ~ (u',v')
// iff u = u' and v ~ v', or v = v' and u ~ u'.
Graph cartesian_product(const Graph& a, const Graph& b);

// Complement within the same vertex set (no self-loops).
Graph complement(const Graph& g);

// Circulant connection set on Z_n, represented by its half: steps s with
// 1 <= s <= floor(n/2). A step s < n/2 contributes 2 to the degree, the
// half step n/2 (n even) contributes 1.
struct ConnectionSet {
    int n = 0;
    std::vector<int> steps;  // sorted ascending, unique

    int degree() const;
    std::string step_string() const;  // "{1,2,5}"
};

// Throws std::invalid_argument if steps are out of range, unsorted or repeated.
void validate_connection_set(const ConnectionSet& cs);

// Circulant graph: i ~ j iff (i - j) mod n or (j - i) mod n is a step.
Graph circulant_graph(const ConnectionSet& cs);

}  // namespace cayleynut
