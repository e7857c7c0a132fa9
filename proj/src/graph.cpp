#include "cayleynut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayleynut {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string provenance)
    : provenance_(std::move(provenance)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adjacency_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("duplicate edge");
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex index out of range");
    return adjacency_[v];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = neighbors(u);
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex index out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::regular_degree() const {
    if (order() == 0) return -1;
    const int d = degree(0);
    for (int v = 1; v < order(); ++v)
        if (degree(v) != d) return -1;
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degs(order());
    for (int v = 0; v < order(); ++v) degs[v] = degree(v);
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adjacency_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

bool Graph::operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graphs need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges, "C" + std::to_string(n));
}

Graph k2() { return Graph(2, {{0, 1}}, "K2"); }

Graph cayley_graph(const FiniteGroup& g, const GeneratorSet& s) {
    // Re-validate: the invariants are exactly what makes the result simple
    // and undirected.
    const GeneratorSet checked = make_generator_set(g, s.elements);

    std::vector<std::pair<int, int>> edges;
    for (Element x = 0; x < g.order(); ++x) {
        for (Element a : checked.elements) {
            const Element y = g.mul(x, a);
            if (x < y) edges.emplace_back(x, y);
        }
    }

    std::string tag = "cayley(" + g.name() + ", {";
    for (std::size_t i = 0; i < checked.elements.size(); ++i) {
        if (i) tag += ", ";
        tag += g.label(checked.elements[i]);
    }
    tag += "})";
    return Graph(g.order(), edges, std::move(tag));
}

Graph cayley_graph(const FiniteGroup& g, std::vector<Element> generators) {
    return cayley_graph(g, make_generator_set(g, std::move(generators)));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const int nb = b.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.order(); ++u) {
        for (int v = 0; v < nb; ++v) {
            for (int w : b.neighbors(v))
                if (v < w) edges.emplace_back(u * nb + v, u * nb + w);
            for (int x : a.neighbors(u))
                if (u < x) edges.emplace_back(u * nb + v, x * nb + v);
        }
    }
    const std::string pa = a.provenance().empty() ? "?" : a.provenance();
    const std::string pb = b.provenance().empty() ? "?" : b.provenance();
    return Graph(a.order() * nb, edges, "cartesian(" + pa + "," + pb + ")");
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    const std::string p = g.provenance().empty() ? "?" : g.provenance();
    return Graph(g.order(), edges, "complement(" + p + ")");
}

int ConnectionSet::degree() const {
    int d = 0;
    for (int s : steps) d += (2 * s == n) ? 1 : 2;
    return d;
}

std::string ConnectionSet::step_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(steps[i]);
    }
    return out + "}";
}

void validate_connection_set(const ConnectionSet& cs) {
    if (cs.n < 1) throw std::invalid_argument("connection set order must be positive");
    int prev = 0;
    for (int s : cs.steps) {
        if (s <= prev) throw std::invalid_argument("steps must be strictly increasing");
        if (s < 1 || 2 * s > cs.n)
            throw std::invalid_argument("step " + std::to_string(s) + " out of range [1, " +
                                        std::to_string(cs.n / 2) + "]");
        prev = s;
    }
}

Graph circulant_graph(const ConnectionSet& cs) {
    validate_connection_set(cs);
    std::vector<std::pair<int, int>> edges;
    for (int s : cs.steps) {
        // A full step yields the n edges {i, i+s}; the half step n/2 yields
        // each of its n/2 edges from both endpoints, so take only half the bases.
        const int bases = (2 * s == cs.n) ? cs.n / 2 : cs.n;
        for (int i = 0; i < bases; ++i) {
            const int j = (i + s) % cs.n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    return Graph(cs.n, edges,
                 "circulant(n=" + std::to_string(cs.n) + ", " + cs.step_string() + ")");
}

}  // namespace cayleynut
