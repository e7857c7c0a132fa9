#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayleynut/exact.hpp"
#include "cayleynut/graph.hpp"

namespace cayleynut {

// Proof object for nut status: the graph, its canonical kernel vector
// (coprime integer entries, first entry positive), and the construction it
// came from. Holds only if nullity is exactly 1 and the kernel is full.
struct NutCertificate {
    std::string graph6;
    RationalVector kernel;
    int nullity = 1;
    int degree = -1;  // common degree; -1 when the graph is irregular
    int order = 0;
    std::string provenance;
};

enum class NotNutReason {
    nullity_zero,
    nullity_exceeds_one,
    kernel_has_zero_entry,
    trivial_graph,
};

std::string to_string(NotNutReason reason);

struct NutVerdict {
    bool nut = false;
    std::optional<NutCertificate> certificate;      // set iff nut
    std::optional<NotNutReason> reason;             // set iff not nut
    int nullity = 0;                                // observed nullity (0 for trivial graphs)
};

// Classifies g by exact nullspace computation: nut iff the adjacency nullity
// is exactly 1 and the spanning kernel vector has no zero entry. Graphs on
// at most one vertex are rejected as trivial.
NutVerdict is_nut(const Graph& g);

// {"degree": ..., "graph6": ..., "kernel": ["1", "-1", ...], "order": ...,
//  "provenance": ..., "verified": true}
nlohmann::json certificate_json(const NutCertificate& c);

// Parses certificate_json output back; throws std::invalid_argument on
// missing or malformed fields.
NutCertificate certificate_from_json(const nlohmann::json& j);

// Recomputes everything the certificate claims from its graph6 string alone:
// decodes the graph, recomputes the kernel basis, and compares nullity,
// canonical kernel, order and degree. Returns false on any mismatch.
bool reverify_certificate(const NutCertificate& c);

// Nullity of the circulant adjacency, computed without the matrix as
// deg gcd(f, x^n - 1) over Z[x], where f collects x^s + x^(n-s) for each
// full step and x^(n/2) for the half step.
int circulant_nullity(const ConnectionSet& cs);

// True iff circulant_nullity(cs) = 1. With exactly one vanishing eigenvalue
// the kernel is the alternating +-1 vector, hence automatically full; that
// implication is property-tested against is_nut rather than trusted.
bool circulant_is_nut(const ConnectionSet& cs);

// Visits every connection set of order n with induced degree exactly d, in
// lexicographic order of the sorted step lists. Stops when visit returns
// false; returns false iff stopped early.
bool for_each_connection_set(int n, int d,
                             const std::function<bool(const ConnectionSet&)>& visit);

// Materialized enumeration, same order. Empty when parity or range make d
// unreachable.
std::vector<ConnectionSet> enumerate_connection_sets(int n, int d);

// Lexicographically least connection set producing a nut circulant, or
// nullopt after exhausting the enumeration.
std::optional<ConnectionSet> search_circulant_nut(int n, int d);

// Necessary conditions for a vertex-transitive nut graph on n vertices of
// degree d: either 4 | d, 2 | n and n >= d + 4, or d = 2 (mod 4), 4 | n and
// n >= d + 6. False for d = 0.
bool fowler_necessary(int n, int d);

// Exact characterization of the (n, d) with a d-regular circulant nut graph:
// d > 0, 4 | d, 2 | n; n >= d + 4 if d = 4 (mod 8), n >= d + 6 if 8 | d;
// and (n, d) != (16, 8).
bool circulant_exists(int n, int d);

}  // namespace cayleynut
