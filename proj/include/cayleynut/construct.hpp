#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cayleynut/graph.hpp"
#include "cayleynut/nut.hpp"

namespace cayleynut {

enum class Regime { circulant, prism_complement, qd16 };

std::string regime_name(Regime r);

struct ConstructionResult {
    NutCertificate certificate;
    Regime regime = Regime::circulant;
    int n = 0;
    int d = 0;
    std::optional<ConnectionSet> steps;  // circulant regime
    std::optional<int> beta;             // prism regime: cycle length (d + 4) / 2
};

// Complement of the prism C_beta x K_2 with beta = (d + 4) / 2: a d-regular
// graph on d + 4 vertices. Requires d >= 8 and 8 | d; vertex 2j is a_j, 2j+1
// is b_j. Throws InfeasibleError otherwise.
Graph prism_complement(int d);

// The closed-form kernel vector of prism_complement(d): entry (-1)^j at both
// a_j and b_j, so (1, 1, -1, -1, ...). Already canonical.
RationalVector prism_kernel_vector(int d);

// Cayley graph of QD16 with the fixed 8-element generator set
// {s^3, s^5, t, s^2 t, s^3 t, s^4 t, s^6 t, s^7 t}: 8-regular on 16 vertices.
Graph qd16_nut_graph();

inline constexpr int kDefaultSearchWindow = 64;

// Produces a certified d-regular Cayley nut graph on n vertices, choosing the
// regime by the case split: circulant whenever one exists, else QD16 for
// (16, 8), else the prism complement for 8 | d, n = d + 4. Throws
// InfeasibleError when (n, d) is infeasible (d = 0, 4 does not divide d, n odd,
// or n < d + 4) and WindowExceededError when the circulant regime would need a
// search above search_window. Every returned certificate is freshly verified.
ConstructionResult construct_cayley_nut(int n, int d,
                                        int search_window = kDefaultSearchWindow);

// certificate_json plus {"parameters": {...}, "regime": ...}.
nlohmann::json construction_json(const ConstructionResult& r);

}  // namespace cayleynut
