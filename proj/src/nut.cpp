#include "cayleynut/nut.hpp"

#include <stdexcept>
#include <utility>

#include "cayleynut/errors.hpp"
#include "cayleynut/formats.hpp"
#include "cayleynut/polynomial.hpp"

namespace cayleynut {

std::string to_string(NotNutReason reason) {
    switch (reason) {
        case NotNutReason::nullity_zero: return "nullity_zero";
        case NotNutReason::nullity_exceeds_one: return "nullity_exceeds_one";
        case NotNutReason::kernel_has_zero_entry: return "kernel_has_zero_entry";
        case NotNutReason::trivial_graph: return "trivial_graph";
    }
    return "unknown";
}

NutVerdict is_nut(const Graph& g) {
    NutVerdict verdict;
    if (g.order() <= 1) {
        verdict.reason = NotNutReason::trivial_graph;
        return verdict;
    }

    const KernelBasis basis = kernel_basis(adjacency_matrix(g));
    verdict.nullity = basis.nullity;
    if (basis.nullity == 0) {
        verdict.reason = NotNutReason::nullity_zero;
        return verdict;
    }
    if (basis.nullity > 1) {
        verdict.reason = NotNutReason::nullity_exceeds_one;
        return verdict;
    }
    const RationalVector& kernel = basis.vectors.front();
    if (!is_full_vector(kernel)) {
        verdict.reason = NotNutReason::kernel_has_zero_entry;
        return verdict;
    }

    verdict.nut = true;
    verdict.certificate = NutCertificate{
        encode_graph6(g), kernel, 1, g.regular_degree(), g.order(), g.provenance()};
    return verdict;
}

nlohmann::json certificate_json(const NutCertificate& c) {
    nlohmann::json kernel = nlohmann::json::array();
    for (const Rational& x : c.kernel) kernel.push_back(x.get_str());
    return nlohmann::json{
        {"degree", c.degree},   {"graph6", c.graph6},         {"kernel", std::move(kernel)},
        {"order", c.order},     {"provenance", c.provenance}, {"verified", true},
    };
}

NutCertificate certificate_from_json(const nlohmann::json& j) {
    NutCertificate c;
    try {
        c.graph6 = j.at("graph6").get<std::string>();
        c.degree = j.at("degree").get<int>();
        c.order = j.at("order").get<int>();
        c.provenance = j.value("provenance", "");
        for (const auto& entry : j.at("kernel")) {
            c.kernel.emplace_back(Rational(entry.get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad certificate JSON: ") + e.what());
    }
    c.nullity = 1;
    return c;
}

bool reverify_certificate(const NutCertificate& c) {
    if (c.order < 2 || c.nullity != 1) return false;
    Graph g = [&]() -> Graph {
        try {
            return decode_graph6(c.graph6);
        } catch (const Graph6ParseError&) {
            return Graph(0, {});
        }
    }();
    if (g.order() != c.order) return false;
    if (g.regular_degree() != c.degree) return false;

    const IntMatrix a = adjacency_matrix(g);
    const KernelBasis basis = kernel_basis(a);
    if (basis.nullity != 1) return false;
    const RationalVector& kernel = basis.vectors.front();
    if (!is_full_vector(kernel)) return false;
    if (canonicalize(RationalVector(c.kernel)) != kernel) return false;

    // The claimed vector itself must lie in the nullspace, not just match.
    return is_zero_vector(matvec(a, c.kernel));
}

int circulant_nullity(const ConnectionSet& cs) {
    validate_connection_set(cs);
    IntPolynomial f(cs.n, Integer(0));
    for (int s : cs.steps) {
        f[s] += 1;
        if (2 * s != cs.n) f[cs.n - s] += 1;
    }
    f = poly_trim(std::move(f));
    // x^n - 1 is squarefree, so the gcd degree counts the vanishing eigenvalues.
    return poly_degree(poly_gcd(std::move(f), poly_xn_minus_1(cs.n)));
}

bool circulant_is_nut(const ConnectionSet& cs) { return circulant_nullity(cs) == 1; }

namespace {

bool enumerate_from(ConnectionSet& cs, int next_step, int missing,
                    const std::function<bool(const ConnectionSet&)>& visit) {
    if (missing == 0) return visit(cs);
    const int half = cs.n / 2;
    for (int s = next_step; s <= half; ++s) {
        const int contribution = (2 * s == cs.n) ? 1 : 2;
        if (contribution > missing) continue;
        // Degree still reachable from steps s..half.
        const int available = 2 * (half - s + 1) - (cs.n % 2 == 0 ? 1 : 0);
        if (available < missing) break;
        cs.steps.push_back(s);
        if (!enumerate_from(cs, s + 1, missing - contribution, visit)) {
            cs.steps.pop_back();
            return false;
        }
        cs.steps.pop_back();
    }
    return true;
}

}  // namespace

bool for_each_connection_set(int n, int d,
                             const std::function<bool(const ConnectionSet&)>& visit) {
    if (n < 1 || d < 0 || d > n - 1) return true;
    ConnectionSet cs{n, {}};
    return enumerate_from(cs, 1, d, visit);
}

std::vector<ConnectionSet> enumerate_connection_sets(int n, int d) {
    std::vector<ConnectionSet> all;
    for_each_connection_set(n, d, [&](const ConnectionSet& cs) {
        all.push_back(cs);
        return true;
    });
    return all;
}

std::optional<ConnectionSet> search_circulant_nut(int n, int d) {
    std::optional<ConnectionSet> witness;
    for_each_connection_set(n, d, [&](const ConnectionSet& cs) {
        if (!circulant_is_nut(cs)) return true;
        witness = cs;
        return false;  // enumeration order is lexicographic, so first hit is least
    });
    return witness;
}

bool fowler_necessary(int n, int d) {
    if (n < 0 || d <= 0) return false;
    if (d % 4 == 0) return n % 2 == 0 && n >= d + 4;
    if (d % 4 == 2) return n % 4 == 0 && n >= d + 6;
    return false;
}

bool circulant_exists(int n, int d) {
    if (d <= 0 || d % 4 != 0 || n % 2 != 0) return false;
    if (d % 8 == 4) {
        if (n < d + 4) return false;
    } else {
        if (n < d + 6) return false;
    }
    return !(n == 16 && d == 8);
}

}  // namespace cayleynut
