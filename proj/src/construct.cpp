#include "cayleynut/construct.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "cayleynut/errors.hpp"
#include "cayleynut/formats.hpp"

namespace cayleynut {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::circulant: return "circulant";
        case Regime::prism_complement: return "prism_complement";
        case Regime::qd16: return "qd16";
    }
    return "unknown";
}

namespace {

void require_prism_degree(int d) {
    if (d < 8)
        throw InfeasibleError("d >= 8", "prism complement needs d >= 8, got d = " +
                                            std::to_string(d));
    if (d % 8 != 0)
        throw InfeasibleError("8 | d", "prism complement needs 8 | d, got d = " +
                                           std::to_string(d));
}

}  // namespace

Graph prism_complement(int d) {
    require_prism_degree(d);
    const int beta = (d + 4) / 2;
    return complement(cartesian_product(cycle_graph(beta), k2()));
}

RationalVector prism_kernel_vector(int d) {
    require_prism_degree(d);
    const int beta = (d + 4) / 2;
    RationalVector u(2 * beta, Rational(0));
    for (int j = 0; j < beta; ++j) {
        const Rational value = (j % 2 == 0) ? 1 : -1;
        u[2 * j] = value;      // a_j
        u[2 * j + 1] = value;  // b_j
    }
    return u;
}

Graph qd16_nut_graph() {
    static const std::array<const char*, 8> kGeneratorWords = {
        "tst", "tsts^2", "t", "s^2 t", "ts", "sts", "ts^2", "sts^2"};
    const FiniteGroup qd16 = quasidihedral_16();
    std::vector<Element> generators;
    generators.reserve(kGeneratorWords.size());
    for (const char* word : kGeneratorWords) generators.push_back(qd16_reduce_word(word));
    return cayley_graph(qd16, std::move(generators));
}

ConstructionResult construct_cayley_nut(int n, int d, int search_window) {
    if (d <= 0)
        throw InfeasibleError("d > 0", "degree must be positive, got d = " + std::to_string(d));
    if (d % 4 == 2)
        throw InfeasibleError(
            "4 | d", "feasibility for d = 2 (mod 4), d >= 6 is an open problem; got d = " +
                         std::to_string(d));
    if (d % 4 != 0)
        throw InfeasibleError("4 | d",
                              "degree must be divisible by 4, got d = " + std::to_string(d));
    if (n % 2 != 0)
        throw InfeasibleError("2 | n", "order must be even, got n = " + std::to_string(n));
    if (n < d + 4)
        throw InfeasibleError("n >= d + 4", "order must be at least d + 4 = " +
                                                std::to_string(d + 4) + ", got n = " +
                                                std::to_string(n));

    ConstructionResult result;
    result.n = n;
    result.d = d;

    Graph graph(0, {});
    if (circulant_exists(n, d)) {
        if (n > search_window) throw WindowExceededError(n, search_window);
        std::optional<ConnectionSet> witness = search_circulant_nut(n, d);
        if (!witness)
            throw std::logic_error("no circulant nut witness found for n = " +
                                   std::to_string(n) + ", d = " + std::to_string(d) +
                                   " although one must exist");
        result.regime = Regime::circulant;
        result.steps = witness;
        graph = circulant_graph(*witness);
    } else if (n == 16 && d == 8) {
        result.regime = Regime::qd16;
        graph = qd16_nut_graph();
    } else {
        // Remaining feasible case: 8 | d and n = d + 4.
        result.regime = Regime::prism_complement;
        result.beta = (d + 4) / 2;
        graph = prism_complement(d);
    }

    const NutVerdict verdict = is_nut(graph);
    if (!verdict.nut)
        throw std::logic_error("constructed graph failed nut certification (" +
                               to_string(*verdict.reason) + "): " + graph.provenance());
    result.certificate = *verdict.certificate;
    return result;
}

nlohmann::json construction_json(const ConstructionResult& r) {
    nlohmann::json parameters{{"d", r.d}, {"n", r.n}};
    if (r.steps) parameters["steps"] = r.steps->steps;
    if (r.beta) parameters["beta"] = *r.beta;
    nlohmann::json out = certificate_json(r.certificate);
    out["parameters"] = std::move(parameters);
    out["regime"] = regime_name(r.regime);
    return out;
}

}  // namespace cayleynut
