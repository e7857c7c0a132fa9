#include "cayleynut/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace cayleynut {

IntPolynomial poly_trim(IntPolynomial p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const IntPolynomial& p) { return static_cast<int>(p.size()) - 1; }

Integer poly_content(const IntPolynomial& p) {
    Integer g(0);
    for (const Integer& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial poly_primitive_part(IntPolynomial p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Integer c = poly_content(p);
    if (sgn(p.back()) < 0) c = -c;
    for (Integer& coeff : p) coeff /= c;
    return p;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, exact in Z[x].
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const int db = poly_degree(b);
    const Integer& lead = b.back();
    while (poly_degree(a) >= db) {
        const int shift = poly_degree(a) - db;
        const Integer top = a.back();
        for (Integer& coeff : a) coeff *= lead;
        for (int i = 0; i <= db; ++i) a[i + shift] -= top * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = poly_primitive_part(std::move(a));
    b = poly_primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPolynomial r = poly_primitive_part(pseudo_remainder(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

IntPolynomial poly_xn_minus_1(int n) {
    if (n < 1) throw std::invalid_argument("exponent must be positive");
    IntPolynomial p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace cayleynut
