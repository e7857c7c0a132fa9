#include "cayleynut/exact.hpp"

#include <stdexcept>
#include <utility>

namespace cayleynut {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Integer(0));
}

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n, n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) m.at(v, u) = 1;
    return m;
}

RationalVector matvec(const IntMatrix& m, const RationalVector& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("matvec dimension mismatch: " + std::to_string(m.cols()) +
                                    " columns vs vector of length " + std::to_string(v.size()));
    RationalVector out(m.rows(), Rational(0));
    for (int r = 0; r < m.rows(); ++r) {
        Rational sum(0);
        for (int c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) != 0) sum += Rational(m.at(r, c)) * v[c];
        }
        out[r] = std::move(sum);
    }
    return out;
}

bool is_zero_vector(const RationalVector& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

bool is_full_vector(const RationalVector& v) {
    for (const Rational& x : v)
        if (x == 0) return false;
    return true;
}

RationalVector canonicalize(RationalVector v) {
    // Clear denominators, divide by the gcd of the numerators, and make the
    // first nonzero entry positive.
    Integer denominator_lcm(1);
    for (const Rational& x : v)
        if (x != 0) mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                            x.get_den().get_mpz_t());
    Integer numerator_gcd(0);
    for (Rational& x : v) {
        x *= Rational(denominator_lcm);
        mpz_gcd(numerator_gcd.get_mpz_t(), numerator_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (numerator_gcd == 0) return v;  // zero vector
    int sign = 0;
    for (const Rational& x : v) {
        if (x != 0) {
            sign = sgn(x.get_num());
            break;
        }
    }
    const Rational scale{sign > 0 ? numerator_gcd : -numerator_gcd};
    for (Rational& x : v) x /= scale;
    return v;
}

namespace {

// Reduced row echelon form in place, over Q. Returns the pivot columns.
std::vector<int> rref(std::vector<RationalVector>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RationalVector> to_rational_rows(const IntMatrix& m) {
    std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols(), Rational(0)));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = Rational(m.at(r, c));
    return rows;
}

}  // namespace

KernelBasis kernel_basis(const IntMatrix& m) {
    if (m.cols() < 1) throw std::invalid_argument("kernel_basis needs at least one column");

    std::vector<RationalVector> rows = to_rational_rows(m);
    const std::vector<int> pivots = rref(rows);
    const int cols = m.cols();

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;

    KernelBasis basis;
    basis.nullity = cols - static_cast<int>(pivots.size());
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.vectors.push_back(std::move(v));
    }

    // The free-column vectors already have distinct unit coordinates; one
    // more reduction makes the stacked basis the unique RREF of the kernel,
    // then each vector is scaled to canonical integer form.
    rref(basis.vectors);
    for (RationalVector& v : basis.vectors) v = canonicalize(std::move(v));
    return basis;
}

int rank(const IntMatrix& m) {
    std::vector<RationalVector> rows = to_rational_rows(m);
    return static_cast<int>(rref(rows).size());
}

}  // namespace cayleynut
