#include "cayleynut/group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace cayleynut {

namespace {

bool is_permutation_of_indices(const std::vector<Element>& row, int n) {
    std::vector<char> seen(n, 0);
    for (Element x : row) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Element>> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("group table must not be empty");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table must be square");
        for (Element x : row) {
            if (x < 0 || x >= n)
                throw std::invalid_argument("group table entry out of range");
        }
    }
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count must match group order");

    // Locate the two-sided identity.
    identity_ = -1;
    for (Element e = 0; e < n; ++e) {
        bool ok = true;
        for (Element g = 0; g < n && ok; ++g)
            ok = table_[e][g] == g && table_[g][e] == g;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw std::invalid_argument("group table has no two-sided identity");

    inverses_.assign(n, -1);
    for (Element g = 0; g < n; ++g) {
        for (Element h = 0; h < n; ++h) {
            if (table_[g][h] == identity_ && table_[h][g] == identity_) {
                if (inverses_[g] >= 0)
                    throw std::invalid_argument("group element has multiple inverses");
                inverses_[g] = h;
            }
        }
        if (inverses_[g] < 0) throw std::invalid_argument("group element has no inverse");
    }
}

Element FiniteGroup::mul(Element a, Element b) const {
    check_index(a);
    check_index(b);
    return table_[a][b];
}

Element FiniteGroup::inverse(Element g) const {
    check_index(g);
    return inverses_[g];
}

const std::string& FiniteGroup::label(Element g) const {
    check_index(g);
    return labels_[g];
}

void FiniteGroup::check_index(Element g) const {
    if (g < 0 || g >= order())
        throw std::out_of_range("element index " + std::to_string(g) +
                                " out of range for group of order " + std::to_string(order()));
}

void validate_group_axioms(const FiniteGroup& g) {
    const int n = g.order();

    std::vector<Element> row(n), col(n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            row[b] = g.mul(a, b);
            col[b] = g.mul(b, a);
        }
        if (!is_permutation_of_indices(row, n))
            throw std::invalid_argument("row " + std::to_string(a) + " is not a permutation");
        if (!is_permutation_of_indices(col, n))
            throw std::invalid_argument("column " + std::to_string(a) + " is not a permutation");
    }

    const Element e = g.identity();
    for (Element a = 0; a < n; ++a) {
        if (g.mul(e, a) != a || g.mul(a, e) != a)
            throw std::invalid_argument("identity fails at element " + std::to_string(a));
        const Element inv = g.inverse(a);
        if (g.mul(a, inv) != e || g.mul(inv, a) != e)
            throw std::invalid_argument("inverse fails at element " + std::to_string(a));
    }

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("associativity fails at (" + std::to_string(a) +
                                                ", " + std::to_string(b) + ", " +
                                                std::to_string(c) + ")");
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup("Z_" + std::to_string(n), std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order();
    const int nh = h.order();
    const int n = ng * nh;
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < ng; ++a) {
        for (int b = 0; b < nh; ++b) {
            const int i = a * nh + b;
            labels[i] = "(" + g.label(a) + "," + h.label(b) + ")";
            for (int c = 0; c < ng; ++c)
                for (int d = 0; d < nh; ++d)
                    table[i][c * nh + d] = g.mul(a, c) * nh + h.mul(b, d);
        }
    }
    return FiniteGroup(g.name() + " x " + h.name(), std::move(table), std::move(labels));
}

namespace {

// Normal form s^i t^j, index 2i + j. Right multiplication:
//   (s^a t^b) * s = s^(a + 3^b) t^b   since t s = s^3 t,
//   (s^a t^b) * t = s^a t^(b+1).
struct Qd16Form {
    int i = 0;  // exponent of s, mod 8
    int j = 0;  // exponent of t, mod 2

    void mul_s(int count) {
        const int step = (j == 0) ? 1 : 3;
        i = (i + step * count) % 8;
    }
    void mul_t() { j ^= 1; }
    Element index() const { return 2 * i + j; }
};

std::string qd16_label(int i, int j) {
    std::string s_part;
    if (i == 1)
        s_part = "s";
    else if (i > 1)
        s_part = "s^" + std::to_string(i);
    if (j == 0) return s_part.empty() ? "e" : s_part;
    return s_part.empty() ? "t" : s_part + " t";
}

}  // namespace

FiniteGroup quasidihedral_16() {
    std::vector<std::vector<Element>> table(16, std::vector<Element>(16));
    std::vector<std::string> labels(16);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 2; ++j) {
            labels[2 * i + j] = qd16_label(i, j);
            for (int k = 0; k < 8; ++k) {
                for (int l = 0; l < 2; ++l) {
                    Qd16Form f{i, j};
                    f.mul_s(k);
                    if (l) f.mul_t();
                    table[2 * i + j][2 * k + l] = f.index();
                }
            }
        }
    }
    FiniteGroup g("QD16", std::move(table), std::move(labels));
    validate_group_axioms(g);
    return g;
}

Element qd16_reduce_word(std::string_view word) {
    Qd16Form f;
    std::size_t pos = 0;
    while (pos < word.size()) {
        const char c = word[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c != 's' && c != 't')
            throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                        "' in QD16 word");
        ++pos;
        int exponent = 1;
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            if (pos >= word.size() || !std::isdigit(static_cast<unsigned char>(word[pos])))
                throw std::invalid_argument("exponent expected after '^' in QD16 word");
            exponent = 0;
            while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
                exponent = exponent * 10 + (word[pos] - '0');
                ++pos;
            }
        }
        if (c == 's') {
            f.mul_s(exponent % 8);
        } else {
            if (exponent % 2 == 1) f.mul_t();
        }
    }
    return f.index();
}

GeneratorSet make_generator_set(const FiniteGroup& g, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (Element x : elements) {
        if (x < 0 || x >= g.order())
            throw std::invalid_argument("generator index " + std::to_string(x) + " out of range");
        if (x == g.identity())
            throw std::invalid_argument("generator set must not contain the identity");
        if (!std::binary_search(elements.begin(), elements.end(), g.inverse(x)))
            throw std::invalid_argument("generator set is not closed under inverse: missing " +
                                        g.label(g.inverse(x)));
    }
    return GeneratorSet{std::move(elements)};
}

}  // namespace cayleynut
