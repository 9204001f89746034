#include "cmcert/cayley_menger.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmcert {

namespace {

constexpr std::array<Edge, kEdges> kEdgeList{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

}  // namespace

std::size_t edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    for (std::size_t k = 0; k < kEdges; ++k)
        if (kEdgeList[k].i == i && kEdgeList[k].j == j) return k;
    throw std::invalid_argument("not an edge of K4: " + std::to_string(i) + std::to_string(j));
}

Edge edge_at(std::size_t index) {
    if (index >= kEdges) throw std::invalid_argument("edge slot out of range");
    return kEdgeList[index];
}

// ---------------------------------------------------------------------------
// VertexPermutation

VertexPermutation::VertexPermutation() : map_{0, 1, 2, 3} {}

VertexPermutation::VertexPermutation(std::array<int, 4> images) {
    std::array<bool, 4> seen{};
    for (int k = 0; k < 4; ++k) {
        int v = images[k];
        if (v < 1 || v > 4 || seen[v - 1]) throw std::invalid_argument("not a permutation of {1,2,3,4}");
        seen[v - 1] = true;
        map_[k] = v - 1;
    }
}

std::vector<VertexPermutation> VertexPermutation::all() {
    std::vector<VertexPermutation> out;
    std::array<int, 4> p{1, 2, 3, 4};
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<VertexPermutation> VertexPermutation::even() {
    std::vector<VertexPermutation> out;
    for (const auto& s : all())
        if (s.is_even()) out.push_back(s);
    return out;
}

bool VertexPermutation::is_even() const {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (map_[a] > map_[b]) ++inversions;
    return inversions % 2 == 0;
}

VertexPermutation VertexPermutation::inverse() const {
    std::array<int, 4> inv{};
    for (int k = 0; k < 4; ++k) inv[map_[k]] = k + 1;
    return VertexPermutation(inv);
}

VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b) {
    std::array<int, 4> out{};
    for (int k = 1; k <= 4; ++k) out[k - 1] = a(b(k));
    return VertexPermutation(out);
}

std::array<std::size_t, kEdges> VertexPermutation::edge_action() const {
    std::array<std::size_t, kEdges> act{};
    for (std::size_t k = 0; k < kEdges; ++k) act[k] = edge_index((*this)(kEdgeList[k].i), (*this)(kEdgeList[k].j));
    return act;
}

std::string VertexPermutation::to_string() const {
    std::ostringstream os;
    os << "[" << map_[0] + 1 << map_[1] + 1 << map_[2] + 1 << map_[3] + 1 << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// EdgeSubset

std::string to_string(EdgeSubsetKind kind) {
    switch (kind) {
        case EdgeSubsetKind::Empty: return "empty";
        case EdgeSubsetKind::SingleEdge: return "single-edge";
        case EdgeSubsetKind::IncidentPair: return "incident-pair";
        case EdgeSubsetKind::OppositePair: return "opposite-pair";
        case EdgeSubsetKind::Tripod: return "tripod";
        case EdgeSubsetKind::ThreePath: return "3-path";
        case EdgeSubsetKind::ThreeCycle: return "3-cycle";
        case EdgeSubsetKind::FourCycle: return "4-cycle";
        case EdgeSubsetKind::ComplementOfIncidentPair: return "complement-of-incident-pair";
        case EdgeSubsetKind::ComplementOfEdge: return "complement-of-edge";
        case EdgeSubsetKind::FullK4: return "full-K4";
    }
    return "?";
}

EdgeSubset::EdgeSubset(std::initializer_list<Edge> edges) {
    for (const Edge& e : edges) mask_ |= static_cast<std::uint8_t>(1U << edge_index(e.i, e.j));
}

EdgeSubset EdgeSubset::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '{' && c != '}') s += c;
    if (s == "K4" || s == "k4" || s == "all") return full();
    EdgeSubset out;
    std::istringstream is(s);
    for (std::string tok; std::getline(is, tok, ',');) {
        if (!tok.empty() && (tok[0] == 'e' || tok[0] == 'E')) tok.erase(0, 1);
        if (tok.size() != 2 || tok[0] < '1' || tok[0] > '4' || tok[1] < '1' || tok[1] > '4' || tok[0] == tok[1])
            throw std::invalid_argument("bad edge '" + tok + "' in edge subset '" + text + "'");
        out.mask_ |= static_cast<std::uint8_t>(1U << edge_index(tok[0] - '0', tok[1] - '0'));
    }
    if (out.empty()) throw std::invalid_argument("empty edge subset '" + text + "'");
    return out;
}

int EdgeSubset::size() const { return std::popcount(mask_); }

std::vector<std::size_t> EdgeSubset::slots() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < kEdges; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

namespace {

// Degree of each vertex in the subgraph spanned by the mask.
std::array<int, 4> degrees(std::uint8_t mask) {
    std::array<int, 4> deg{};
    for (std::size_t k = 0; k < kEdges; ++k)
        if ((mask >> k) & 1U) {
            ++deg[kEdgeList[k].i - 1];
            ++deg[kEdgeList[k].j - 1];
        }
    return deg;
}

// True if the edges in mask (nonempty) all share a common vertex.
bool is_star(std::uint8_t mask) {
    auto deg = degrees(mask);
    int n = std::popcount(mask);
    return std::any_of(deg.begin(), deg.end(), [n](int d) { return d == n; });
}

}  // namespace

EdgeSubsetKind EdgeSubset::kind() const {
    auto deg = degrees(mask_);
    switch (size()) {
        case 0: return EdgeSubsetKind::Empty;
        case 1: return EdgeSubsetKind::SingleEdge;
        case 2: return is_star(mask_) ? EdgeSubsetKind::IncidentPair : EdgeSubsetKind::OppositePair;
        case 3:
            if (is_star(mask_)) return EdgeSubsetKind::Tripod;
            if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; }))
                return EdgeSubsetKind::ThreeCycle;
            return EdgeSubsetKind::ThreePath;
        case 4:
            return is_star(complement().mask_) ? EdgeSubsetKind::ComplementOfIncidentPair : EdgeSubsetKind::FourCycle;
        case 5: return EdgeSubsetKind::ComplementOfEdge;
        default: return EdgeSubsetKind::FullK4;
    }
}

bool EdgeSubset::friendly() const {
    EdgeSubset c = complement();
    if (c.empty()) return true;
    return !is_star(c.mask_);
}

EdgeSubset EdgeSubset::relabeled(const VertexPermutation& sigma) const {
    auto act = sigma.edge_action();
    std::uint8_t out = 0;
    for (std::size_t k = 0; k < kEdges; ++k)
        if (contains(k)) out |= static_cast<std::uint8_t>(1U << act[k]);
    return EdgeSubset(out);
}

std::string EdgeSubset::to_string() const {
    if (mask_ == 0x3F) return "K4";
    std::string out;
    for (std::size_t k : slots()) {
        if (!out.empty()) out += ",";
        out += std::to_string(kEdgeList[k].i) + std::to_string(kEdgeList[k].j);
    }
    return out.empty() ? "{}" : out;
}

std::vector<VertexPermutation> stabilizer(const EdgeSubset& beta) {
    std::vector<VertexPermutation> out;
    for (const auto& s : VertexPermutation::all())
        if (beta.relabeled(s) == beta) out.push_back(s);
    return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Bordered matrix with entries d_ij^2 (or q_ij when `squares` is set).
PolyMatrix bordered_matrix(bool squares) {
    PolyMatrix m(5, std::vector<Polynomial>(5, Polynomial(kEdges)));
    for (int r = 1; r < 5; ++r) {
        m[0][r] = Polynomial::constant(kEdges, 1);
        m[r][0] = Polynomial::constant(kEdges, 1);
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            Polynomial x = Polynomial::variable(kEdges, edge_index(i, j));
            m[i][j] = squares ? x : x * x;
        }
    return m;
}

// Leibniz expansion over all permutations of the columns.
Polynomial leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det(m[0][0].nvars());
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Polynomial term = Polynomial::constant(det.nvars(), inversions % 2 ? -1 : 1);
        bool zero = false;
        for (std::size_t r = 0; r < n && !zero; ++r) {
            const Polynomial& e = m[r][perm[r]];
            if (e.is_zero()) zero = true;
            else term = term * e;
        }
        if (!zero) det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Laplace expansion along the first row, recursively.
Polynomial laplace_det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial det(m[0][0].nvars());
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][c] * laplace_det(minor);
        if (c % 2) det -= cof;
        else det += cof;
    }
    return det;
}

}  // namespace

Polynomial build_f() { return leibniz_det(bordered_matrix(false)); }

Polynomial build_f_by_cofactors() { return laplace_det(bordered_matrix(false)); }

Polynomial build_f_on_squares() { return leibniz_det(bordered_matrix(true)); }

const Polynomial& cm_f() {
    static const Polynomial f = build_f();
    return f;
}

const Polynomial& cm_f_on_squares() {
    static const Polynomial f = build_f_on_squares();
    return f;
}

const std::array<Polynomial, kEdges>& cm_partials() {
    static const std::array<Polynomial, kEdges> parts = [] {
        std::array<Polynomial, kEdges> out;
        for (std::size_t k = 0; k < kEdges; ++k) out[k] = partial_derivative(cm_f(), k);
        return out;
    }();
    return parts;
}

Polynomial directional_derivative(const EdgeSubset& beta) {
    if (beta.empty()) throw std::invalid_argument("directional derivative along an empty edge subset");
    Polynomial g(kEdges);
    for (std::size_t k : beta.slots()) g += cm_partials()[k];
    return g;
}

Polynomial combination(const EdgeSubset& beta, const Integer& a, const Integer& b) {
    Polynomial out = a * directional_derivative(beta);
    out += b * cm_f();
    return out;
}

Integer cm_determinant_value(std::span<const Integer, kEdges> d) {
    // Bareiss fraction-free elimination with row pivoting.
    std::array<std::array<Integer, 5>, 5> a;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) a[r][c] = 0;
    for (int r = 1; r < 5; ++r) a[0][r] = a[r][0] = 1;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (i != j) {
                const Integer& x = d[edge_index(i, j)];
                a[i][j] = x * x;
            }
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k < 4; ++k) {
        if (sgn(a[k][k]) == 0) {
            int p = k + 1;
            while (p < 5 && sgn(a[p][k]) == 0) ++p;
            if (p == 5) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < 5; ++i)
            for (int j = k + 1; j < 5; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[4][4];
}

// ---------------------------------------------------------------------------
// Predicates

const std::array<std::array<std::size_t, 3>, 4>& faces() {
    static const std::array<std::array<std::size_t, 3>, 4> f{{
        {edge_index(1, 2), edge_index(1, 3), edge_index(2, 3)},
        {edge_index(1, 2), edge_index(1, 4), edge_index(2, 4)},
        {edge_index(1, 3), edge_index(1, 4), edge_index(3, 4)},
        {edge_index(2, 3), edge_index(2, 4), edge_index(3, 4)},
    }};
    return f;
}

EdgeList clear_denominators(const RationalEdgeList& d) {
    Integer l = 1;
    for (const auto& x : d) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    EdgeList out;
    for (std::size_t k = 0; k < kEdges; ++k) out[k] = d[k].get_num() * (l / d[k].get_den());
    return out;
}

bool is_tetrahedral(const EdgeList& d) {
    for (const auto& x : d)
        if (sgn(x) <= 0) throw std::invalid_argument("edge lengths must be positive");
    for (const auto& face : faces()) {
        const Integer& a = d[face[0]];
        const Integer& b = d[face[1]];
        const Integer& c = d[face[2]];
        if (!(a < b + c && b < a + c && c < a + b)) return false;
    }
    return sgn(cm_f().evaluate(std::span<const Integer>(d))) > 0;
}

bool is_tetrahedral(const RationalEdgeList& d) {
    for (const auto& x : d)
        if (sgn(x) <= 0) throw std::invalid_argument("edge lengths must be positive");
    return is_tetrahedral(clear_denominators(d));
}

Rational volume_squared(const RationalEdgeList& d) {
    if (!is_tetrahedral(d)) throw std::invalid_argument("volume_squared: list is not tetrahedral");
    return cm_f().evaluate(std::span<const Rational>(d)) / Rational(288);
}

Integer heron_squared_form(const Integer& a, const Integer& b, const Integer& c) {
    return 2 * a * b + 2 * b * c + 2 * c * a - a * a - b * b - c * c;
}

}  // namespace cmcert
