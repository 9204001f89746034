#include "cmcert/chambers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cmcert/random.hpp"

namespace cmcert {

namespace {

int axis_of_slot(std::size_t slot) {
    static constexpr std::array<int, kEdges> axis{0, 1, 2, 2, 1, 0};
    return axis[slot];
}

template <std::size_t N>
Integer det_integer(std::array<std::array<Integer, N>, N> a) {
    // Bareiss elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < N && sgn(a[p][k]) == 0) ++p;
            if (p == N) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i)
            for (std::size_t j = k + 1; j < N; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[N - 1][N - 1];
}

// Vertex matrix inverse over the rationals (columns are vertices).
std::array<std::array<Rational, 6>, 6> inverse_vertex_matrix(const LatticeSimplex6& s) {
    std::array<std::array<Rational, 12>, 6> aug;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            aug[r][c] = Rational(s.vertices[c][r]);
            aug[r][c + 6] = Rational(r == c ? 1 : 0);
        }
    for (std::size_t k = 0; k < 6; ++k) {
        std::size_t p = k;
        while (p < 6 && sgn(aug[p][k]) == 0) ++p;
        if (p == 6) throw std::domain_error("degenerate simplex " + s.id);
        std::swap(aug[k], aug[p]);
        Rational piv = aug[k][k];
        for (auto& x : aug[k]) x /= piv;
        for (std::size_t r = 0; r < 6; ++r) {
            if (r == k || sgn(aug[r][k]) == 0) continue;
            Rational factor = aug[r][k];
            for (std::size_t c = 0; c < 12; ++c) aug[r][c] -= factor * aug[k][c];
        }
    }
    std::array<std::array<Rational, 6>, 6> inv;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) inv[r][c] = aug[r][c + 6];
    return inv;
}

LatticePoint midpoint(const LatticePoint& a, const LatticePoint& b, const std::string& label) {
    LatticePoint m;
    for (std::size_t k = 0; k < kEdges; ++k) {
        if ((a[k] + b[k]) % 2 != 0) throw std::invalid_argument("midpoint " + label + " is not integral");
        m[k] = (a[k] + b[k]) / 2;
    }
    return m;
}

}  // namespace

const std::vector<ExtremePoint>& extrema() {
    static const std::vector<ExtremePoint> pts{
        {"A1", {0, 6, 6, 6, 6, 0}}, {"A2", {6, 0, 6, 6, 0, 6}}, {"A3", {6, 6, 0, 0, 6, 6}},
        {"B1", {8, 8, 8, 0, 0, 0}}, {"B2", {8, 0, 0, 8, 8, 0}}, {"B3", {0, 8, 0, 8, 0, 8}},
        {"B4", {0, 0, 8, 0, 8, 8}},
    };
    return pts;
}

LatticePoint center_point() { return {4, 4, 4, 4, 4, 4}; }

LatticePoint named_point(const std::string& label) {
    if (label == "C") return center_point();
    for (const auto& e : extrema())
        if (e.label == label) return e.coords;
    if (label.size() == 3 && (label[0] == 'A' || label[0] == 'B') && label[1] != label[2]) {
        std::string a{label[0], label[1]};
        std::string b{label[0], label[2]};
        return midpoint(named_point(a), named_point(b), label);
    }
    throw std::invalid_argument("unknown point label '" + label + "'");
}

RationalEdgeList to_rational(const LatticePoint& p) {
    RationalEdgeList out;
    for (std::size_t k = 0; k < kEdges; ++k) out[k] = Rational(static_cast<long>(p[k]));
    return out;
}

EdgeList to_integer(const LatticePoint& p) {
    EdgeList out;
    for (std::size_t k = 0; k < kEdges; ++k) out[k] = Integer(static_cast<long>(p[k]));
    return out;
}

bool in_pseudo_tetrahedra(const RationalEdgeList& p) {
    for (const auto& x : p)
        if (sgn(x) < 0) return false;
    for (const auto& face : faces()) {
        const Rational& a = p[face[0]];
        const Rational& b = p[face[1]];
        const Rational& c = p[face[2]];
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

std::array<std::size_t, kEdges> relabel_action(const VertexPermutation& sigma) { return sigma.edge_action(); }

// ---------------------------------------------------------------------------
// LatticeSimplex6

LatticeSimplex6 LatticeSimplex6::relabeled(const VertexPermutation& sigma, std::string new_id) const {
    LatticeSimplex6 out{std::move(new_id), {}};
    for (std::size_t k = 0; k < 6; ++k) out.vertices[k] = relabel(sigma, vertices[k]);
    return out;
}

std::vector<LatticePoint> LatticeSimplex6::vertex_set() const {
    std::vector<LatticePoint> v(vertices.begin(), vertices.end());
    std::sort(v.begin(), v.end());
    return v;
}

bool LatticeSimplex6::same_vertices(const LatticeSimplex6& other) const { return vertex_set() == other.vertex_set(); }

Integer LatticeSimplex6::projected_volume_det() const {
    std::array<std::array<Integer, 5>, 5> m;
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) m[r][c] = Integer(static_cast<long>(vertices[r + 1][c] - vertices[0][c]));
    return det_integer(m);
}

std::array<Rational, 6> LatticeSimplex6::barycentric(const RationalEdgeList& p) const {
    auto inv = inverse_vertex_matrix(*this);
    std::array<Rational, 6> lambda;
    for (std::size_t r = 0; r < 6; ++r) {
        lambda[r] = 0;
        for (std::size_t c = 0; c < 6; ++c) lambda[r] += inv[r][c] * p[c];
    }
    return lambda;
}

bool LatticeSimplex6::contains(const RationalEdgeList& p) const {
    Rational total = 0;
    for (const auto& x : p) total += x;
    if (total != kNormalization) return false;
    auto lambda = barycentric(p);
    return std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return sgn(l) >= 0; });
}

bool LatticeSimplex6::contains(const LatticeSimplex6& other) const {
    return std::all_of(other.vertices.begin(), other.vertices.end(),
                       [this](const LatticePoint& v) { return contains(to_rational(v)); });
}

std::string LatticeSimplex6::to_string() const {
    std::ostringstream os;
    os << id << ":";
    for (std::size_t k = 0; k < 6; ++k) os << (k ? "; " : " ") << cmcert::to_string(vertices[k]);
    return os.str();
}

SimplexLocator::SimplexLocator(const LatticeSimplex6& s) {
    auto inv = inverse_vertex_matrix(s);
    std::array<std::array<Integer, 6>, 6> m;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) m[r][c] = Integer(static_cast<long>(s.vertices[c][r]));
    Integer det = det_integer(m);
    det_sign_ = sgn(det);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            Rational a = inv[r][c] * Rational(det);
            if (a.get_den() != 1) throw std::logic_error("adjugate is not integral");
            adj_[r][c] = a.get_num();
        }
}

bool SimplexLocator::contains(const std::array<Integer, kEdges>& p) const {
    Integer acc;
    for (std::size_t r = 0; r < 6; ++r) {
        acc = 0;
        for (std::size_t c = 0; c < 6; ++c) acc += adj_[r][c] * p[c];
        if (sgn(acc) * det_sign_ < 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Partitions

VertexPermutation c11_to(int axis, int vertex) {
    for (const auto& s : VertexPermutation::even()) {
        if (s(1) != vertex) continue;
        if (axis_of_slot(s.edge_action()[0]) == axis - 1) return s;
    }
    throw std::invalid_argument("no even relabeling to C_" + std::to_string(axis) + std::to_string(vertex));
}

namespace {

LatticeSimplex6 make_simplex(std::string id, const std::vector<std::string>& labels) {
    LatticeSimplex6 s{std::move(id), {}};
    for (std::size_t k = 0; k < 6; ++k) s.vertices[k] = named_point(labels.at(k));
    return s;
}

Partitions construct_partitions() {
    Partitions p;
    const auto& ex = extrema();
    for (int i = 1; i <= 3; ++i) {
        std::vector<std::string> labels;
        for (const auto& e : ex)
            if (e.label != "A" + std::to_string(i)) labels.push_back(e.label);
        p.three.push_back(make_simplex("A_" + std::to_string(i), labels));
    }
    for (int j = 1; j <= 4; ++j) {
        std::vector<std::string> labels;
        for (const auto& e : ex)
            if (e.label != "B" + std::to_string(j)) labels.push_back(e.label);
        p.four.push_back(make_simplex("B_" + std::to_string(j), labels));
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            std::vector<std::string> labels{"C"};
            for (const auto& e : ex)
                if (e.label != "A" + std::to_string(i) && e.label != "B" + std::to_string(j)) labels.push_back(e.label);
            p.twelve.push_back(make_simplex("C_" + std::to_string(i) + std::to_string(j), labels));
        }
    const std::array<LatticeSimplex6, 4> d11{
        make_simplex("D_1111", {"C", "B2", "B34", "A23", "B3", "A2"}),
        make_simplex("D_1112", {"C", "B2", "B34", "A23", "B3", "A3"}),
        make_simplex("D_1121", {"C", "B2", "B34", "A23", "B4", "A2"}),
        make_simplex("D_1122", {"C", "B2", "B34", "A23", "B4", "A3"}),
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            VertexPermutation s = c11_to(i, j);
            for (const auto& d : d11) {
                std::string id = "D_" + std::to_string(i) + std::to_string(j) + d.id.substr(4);
                p.forty_eight.push_back(d.relabeled(s, id));
            }
        }
    return p;
}

}  // namespace

const Partitions& build_partitions() {
    static const Partitions p = construct_partitions();
    return p;
}

const LatticeSimplex6& simplex_by_id(const std::string& id) {
    const auto& p = build_partitions();
    for (const auto* list : {&p.three, &p.four, &p.twelve, &p.forty_eight})
        for (const auto& s : *list)
            if (s.id == id) return s;
    throw std::invalid_argument("unknown simplex id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Decorations

namespace {

std::array<int, kEdges> vertex_sum_form(int v) {
    std::array<int, kEdges> f{};
    for (int u = 1; u <= 4; ++u)
        if (u != v) f[edge_index(u, v)] = 1;
    return f;
}

std::array<int, kEdges> pair_form(std::size_t a, std::size_t b) {
    std::array<int, kEdges> f{};
    f[a] = 1;
    f[b] = 1;
    return f;
}

std::array<int, kEdges> diff(const std::array<int, kEdges>& a, const std::array<int, kEdges>& b) {
    std::array<int, kEdges> f{};
    for (std::size_t k = 0; k < kEdges; ++k) f[k] = a[k] - b[k];
    return f;
}

template <typename T>
T apply_form(const std::array<int, kEdges>& f, const std::array<T, kEdges>& p) {
    T acc(0);
    for (std::size_t k = 0; k < kEdges; ++k)
        if (f[k]) acc += T(f[k]) * p[k];
    return acc;
}

std::vector<std::array<int, kEdges>> triangle_forms() {
    std::vector<std::array<int, kEdges>> out;
    for (const auto& face : faces())
        for (std::size_t k = 0; k < 3; ++k) {
            std::array<int, kEdges> f{};
            f[face[0]] = 1;
            f[face[1]] = 1;
            f[face[2]] = 1;
            f[face[k]] = -1;
            out.push_back(f);
        }
    for (std::size_t k = 0; k < kEdges; ++k) {
        std::array<int, kEdges> f{};
        f[k] = 1;
        out.push_back(f);
    }
    return out;
}

}  // namespace

Decoration::Decoration(std::array<int, 4> path, int black) : path_(path), black_(black) {
    std::array<bool, 4> seen{};
    for (int v : path) {
        if (v < 1 || v > 4 || seen[v - 1]) throw std::invalid_argument("decoration path must visit 1..4 once");
        seen[v - 1] = true;
    }
    if (black != path[2] && black != path[3])
        throw std::invalid_argument("black vertex must be a path vertex not adjacent to the white endpoint");

    const auto [o1, o2] = outer_edges();
    const auto [m1, m2] = missing_pair();
    const auto third = pair_form(edge_index(path_[0], path_[3]), edge_index(path_[1], path_[2]));
    const auto outer = pair_form(o1, o2);
    const auto missing = pair_form(m1, m2);

    std::vector<std::array<int, kEdges>> forms{
        diff(outer, missing), diff(outer, third),    // outer axis sum largest
        diff(third, missing), diff(outer, missing),  // missing axis sum smallest
    };
    for (int v = 1; v <= 4; ++v)
        if (v != black_) forms.push_back(diff(vertex_sum_form(v), vertex_sum_form(black_)));
    forms.push_back(diff(vertex_sum_form(path_[1]), vertex_sum_form(path_[0])));
    for (const auto& f : forms)
        if (std::find(forms_.begin(), forms_.end(), f) == forms_.end()) forms_.push_back(f);
}

const std::vector<Decoration>& Decoration::all() {
    static const std::vector<Decoration> decs = [] {
        std::vector<Decoration> out;
        std::array<int, 4> p{1, 2, 3, 4};
        do {
            out.emplace_back(p, p[2]);
            out.emplace_back(p, p[3]);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return decs;
}

std::array<std::size_t, 2> Decoration::outer_edges() const {
    return {edge_index(path_[0], path_[1]), edge_index(path_[2], path_[3])};
}

std::array<std::size_t, 2> Decoration::missing_pair() const {
    return {edge_index(path_[0], path_[2]), edge_index(path_[1], path_[3])};
}

EdgeSubset Decoration::edges() const {
    return EdgeSubset(static_cast<std::uint8_t>((1U << edge_index(path_[0], path_[1])) |
                                                (1U << edge_index(path_[1], path_[2])) |
                                                (1U << edge_index(path_[2], path_[3]))));
}

std::string Decoration::id() const {
    std::ostringstream os;
    os << path_[0] << "-" << path_[1] << "-" << path_[2] << "-" << path_[3] << " w" << white() << " b" << black_;
    return os.str();
}

Decoration Decoration::relabeled(const VertexPermutation& sigma) const {
    std::array<int, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = sigma(path_[k]);
    return Decoration(p, sigma(black_));
}

bool chamber_membership(const Decoration& dec, const RationalEdgeList& p) {
    if (!in_pseudo_tetrahedra(p)) throw std::domain_error("point is not a pseudo-tetrahedron: " + to_string(p));
    return std::all_of(dec.inequalities().begin(), dec.inequalities().end(),
                       [&](const auto& f) { return sgn(apply_form(f, p)) >= 0; });
}

bool chamber_interior(const Decoration& dec, const RationalEdgeList& p) {
    if (!in_pseudo_tetrahedra(p)) throw std::domain_error("point is not a pseudo-tetrahedron: " + to_string(p));
    return std::all_of(dec.inequalities().begin(), dec.inequalities().end(),
                       [&](const auto& f) { return sgn(apply_form(f, p)) > 0; });
}

int facet_count(const Decoration& dec, const LatticeSimplex6& s) {
    auto forms = dec.inequalities();
    for (const auto& f : triangle_forms()) forms.push_back(f);
    std::array<bool, 6> facet{};
    for (const auto& f : forms) {
        int zeros = 0;
        int missing = -1;
        for (std::size_t k = 0; k < 6; ++k) {
            auto v = apply_form(f, s.vertices[k]);
            if (v < 0) return -1;  // the cone is not inside the chamber
            if (v == 0) ++zeros;
            else missing = static_cast<int>(k);
        }
        if (zeros == 5) facet[missing] = true;
    }
    return static_cast<int>(std::count(facet.begin(), facet.end(), true));
}

const std::vector<ChamberEntry>& chamber_table() {
    static const std::vector<ChamberEntry> table = [] {
        std::vector<ChamberEntry> out;
        for (const auto& s : build_partitions().forty_eight) {
            std::vector<const Decoration*> hits;
            for (const auto& d : Decoration::all()) {
                bool all_in = std::all_of(s.vertices.begin(), s.vertices.end(),
                                          [&](const LatticePoint& v) { return chamber_membership(d, to_rational(v)); });
                if (all_in) hits.push_back(&d);
            }
            if (hits.size() != 1)
                throw std::logic_error(s.id + " matches " + std::to_string(hits.size()) + " decorations");
            out.push_back({s, *hits.front()});
        }
        return out;
    }();
    return table;
}

const ChamberEntry& chamber_by_id(const std::string& id) {
    for (const auto& e : chamber_table())
        if (e.simplex.id == id) return e;
    throw std::invalid_argument("unknown chamber id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Barycenters

std::vector<BarycenterCheck> verify_barycenter_conditions() {
    auto avg = [](const std::vector<std::string>& labels) {
        RationalEdgeList p;
        for (auto& x : p) x = 0;
        for (const auto& l : labels) {
            auto v = named_point(l);
            for (std::size_t k = 0; k < kEdges; ++k) p[k] += Rational(static_cast<long>(v[k]));
        }
        for (auto& x : p) x /= Rational(static_cast<long>(labels.size()));
        return p;
    };
    std::vector<BarycenterCheck> out;

    {
        auto p = avg({"A2", "A3", "B1", "B2", "B3"});
        RationalEdgeList expected;
        const std::array<long, 6> num{28, 22, 14, 22, 14, 20};
        for (std::size_t k = 0; k < kEdges; ++k) {
            expected[k] = Rational(num[k], 5);
            expected[k].canonicalize();
        }
        bool ok = p == expected && p[edge_index(1, 4)] + p[edge_index(2, 4)] == p[edge_index(1, 2)] &&
                  in_pseudo_tetrahedra(p);
        out.push_back({"(A2+A3+B1+B2+B3)/5", p, "equals (28,22,14,22,14,20)/5 and d14+d24=d12", ok});
    }
    {
        auto p = avg({"A2", "A3", "B1", "B2", "C"});
        RationalEdgeList expected;
        const std::array<long, 6> num{32, 18, 18, 18, 18, 16};
        for (std::size_t k = 0; k < kEdges; ++k) {
            expected[k] = Rational(num[k], 5);
            expected[k].canonicalize();
        }
        auto vs = vertex_sums(p);
        bool ok = p == expected && vs[2] == vs[3] && vs[3] <= vs[0] && vs[3] <= vs[1];
        out.push_back({"(A2+A3+B1+B2+C)/5", p, "equals (32,18,18,18,18,16)/5 and vertex sum 3 = vertex sum 4", ok});
    }
    {
        auto pa = avg({"A1", "A2", "A3"});
        auto pb = avg({"B1", "B2", "B3", "B4"});
        bool ok = pa == pb && pa == to_rational(center_point());
        out.push_back({"C = sum(A)/3 = sum(B)/4", pa, "both averages equal (4,4,4,4,4,4)", ok});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coverage

PartitionCheckReport partition_check(std::size_t samples, std::uint64_t seed) {
    const auto& parts = build_partitions();
    PartitionCheckReport report;
    report.samples = samples;
    report.seed = seed;

    struct Group {
        std::string name;
        const std::vector<LatticeSimplex6>* simplices;
        std::vector<SimplexLocator> locators;
    };
    std::vector<Group> groups{{"3-partition", &parts.three, {}},
                              {"4-partition", &parts.four, {}},
                              {"12-partition", &parts.twelve, {}},
                              {"48-partition", &parts.forty_eight, {}}};
    for (auto& g : groups) {
        PartitionCoverage cov;
        cov.name = g.name;
        cov.simplices = g.simplices->size();
        cov.total_volume_det = 0;
        for (const auto& s : *g.simplices) {
            g.locators.emplace_back(s);
            cov.total_volume_det += abs(s.projected_volume_det());
        }
        cov.min_hits = SIZE_MAX;
        report.partitions.push_back(cov);
    }
    report.hull_volume_det = report.partitions.front().total_volume_det;

    Rng rng(seed);
    const auto& ex = extrema();
    for (std::size_t n = 0; n < samples; ++n) {
        std::array<Integer, kEdges> p;
        for (auto& x : p) x = 0;
        for (const auto& e : ex) {
            const std::int64_t w = rng.uniform_int(0, 1000);
            for (std::size_t k = 0; k < kEdges; ++k) p[k] += Integer(static_cast<long>(w * e.coords[k]));
        }
        if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return sgn(x) == 0; })) {
            --n;
            continue;
        }
        auto vs = vertex_sums(p);
        auto as = axis_sums(p);
        std::sort(vs.begin(), vs.end());
        std::sort(as.begin(), as.end());
        bool tie_free = std::adjacent_find(vs.begin(), vs.end()) == vs.end() &&
                        std::adjacent_find(as.begin(), as.end()) == as.end();
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            std::size_t hits = 0;
            for (const auto& loc : groups[gi].locators)
                if (loc.contains(p)) ++hits;
            auto& cov = report.partitions[gi];
            cov.min_hits = std::min(cov.min_hits, hits);
            cov.max_hits = std::max(cov.max_hits, hits);
            if (tie_free) {
                ++cov.tie_free_points;
                if (hits == 1) ++cov.tie_free_exactly_one;
            }
        }
    }
    report.ok = true;
    for (const auto& cov : report.partitions) {
        if (cov.total_volume_det != report.hull_volume_det) report.ok = false;
        if (samples > 0 && cov.min_hits < 1) report.ok = false;
        if (cov.tie_free_exactly_one != cov.tie_free_points) report.ok = false;
    }
    return report;
}

std::string to_string(const LatticePoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < kEdges; ++k) os << (k ? "," : "") << p[k];
    os << ")";
    return os.str();
}

std::string to_string(const RationalEdgeList& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < kEdges; ++k) os << (k ? "," : "") << p[k].get_str();
    os << ")";
    return os.str();
}

}  // namespace cmcert
