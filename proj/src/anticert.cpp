#include "cmcert/anticert.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cmcert/random.hpp"

namespace cmcert {

namespace {

std::array<int, 5> vertex_degrees(const EdgeSubset& beta) {
    std::array<int, 5> deg{};
    for (auto slot : beta.slots()) {
        const Edge e = edge_at(slot);
        ++deg[e.i];
        ++deg[e.j];
    }
    return deg;
}

bool outer_edges_avoid(const EdgeSubset& beta, const Decoration& dec) {
    for (auto slot : dec.outer_edges())
        if (beta.contains(slot)) return false;
    return true;
}

bool subset_of(const EdgeSubset& a, const EdgeSubset& b) { return (a.mask() & ~b.mask()) == 0; }

// Monomial list in doubles for the pre-screen.
struct FastPoly {
    std::vector<std::pair<double, Exponents>> terms;

    explicit FastPoly(const Polynomial& p) {
        for (const auto& [e, c] : p.terms()) terms.emplace_back(c.get_d(), e);
    }
    double operator()(const std::array<double, kEdges>& x) const {
        std::array<std::array<double, 4>, kEdges> pw;
        for (std::size_t k = 0; k < kEdges; ++k) {
            pw[k][0] = 1;
            for (int j = 1; j < 4; ++j) pw[k][j] = pw[k][j - 1] * x[k];
        }
        double s = 0;
        for (const auto& [c, e] : terms) {
            double m = c;
            for (std::size_t k = 0; k < kEdges; ++k)
                if (e[k]) m *= e[k] < 4 ? pw[k][e[k]] : std::pow(x[k], e[k]);
            s += m;
        }
        return s;
    }
};

}  // namespace

bool in_x_beta(const EdgeSubset& beta, const Decoration& dec) {
    const auto deg = vertex_degrees(beta);
    const int black = dec.black();
    switch (beta.kind()) {
        case EdgeSubsetKind::FullK4:
            return true;
        case EdgeSubsetKind::SingleEdge:
            return !subset_of(beta, dec.edges()) && deg[black] == 1;
        case EdgeSubsetKind::IncidentPair:
            return deg[black] == 2 && outer_edges_avoid(beta, dec);
        case EdgeSubsetKind::OppositePair:
            return !subset_of(beta, dec.edges());
        case EdgeSubsetKind::Tripod:
            return deg[black] == 3;
        case EdgeSubsetKind::ThreePath:
            return deg[black] == 2 && outer_edges_avoid(beta, dec);
        case EdgeSubsetKind::FourCycle: {
            auto outer = dec.outer_edges();
            const auto comp = beta.complement();
            return comp.contains(outer[0]) && comp.contains(outer[1]);
        }
        case EdgeSubsetKind::ThreeCycle:
            return deg[black] > 0;
        default:
            throw std::invalid_argument("no chamber set X_beta for " + beta.to_string() + " (" +
                                        to_string(beta.kind()) + ")");
    }
}

std::vector<std::string> chambers_in(const EdgeSubset& beta) {
    std::vector<std::string> out;
    for (const auto& c : chamber_table())
        if (in_x_beta(beta, c.decoration)) out.push_back(c.simplex.id);
    return out;
}

std::vector<std::string> chambers_outside(const EdgeSubset& beta) {
    std::vector<std::string> out;
    for (const auto& c : chamber_table())
        if (!in_x_beta(beta, c.decoration)) out.push_back(c.simplex.id);
    return out;
}

AntiCertifyResult anti_certify(const std::string& chamber, const EdgeSubset& beta, const AntiCertifyOptions& opt) {
    const ChamberEntry& entry = chamber_by_id(chamber);
    const auto& W = entry.simplex.vertices;
    const Polynomial& f = cm_f();
    const Polynomial g = directional_derivative(beta);
    const FastPoly ff(f), fg(g);
    const double snap_d = opt.snap.get_d();

    Rng rng(opt.seed);
    AntiCertifyResult res;
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        ++res.trials_run;
        // Sorted uniform spacings give a uniform point of the standard simplex.
        std::array<double, 7> cuts{};
        for (int k = 1; k < 6; ++k) cuts[k] = rng.uniform01();
        cuts[6] = 1.0;
        std::sort(cuts.begin() + 1, cuts.begin() + 6);
        std::array<double, 6> q;
        for (int k = 0; k < 6; ++k) q[k] = cuts[k + 1] - cuts[k];
        if (opt.face_bias && trial % 2 == 1) {
            // Pull toward a random proper face: some weights shrink, all stay positive.
            const std::uint64_t mask = 1 + rng.uniform_int(0, 61);
            double total = 0;
            for (int k = 0; k < 6; ++k) {
                if ((mask >> k) & 1U) q[k] *= 1e-4;
                total += q[k];
            }
            for (auto& x : q) x /= total;
        }

        std::array<Integer, 6> qs;
        for (int k = 0; k < 6; ++k) qs[k] = Integer(std::floor(q[k] * snap_d));

        if (!opt.exact_every_trial) {
            std::array<double, kEdges> x{};
            for (int v = 0; v < 6; ++v)
                for (std::size_t k = 0; k < kEdges; ++k) x[k] += static_cast<double>(W[v][k]) * q[v];
            if (!(ff(x) > 0 && fg(x) < 0)) continue;
        }

        ++res.exact_checks;
        EdgeList p;
        for (std::size_t k = 0; k < kEdges; ++k) {
            p[k] = 0;
            for (int v = 0; v < 6; ++v) p[k] += qs[v] * static_cast<long>(W[v][k]);
        }
        const Integer fv = f.evaluate(std::span<const Integer>(p));
        if (sgn(fv) <= 0) continue;
        const Integer gv = g.evaluate(std::span<const Integer>(p));
        if (sgn(gv) >= 0) continue;
        RationalEdgeList pr;
        for (std::size_t k = 0; k < kEdges; ++k) pr[k] = p[k];
        if (!in_pseudo_tetrahedra(pr) || !chamber_membership(entry.decoration, pr)) continue;
        res.witness = Witness{beta, chamber, p, fv, gv, opt.seed, trial};
        return res;
    }
    return res;
}

Integer g_by_interpolation(const EdgeSubset& beta, const EdgeList& p) {
    if (beta.empty()) throw std::invalid_argument("empty edge subset");
    // Derivative at 0 of the degree-6 polynomial through (t, f(p + t 1_beta)),
    // t = 0..6; the weights are 60 times the forward-difference stencil.
    static constexpr std::array<long, 7> w{-147, 360, -450, 400, -225, 72, -10};
    Integer num = 0;
    for (int t = 0; t < 7; ++t) {
        EdgeList q = p;
        for (auto slot : beta.slots()) q[slot] += t;
        num += w[t] * cm_determinant_value(std::span<const Integer, kEdges>(q));
    }
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 60)) throw std::logic_error("non-integral derivative");
    return num / 60;
}

WitnessCheck verify_witness(const Witness& w) {
    WitnessCheck c;
    static const Polynomial f_cofactor = build_f_by_cofactors();
    RationalEdgeList pr;
    for (std::size_t k = 0; k < kEdges; ++k) pr[k] = w.point[k];
    c.tetrahedral_cone = in_pseudo_tetrahedra(pr);
    const ChamberEntry& entry = chamber_by_id(w.chamber);
    c.in_chamber = c.tetrahedral_cone && chamber_membership(entry.decoration, pr);
    c.outside_x_beta = !in_x_beta(w.beta, entry.decoration);

    const Integer f1 = f_cofactor.evaluate(std::span<const Integer>(w.point));
    const Integer f2 = cm_determinant_value(std::span<const Integer, kEdges>(w.point));
    c.f_matches = f1 == w.f && f2 == w.f;
    const Integer g1 = g_by_interpolation(w.beta, w.point);
    const Integer g2 = directional_derivative(w.beta).evaluate(std::span<const Integer>(w.point));
    c.g_matches = g1 == w.g && g2 == w.g;
    c.signs = sgn(f1) > 0 && sgn(g1) < 0;
    return c;
}

void write_witnesses(std::ostream& out, const std::vector<Witness>& ws) {
    for (const auto& w : ws) {
        out << w.beta.to_string() << ' ' << w.chamber;
        for (const auto& x : w.point) out << ' ' << x;
        out << ' ' << w.f << ' ' << w.g << '\n';
    }
}

std::vector<Witness> read_witnesses(std::istream& in) {
    std::vector<Witness> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string beta;
        if (!(is >> beta)) continue;
        Witness w;
        w.beta = EdgeSubset::parse(beta);
        is >> w.chamber;
        for (auto& x : w.point) is >> x;
        is >> w.f >> w.g;
        std::string extra;
        if (!is || (is >> extra)) throw std::runtime_error("malformed witness line " + std::to_string(lineno));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace cmcert
