#include "cmcert/cases.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cmcert/pullback.hpp"

namespace cmcert {

// ---------------------------------------------------------------------------
// small pieces

Rational Combination::endpoint() const {
    if (sgn(a) <= 0) throw std::domain_error("endpoint needs a positive g coefficient");
    Rational c(Integer(-24 * b), a);
    c.canonicalize();
    return c;
}

namespace {

std::string coeff_term(const Integer& c, const char* sym, bool first) {
    if (sgn(c) == 0) return "";
    std::string out;
    if (sgn(c) < 0) out = "-";
    else if (!first) out = "+";
    const Integer m = abs(c);
    if (m != 1) out += m.get_str();
    return out + sym;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string term_str(const Integer& c, int deg) {
    if (deg < 0) return "0";
    std::string s = c.get_str();
    if (deg == 0) return s;
    return s + " t" + (deg == 1 ? "" : "^" + std::to_string(deg));
}

UnivariatePoly up(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return UnivariatePoly(std::move(v));
}

LatticeSimplex6 listing(const std::string& id, std::initializer_list<const char*> names) {
    LatticeSimplex6 s{id, {}};
    std::size_t k = 0;
    for (const char* n : names) s.vertices.at(k++) = named_point(n);
    return s;
}

VertexCurve vcurve(std::initializer_list<std::pair<const char*, UnivariatePoly>> terms) {
    VertexCurve c;
    for (const auto& [n, w] : terms) c.terms.emplace_back(named_point(n), w);
    return c;
}

VertexCurve vcurve(const LatticeSimplex6& s, std::initializer_list<std::pair<int, UnivariatePoly>> terms) {
    VertexCurve c;
    for (const auto& [k, w] : terms) c.terms.emplace_back(s.vertices.at(k - 1), w);
    return c;
}

CertTask task(const LatticeSimplex6& s, const char* fname, long a, long b, std::optional<std::uint64_t> target,
              bool claimed = true) {
    return CertTask{s.id, s, fname, Combination{a, b}, target, claimed};
}

CurveCheck curve(std::string name, VertexCurve c, UnivariatePoly a, UnivariatePoly b, long coeff, int degree,
                 bool asserted = true) {
    return CurveCheck{std::move(name), c, c, std::move(a), std::move(b), Integer(coeff), degree, asserted};
}

ValueCheck value(std::string name, const char* point, long a, long b, const Integer& expected, bool asserted = true) {
    return ValueCheck{std::move(name), named_point(point), Combination{a, b}, expected, asserted};
}

LatticePoint uniform(std::int64_t x) { return {x, x, x, x, x, x}; }

}  // namespace

std::string Combination::to_string() const {
    if (sgn(a) == 0 && sgn(b) == 0) return "0";
    std::string s = coeff_term(a, "g", true);
    s += coeff_term(b, "f", s.empty());
    return s;
}

std::array<UnivariatePoly, kEdges> VertexCurve::coordinates() const {
    std::array<UnivariatePoly, kEdges> out;
    for (const auto& [v, w] : terms)
        for (std::size_t k = 0; k < kEdges; ++k)
            if (v[k] != 0) out[k] += Integer(static_cast<long>(v[k])) * w;
    return out;
}

std::string IntervalClaim::to_string() const {
    auto side = [](const std::optional<Rational>& v, bool exact, const char* rel) -> std::string {
        if (!v) return "?";
        return (exact ? "" : std::string(rel)) + rational_str(*v);
    };
    if (lo && hi && lo_exact && hi_exact && *lo == *hi) return "{" + rational_str(*lo) + "}";
    return "[" + side(lo, lo_exact, "<=") + ", " + side(hi, hi_exact, ">=") + "]";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Gold: return "GOLD";
        case Verdict::Pass: return "PASS";
        case Verdict::PassWithNote: return "PASS-WITH-NOTE";
        case Verdict::Refuted: return "REFUTED";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// registry

namespace {

std::vector<CaseSpec> build_registry() {
    std::vector<CaseSpec> cases;

    {
        CaseSpec c;
        c.name = "full-K4";
        c.beta = EdgeSubset::full();
        auto s = listing("C_11", {"C", "B2", "B3", "B4", "A2", "A3"});
        c.tasks = {task(s, "P", 2, -3, 7455), task(s, "Q", 3, -2, 1173)};
        c.values = {value("f(C)", "C", 0, 1, 16384), value("g(C)", "C", 1, 0, 24576),
                    value("f(A23)", "A23", 0, 1, -93312), value("g(A23)", "A23", 1, 0, -62208)};
        c.interval = {Rational(16), Rational(36), true, true};
        c.x_beta_chambers = 48;
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "single-edge";
        c.beta = EdgeSubset::parse("12");
        auto s1 = listing("S1", {"C", "B3", "B24", "A13", "B2", "A1"});
        auto s2 = listing("S2", {"C", "B3", "B24", "A13", "B4", "A1"});
        auto s3 = listing("S3", {"C", "B3", "B24", "A13", "B4", "A3"});
        c.tasks = {task(s1, "P", 1, 0, 421),  task(s2, "P", 1, 0, 421),  task(s3, "P", 1, 0, 427),
                   task(s1, "Q", 12, -1, 457), task(s2, "Q", 12, -1, 469), task(s3, "Q", 12, -1, 617)};
        c.curves = {
            curve("Omega_t=(1-t)A1+tA13, g+tf", vcurve({{"A1", up({1, -1})}, {"A13", up({0, 1})}}), up({1}),
                  up({0, 1}), -342144, 3),
            curve("Psi_t=(1-t^2)B2+t^2C, (12-t)g-f", vcurve({{"B2", up({1, 0, -1})}, {"C", up({0, 0, 1})}}),
                  up({12, -1}), up({-1}), -57344, 5),
        };
        c.interval = {Rational(0), Rational(2), true, true};
        c.x_beta_chambers = 12;
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "incident-pair";
        c.beta = EdgeSubset::parse("12,13");
        auto s1 = listing("S1", {"C", "B4", "B23", "A12", "B2", "A1"});
        auto s2 = listing("S2", {"C", "B4", "B23", "A12", "B3", "A1"});
        c.tasks = {task(s1, "P", 1, 0, 421), task(s2, "P", 1, 0, 421), task(s1, "Q", 2, -1, 479),
                   task(s2, "Q", 2, -1, 479)};
        auto literal = listing("literal", {"C", "B3", "B24", "A12", "B2", "A1"});
        c.curves = {
            curve("Omega_t=(1-t-t^2)V5+tV2+t^2V3 on S1, g+tf",
                  vcurve(s1, {{5, up({1, -1, -1})}, {2, up({0, 1})}, {3, up({0, 0, 1})}}), up({1}), up({0, 1}),
                  -2097152, 7),
            curve("Omega_t on the literal listing, g+tf",
                  vcurve(literal, {{5, up({1, -1, -1})}, {2, up({0, 1})}, {3, up({0, 0, 1})}}), up({1}),
                  up({0, 1}), -2097152, 7, false),
            curve("(2-t)g(V1)-f(V1), V1=C", vcurve({{"C", up({1})}}), up({2, -1}), up({-1}), -8192, 1),
        };
        c.interval = {Rational(0), Rational(12), true, true};
        c.x_beta_chambers = 4;
        c.notes = {"reference listing: second vertex repeated as (0,8,0,8,0,8); certified simplices are the two "
                   "D-simplices of X_beta inside C_31"};
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "opposite-pair";
        c.beta = EdgeSubset::parse("12,34");
        auto s1 = listing("S1", {"C", "B3", "B24", "A13", "B2", "A1"});
        auto s2 = listing("S2", {"C", "B3", "B24", "A13", "B2", "A3"});
        auto s3 = listing("S3", {"C", "B1", "B24", "A13", "B2", "A1"});
        auto s4 = listing("S4", {"C", "B1", "B24", "A13", "B2", "A3"});
        c.tasks = {task(s1, "P", 1, 0, 473), task(s2, "P", 1, 0, 473), task(s3, "P", 1, 0, 331),
                   task(s4, "P", 1, 0, 331), task(s1, "Q", 6, -1, 467), task(s2, "Q", 6, -1, 467),
                   task(s3, "Q", 6, -1, 1161), task(s4, "Q", 6, -1, 1161)};
        c.interval = {Rational(0), Rational(4), false, false};
        c.x_beta_chambers = 32;
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "tripod";
        c.beta = EdgeSubset::parse("12,13,14");
        auto s = listing("C_21", {"C", "B3", "B2", "B4", "A1", "A3"});
        c.tasks = {task(s, "P", 4, -3, 967), task(s, "Q", 3, -1, 779)};
        c.values = {
            value("(4g-3f)(C)", "C", 4, -3, 0),
            value("(3g-f)(A23)", "A23", 3, -1, 0),
            value("g(A23)", "A23", 1, 0, -31104),
            ValueCheck{"f(8,...,8) (reference)", uniform(8), Combination{0, 1}, Integer(3 * 4096), false},
            ValueCheck{"g(8,...,8) (reference)", uniform(8), Combination{1, 0}, Integer(4096), false},
            value("f(A3) (reference)", "A3", 0, 1, -93312, false),
            value("g(A3) (reference)", "A3", 1, 0, -31104, false),
        };
        c.interval = {Rational(8), Rational(18), true, true};
        c.x_beta_chambers = 12;
        c.notes = {"boundary rays: 4g-3f vanishes at C and 3g-f vanishes at A23, where (f,g) = (-93312,-31104)"};
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "3-path";
        c.beta = EdgeSubset::parse("12,14,23");
        auto s = listing("C_21", {"C", "B3", "B2", "B4", "A1", "A3"});
        c.tasks = {task(s, "P", 4, 1, 823), task(s, "Q", 3, -2, 1243),
                   task(s, "Q (reference)", 3, -3, 1243, false)};
        c.interval = {Rational(-6), Rational(16), false, false};
        c.x_beta_chambers = 8;
        c.notes = {"the bound 16 corresponds to 24g-16f = 8(3g-2f); the reference 3g-3f is recorded unclaimed"};
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "4-cycle";
        c.beta = EdgeSubset::parse("12,13,24,34");
        auto s = listing("C_31", {"C", "B4", "B2", "B3", "A1", "A2"});
        c.tasks = {task(s, "P", 1, 0, 755), task(s, "Q", 1, -1, 1687)};
        c.curves = {curve("Theta_t=(1-t-t^2)V2+tV3+t^2V4, g+tf",
                          vcurve(s, {{2, up({1, -1, -1})}, {3, up({0, 1})}, {4, up({0, 0, 1})}}), up({1}),
                          up({0, 1}), -8388608, 7)};
        c.values = {value("f(C)", "C", 0, 1, 16384), value("g(C)", "C", 1, 0, 16384)};
        c.interval = {Rational(0), Rational(24), true, true};
        c.x_beta_chambers = 16;
        cases.push_back(std::move(c));
    }
    {
        CaseSpec c;
        c.name = "3-cycle";
        c.beta = EdgeSubset::parse("12,13,23");
        auto s = listing("B_1", {"A1", "A2", "A3", "B2", "B3", "B4"});
        c.tasks = {task(s, "P", 3, -1, 1275)};
        auto omega = vcurve(s, {{1, up({1, 0, -1})}, {2, up({0, 0, 1})}});
        auto psi = vcurve(s, {{4, up({1, -1, -1})}, {1, up({0, 1})}, {2, up({0, 0, 1})}});
        c.curves = {
            curve("Omega_t=(1-t^2)V1+t^2V2, (3+t)g-f", omega, up({3, 1}), up({-1}), -497664, 5),
            curve("Psi_t=(1-t-t^2)V4+tV1+t^2V2, (3-t)g-f", psi, up({3, -1}), up({-1}), 663552, 6),
            CurveCheck{"(3-t)g(Psi_t)-f(Omega_t) (reference)", psi, omega, up({3, -1}), up({-1}), Integer(663552), 6,
                       false},
        };
        c.interval = {Rational(8), Rational(8), true, true};
        c.x_beta_chambers = 36;
        cases.push_back(std::move(c));
    }
    return cases;
}

}  // namespace

const std::vector<CaseSpec>& case_registry() {
    static const std::vector<CaseSpec> reg = build_registry();
    return reg;
}

const CaseSpec& case_by_name(const std::string& name) {
    for (const auto& c : case_registry())
        if (c.name == name) return c;
    throw std::out_of_range("unknown case: " + name);
}

// ---------------------------------------------------------------------------
// running

TaskResult run_task(const CertTask& t, const EdgeSubset& beta, const RunOptions& opt) {
    TaskResult r;
    r.task = t;
    const Polynomial p = t.fn.polynomial(beta);
    const PullbackMap map = build_pullback(t.simplex);
    CertifyOptions co;
    co.parallel = opt.parallel;
    co.threads = opt.threads;
    co.budget = opt.budget;
    r.cert = certify(pullback(p, map), co);

    if (r.cert.status == CertificateStatus::Nonnegative) {
        Rng rng(opt.seed);
        const long den = 1L << 20;
        r.soundness_ok = true;
        for (std::size_t i = 0; i < opt.soundness_samples; ++i) {
            std::array<Rational, kCubeDim> x;
            for (auto& xi : x) {
                xi = Rational(rng.uniform_int(0, den), den);
                xi.canonicalize();
            }
            ++r.soundness_samples;
            if (sgn(p.evaluate(std::span<const Rational>(map.apply(x)))) < 0) r.soundness_ok = false;
        }
        if (t.target && r.cert.steps == *t.target) {
            r.verdict = Verdict::Gold;
        } else if (t.target) {
            r.verdict = Verdict::PassWithNote;
            r.note = "recorded " + std::to_string(r.cert.steps) + " steps, target " + std::to_string(*t.target);
        } else {
            r.verdict = Verdict::Pass;
        }
        if (!r.soundness_ok) r.verdict = Verdict::Fail;
    } else if (r.cert.status == CertificateStatus::NegativeWitness) {
        std::array<Rational, kCubeDim> x;
        std::copy(r.cert.witness_corner.begin(), r.cert.witness_corner.end(), x.begin());
        r.corner_recheck = p.evaluate(std::span<const Rational>(map.apply(x)));
        const bool negative = sgn(*r.corner_recheck) < 0 && *r.corner_recheck == r.cert.witness_value;
        r.verdict = (!t.claimed && negative) ? Verdict::Refuted : Verdict::Fail;
        r.note = "negative corner value " + rational_str(r.cert.witness_value);
    } else {
        r.verdict = Verdict::Fail;
        r.note = "budget exhausted";
    }
    return r;
}

CurveResult curve_check(const CurveCheck& c, const EdgeSubset& beta) {
    CurveResult r;
    r.name = c.name;
    r.expected_coeff = c.expected_coeff;
    r.expected_degree = c.expected_degree;
    r.asserted = c.asserted;
    const auto cg = c.curve_g.coordinates();
    const auto cf = c.curve_f.coordinates();
    const UnivariatePoly gt = restrict_curve(directional_derivative(beta), std::span<const UnivariatePoly>(cg));
    const UnivariatePoly ft = restrict_curve(cm_f(), std::span<const UnivariatePoly>(cf));
    r.restriction = c.a * gt + c.b * ft;
    r.identically_zero = r.restriction.is_zero();
    if (!r.identically_zero) {
        r.degree = r.restriction.lowest_degree();
        r.coeff = r.restriction.coeff(static_cast<std::size_t>(r.degree));
    }
    return r;
}

ValueResult value_check(const ValueCheck& v, const EdgeSubset& beta) {
    EdgeList p = to_integer(v.point);
    return {v.name, v.fn.polynomial(beta).evaluate(std::span<const Integer>(p)), v.expected, v.asserted};
}

CoverageResult coverage_check(const CaseSpec& spec) {
    CoverageResult r;
    r.expected = spec.x_beta_chambers;
    const auto stab = stabilizer(spec.beta);
    r.stabilizer_order = stab.size();
    std::vector<LatticeSimplex6> images;
    for (const auto& t : spec.tasks)
        for (const auto& s : stab) {
            auto img = t.simplex.relabeled(s, t.simplex.id);
            if (std::none_of(images.begin(), images.end(), [&](const auto& o) { return o.same_vertices(img); }))
                images.push_back(std::move(img));
        }
    for (const auto& id : chambers_in(spec.beta)) {
        ++r.x_beta;
        const auto& d = chamber_by_id(id).simplex;
        if (std::any_of(images.begin(), images.end(), [&](const auto& img) { return img.contains(d); })) ++r.covered;
    }
    return r;
}

AntiResult anti_certify_case(const EdgeSubset& beta, const RunOptions& opt) {
    AntiResult r;
    const auto outside = chambers_outside(beta);
    r.outside = outside.size();
    AntiCertifyOptions ao;
    ao.seed = opt.seed;
    if (!outside.empty()) {
        r.trials_per_chamber = ao.trials;
        for (const auto& id : outside) {
            auto res = anti_certify(id, beta, ao);
            if (res.witness && verify_witness(*res.witness).ok()) r.witnesses.push_back(*res.witness);
            else r.missing.push_back(id);
        }
        return r;
    }
    const auto& table = chamber_table();
    ao.exact_every_trial = true;
    ao.trials = (opt.full_search_trials + table.size() - 1) / table.size();
    r.trials_per_chamber = ao.trials;
    for (const auto& c : table) {
        auto res = anti_certify(c.simplex.id, beta, ao);
        r.full_search_trials += res.exact_checks;
        if (res.witness) ++r.full_search_hits;
    }
    return r;
}

IntervalResult interval_check(const CaseSpec& spec) {
    IntervalResult r;
    const auto& iv = spec.interval;
    bool lo_hit = !iv.lo, hi_hit = !iv.hi;
    for (const auto& t : spec.tasks) {
        if (!t.claimed) continue;
        const Rational c = t.fn.endpoint();
        Rational k(Integer(24), t.fn.a);
        k.canonicalize();
        std::string line = "24g" + (sgn(c) > 0 ? " - " + rational_str(c) + "f" : sgn(c) < 0 ? " + " + rational_str(-c) + "f" : "") +
                           " = " + rational_str(k) + " (" + t.fn.to_string() + ")";
        const bool at_lo = iv.lo && c == *iv.lo;
        const bool at_hi = iv.hi && c == *iv.hi;
        lo_hit = lo_hit || at_lo;
        hi_hit = hi_hit || at_hi;
        if (!at_lo && !at_hi) {
            r.ok = false;
            line += "  not an endpoint";
        }
        if (std::find(r.lines.begin(), r.lines.end(), line) == r.lines.end()) r.lines.push_back(line);
    }
    if (!lo_hit || !hi_hit) {
        r.ok = false;
        r.lines.push_back("an endpoint has no certified function");
    }
    return r;
}

CaseReport run_case(const CaseSpec& spec, const RunOptions& opt) {
    CaseReport rep;
    rep.name = spec.name;
    rep.beta = spec.beta.to_string();
    rep.notes = spec.notes;
    bool ok = true;
    for (const auto& t : spec.tasks) {
        rep.tasks.push_back(run_task(t, spec.beta, opt));
        if (rep.tasks.back().verdict == Verdict::Fail) ok = false;
    }
    for (const auto& c : spec.curves) {
        rep.curves.push_back(curve_check(c, spec.beta));
        if (c.asserted && !rep.curves.back().matches()) ok = false;
    }
    for (const auto& v : spec.values) {
        rep.values.push_back(value_check(v, spec.beta));
        if (v.asserted && !rep.values.back().matches()) ok = false;
    }
    rep.interval = interval_check(spec);
    ok = ok && rep.interval.ok;
    rep.coverage = coverage_check(spec);
    ok = ok && rep.coverage.ok();
    if (opt.anticertify) {
        rep.anti = anti_certify_case(spec.beta, opt);
        ok = ok && rep.anti->ok();
    }
    rep.ok = ok;
    return rep;
}

// ---------------------------------------------------------------------------
// reports

std::string CaseReport::text() const {
    std::ostringstream os;
    os << "case " << name << "  beta=" << beta << "\n";
    for (const auto& t : tasks) {
        os << "  certify " << t.task.simplex_name << " " << t.task.function_name << "=" << t.task.fn.to_string()
           << (t.task.claimed ? "" : " (unclaimed)") << "  " << to_string(t.cert.status) << "  steps=" << t.cert.steps;
        if (t.task.target) os << "  target=" << *t.task.target;
        os << "  depth=" << t.cert.max_depth << "  " << to_string(t.verdict);
        if (t.cert.status == CertificateStatus::Nonnegative)
            os << "  soundness " << (t.soundness_ok ? "ok" : "VIOLATED") << " (" << t.soundness_samples << ")";
        if (!t.note.empty()) os << "  [" << t.note << "]";
        os << "\n";
    }
    for (const auto& c : curves) {
        os << "  curve " << c.name << ": "
           << (c.identically_zero ? std::string("identically zero") : term_str(c.coeff, c.degree)) << "  expected "
           << term_str(c.expected_coeff, c.expected_degree) << "  "
           << (c.matches() ? "MATCH" : (c.asserted ? "MISMATCH" : "differs (not asserted)")) << "\n";
    }
    for (const auto& v : values) {
        os << "  value " << v.name << " = " << v.value << "  expected " << v.expected << "  "
           << (v.matches() ? "MATCH" : (v.asserted ? "MISMATCH" : "differs (not asserted)")) << "\n";
    }
    for (const auto& l : interval.lines) os << "  interval " << l << "\n";
    os << "  interval consistency " << (interval.ok ? "ok" : "FAILED") << "\n";
    os << "  coverage " << coverage.covered << "/" << coverage.x_beta << " chambers of X_beta (stated "
       << coverage.expected << ") under a stabilizer of order " << coverage.stabilizer_order << "  "
       << (coverage.ok() ? "ok" : "FAILED") << "\n";
    if (anti) {
        if (anti->outside > 0) {
            os << "  anti-certification " << anti->witnesses.size() << "/" << anti->outside << " chambers witnessed";
            for (const auto& m : anti->missing) os << "  missing " << m;
            os << "\n";
        } else {
            os << "  anti-certification: no chamber outside X_beta; " << anti->full_search_trials
               << " exact trials found " << anti->full_search_hits << " points with f>0, g<0\n";
        }
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << "  result " << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

nlohmann::ordered_json CaseReport::json() const {
    nlohmann::ordered_json j;
    j["case"] = name;
    j["beta"] = beta;
    auto& jt = j["certifications"] = nlohmann::ordered_json::array();
    for (const auto& t : tasks) {
        nlohmann::ordered_json e;
        e["simplex"] = t.task.simplex_name;
        e["function"] = t.task.function_name;
        e["combination"] = t.task.fn.to_string();
        e["claimed"] = t.task.claimed;
        e["status"] = to_string(t.cert.status);
        e["steps"] = t.cert.steps;
        e["target"] = t.task.target ? nlohmann::ordered_json(*t.task.target) : nlohmann::ordered_json(nullptr);
        e["max_depth"] = t.cert.max_depth;
        e["splits_per_coordinate"] = t.cert.splits_per_coordinate;
        e["verdict"] = to_string(t.verdict);
        e["soundness_samples"] = t.soundness_samples;
        e["soundness_ok"] = t.soundness_ok;
        if (t.cert.status == CertificateStatus::NegativeWitness) {
            e["witness_lineage"] = lineage_string(t.cert.witness_lineage);
            e["witness_value"] = t.cert.witness_value.get_str();
        }
        e["note"] = t.note;
        jt.push_back(e);
    }
    auto& jc = j["curves"] = nlohmann::ordered_json::array();
    for (const auto& c : curves)
        jc.push_back({{"name", c.name},
                      {"identically_zero", c.identically_zero},
                      {"coefficient", c.coeff.get_str()},
                      {"degree", c.degree},
                      {"expected_coefficient", c.expected_coeff.get_str()},
                      {"expected_degree", c.expected_degree},
                      {"asserted", c.asserted},
                      {"match", c.matches()}});
    auto& jv = j["values"] = nlohmann::ordered_json::array();
    for (const auto& v : values)
        jv.push_back({{"name", v.name},
                      {"value", v.value.get_str()},
                      {"expected", v.expected.get_str()},
                      {"asserted", v.asserted},
                      {"match", v.matches()}});
    j["interval"] = {{"lines", interval.lines}, {"ok", interval.ok}};
    j["coverage"] = {{"x_beta", coverage.x_beta},
                     {"stated", coverage.expected},
                     {"covered", coverage.covered},
                     {"stabilizer_order", coverage.stabilizer_order},
                     {"ok", coverage.ok()}};
    if (anti) {
        nlohmann::ordered_json ja;
        ja["outside"] = anti->outside;
        ja["witnessed"] = anti->witnesses.size();
        ja["missing"] = anti->missing;
        ja["full_search_trials"] = anti->full_search_trials;
        ja["full_search_hits"] = anti->full_search_hits;
        auto& jw = ja["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : anti->witnesses) {
            std::vector<std::string> pt;
            for (const auto& x : w.point) pt.push_back(x.get_str());
            jw.push_back({{"chamber", w.chamber}, {"point", pt}, {"f", w.f.get_str()}, {"g", w.g.get_str()},
                          {"trial", w.trial}});
        }
        ja["ok"] = anti->ok();
        j["anti_certification"] = ja;
    }
    j["notes"] = notes;
    j["ok"] = ok;
    return j;
}

// ---------------------------------------------------------------------------
// property suites

namespace {

Integer total(const EdgeList& d) {
    Integer s = 0;
    for (const auto& x : d) s += x;
    return s;
}

EdgeList plus(const EdgeList& d, const Integer& t) {
    EdgeList out = d;
    for (auto& x : out) x += t;
    return out;
}

Integer pow6(const Integer& x) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), 6);
    return r;
}

std::pair<Integer, Integer> lengthen_sides(const EdgeList& d, const Integer& t) {
    if (t < 1) throw std::invalid_argument("lengthening needs t >= 1");
    if (!is_tetrahedral(d)) throw std::invalid_argument("not a tetrahedral list");
    const Polynomial& f = cm_f();
    const EdgeList dt = plus(d, t);
    const Integer s = total(d);
    return {f.evaluate(std::span<const Integer>(dt)) * pow6(s), f.evaluate(std::span<const Integer>(d)) * pow6(s + 6 * t)};
}

bool faces_ok(const EdgeList& q) {
    for (const auto& face : faces())
        if (sgn(heron_squared_form(q[face[0]], q[face[1]], q[face[2]])) <= 0) return false;
    return true;
}

std::string list_str(const EdgeList& d) {
    std::string s = "(";
    for (std::size_t k = 0; k < kEdges; ++k) s += (k ? "," : "") + d[k].get_str();
    return s + ")";
}

void note_failure(SuiteReport& r, std::string what) {
    if (r.failures.size() < 5) r.failures.push_back(std::move(what));
}

}  // namespace

bool lengthen_check(const EdgeList& d, const Integer& t) {
    auto [lhs, rhs] = lengthen_sides(d, t);
    return lhs >= rhs;
}

bool lengthen_equality(const EdgeList& d, const Integer& t) {
    auto [lhs, rhs] = lengthen_sides(d, t);
    return lhs == rhs;
}

bool appendix_check(const EdgeList& a, const EdgeList& b) {
    if (!is_tetrahedral(a) || !is_tetrahedral(b)) throw std::invalid_argument("not a tetrahedral list");
    EdgeList a2, s2;
    for (std::size_t k = 0; k < kEdges; ++k) {
        a2[k] = a[k] * a[k];
        s2[k] = a2[k] + b[k] * b[k];
    }
    const Polynomial& fh = cm_f_on_squares();
    const Integer fa = fh.evaluate(std::span<const Integer>(a2));
    const Integer fs = fh.evaluate(std::span<const Integer>(s2));
    return sgn(fa) > 0 && fs > fa && faces_ok(s2);
}

bool squared_list_check(const EdgeList& d) {
    if (!is_tetrahedral(d)) throw std::invalid_argument("not a tetrahedral list");
    return sgn(cm_f_on_squares().evaluate(std::span<const Integer>(d))) > 0 && faces_ok(d);
}

EdgeList random_tetrahedral(Rng& rng, long lo, long hi) {
    for (;;) {
        EdgeList d;
        for (auto& x : d) x = rng.uniform_int(lo, hi);
        if (is_tetrahedral(d)) return d;
    }
}

SuiteReport lengthen_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport r;
    r.name = "unit lengthening";
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const EdgeList d = random_tetrahedral(rng, 1, 100);
        ++r.trials;
        const bool ok = lengthen_check(d) && is_tetrahedral(plus(d, 1));
        if (ok) ++r.passed;
        else note_failure(r, list_str(d));
    }
    for (long a = 1; a <= 20; ++a) {
        const EdgeList d{a, a, a, a, a, a};
        ++r.equality_checks;
        if (lengthen_equality(d)) ++r.equality_passed;
        else note_failure(r, "regular " + list_str(d));
    }
    return r;
}

SuiteReport appendix_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport r;
    r.name = "squared-length sums";
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const EdgeList a = random_tetrahedral(rng, 1, 50);
        const EdgeList b = random_tetrahedral(rng, 1, 50);
        ++r.trials;
        if (appendix_check(a, b)) ++r.passed;
        else note_failure(r, list_str(a) + " " + list_str(b));
    }
    // A = B regular: fhat scales by 2^3.
    for (long a = 1; a <= 10; ++a) {
        const EdgeList d{a, a, a, a, a, a};
        EdgeList a2, s2;
        for (std::size_t k = 0; k < kEdges; ++k) {
            a2[k] = a * a;
            s2[k] = 2 * a * a;
        }
        ++r.equality_checks;
        const Polynomial& fh = cm_f_on_squares();
        if (fh.evaluate(std::span<const Integer>(s2)) == 8 * fh.evaluate(std::span<const Integer>(a2)) &&
            appendix_check(d, d))
            ++r.equality_passed;
        else note_failure(r, "regular " + list_str(d));
    }
    return r;
}

SuiteReport squared_list_suite(std::size_t trials, std::uint64_t seed) {
    SuiteReport r;
    r.name = "square roots of a tetrahedral list";
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const EdgeList d = random_tetrahedral(rng, 1, 50);
        ++r.trials;
        if (squared_list_check(d)) ++r.passed;
        else note_failure(r, list_str(d));
    }
    return r;
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << name << ": " << passed << "/" << trials << " passed";
    if (equality_checks) os << ", regular " << equality_passed << "/" << equality_checks;
    os << "  " << (ok() ? "ok" : "FAILED") << "\n";
    for (const auto& f : failures) os << "  failure " << f << "\n";
    return os.str();
}

nlohmann::ordered_json SuiteReport::json() const {
    return {{"suite", name},       {"trials", trials},
            {"passed", passed},    {"regular_checks", equality_checks},
            {"regular_passed", equality_passed}, {"failures", failures},
            {"ok", ok()}};
}

// ---------------------------------------------------------------------------
// explore

ExploreReport explore(const EdgeSubset& beta, const EdgeList& point) {
    ExploreReport r;
    r.point = point;
    r.sum = total(point);
    r.f = cm_f().evaluate(std::span<const Integer>(point));
    r.g = directional_derivative(beta).evaluate(std::span<const Integer>(point));
    RationalEdgeList pr;
    for (std::size_t k = 0; k < kEdges; ++k) pr[k] = point[k];
    r.pseudo_tetrahedron = in_pseudo_tetrahedra(pr);
    r.tetrahedral = std::all_of(point.begin(), point.end(), [](const Integer& x) { return sgn(x) > 0; }) &&
                    is_tetrahedral(point);
    if (r.pseudo_tetrahedron)
        for (const auto& c : chamber_table())
            if (chamber_membership(c.decoration, pr)) r.chambers.push_back(c.simplex.id);
    return r;
}

std::string ExploreReport::text() const {
    std::ostringstream os;
    os << "point " << list_str(point) << "  sum=" << sum << "\n";
    os << "  pseudo-tetrahedron " << (pseudo_tetrahedron ? "yes" : "no") << ", tetrahedral "
       << (tetrahedral ? "yes" : "no") << "\n";
    os << "  f=" << f << "  g=" << g << "\n";
    os << "  chambers:";
    for (const auto& c : chambers) os << " " << c;
    if (chambers.empty()) os << " none";
    os << "\n";
    return os.str();
}

nlohmann::ordered_json ExploreReport::json() const {
    std::vector<std::string> pt;
    for (const auto& x : point) pt.push_back(x.get_str());
    return {{"point", pt},       {"sum", sum.get_str()},
            {"pseudo_tetrahedron", pseudo_tetrahedron},
            {"tetrahedral", tetrahedral},
            {"f", f.get_str()},  {"g", g.get_str()},
            {"chambers", chambers}};
}

}  // namespace cmcert
