// cmcert: command-line driver.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmcert/anticert.hpp"
#include "cmcert/cases.hpp"
#include "cmcert/chambers.hpp"
#include "cmcert/dominance.hpp"
#include "cmcert/pullback.hpp"

using namespace cmcert;
using ojson = nlohmann::ordered_json;

namespace {

bool g_json = false;

void emit(const std::string& text, const ojson& j) {
    if (g_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

EdgeList to_edge_list(const std::vector<long>& v) {
    if (v.size() != kEdges) throw CLI::ValidationError("expected 6 integers d12 d13 d14 d23 d24 d34");
    EdgeList d;
    for (std::size_t k = 0; k < kEdges; ++k) d[k] = v[k];
    return d;
}

LatticeSimplex6 load_simplex(const std::string& spec) {
    std::ifstream in(spec);
    if (!in) return simplex_by_id(spec);
    LatticeSimplex6 s{spec, {}};
    for (auto& v : s.vertices)
        for (auto& x : v)
            if (!(in >> x)) throw std::runtime_error("simplex file needs 6 rows of 6 integers: " + spec);
    return s;
}

ojson cert_json(const Certificate& c) {
    ojson j;
    j["status"] = to_string(c.status);
    j["steps"] = c.steps;
    j["wpd_tests"] = c.wpd_tests;
    j["subdivisions"] = c.subdivisions;
    j["leaves"] = c.leaves;
    j["max_depth"] = c.max_depth;
    j["splits_per_coordinate"] = c.splits_per_coordinate;
    j["max_terms"] = c.max_terms;
    j["parallel"] = c.parallel;
    if (c.status == CertificateStatus::NegativeWitness) {
        j["witness_lineage"] = lineage_string(c.witness_lineage);
        std::vector<std::string> corner;
        for (const auto& x : c.witness_corner) corner.push_back(x.get_str());
        j["witness_corner"] = corner;
        j["witness_value"] = c.witness_value.get_str();
    }
    return j;
}

std::string cert_text(const Certificate& c) {
    std::ostringstream os;
    os << to_string(c.status) << "  steps=" << c.steps << "  leaves=" << c.leaves << "  max_depth=" << c.max_depth
       << "\n  splits per coordinate:";
    for (auto s : c.splits_per_coordinate) os << " " << s;
    os << "\n";
    if (c.status == CertificateStatus::NegativeWitness) {
        os << "  negative corner after " << (c.witness_lineage.empty() ? std::string("no splits") : lineage_string(c.witness_lineage)) << ":";
        for (const auto& x : c.witness_corner) os << " " << x;
        os << "  value " << c.witness_value << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Cayley-Menger inequalities and positive-dominance certificates"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Machine-readable output");
    int exit_code = 0;

    // case ----------------------------------------------------------------
    auto* cmd_case = app.add_subcommand("case", "Named edge-subset cases");
    cmd_case->require_subcommand(1);
    auto* case_list = cmd_case->add_subcommand("list", "List registered cases");
    RunOptions run_opt;
    std::string case_name;
    bool no_anti = false;
    auto add_run_opts = [&](CLI::App* c) {
        c->add_flag("--parallel", run_opt.parallel, "Threaded certification (step counts may differ)");
        c->add_option("--threads", run_opt.threads, "Worker threads for --parallel");
        c->add_option("--seed", run_opt.seed, "Seed for sampling")->capture_default_str();
        c->add_flag("--no-anticert", no_anti, "Skip anti-certification");
    };
    auto* case_run = cmd_case->add_subcommand("run", "Run one case");
    case_run->add_option("name", case_name, "Case name")->required();
    add_run_opts(case_run);
    auto* case_all = cmd_case->add_subcommand("run-all", "Run every case");
    add_run_opts(case_all);

    case_list->callback([&] {
        std::ostringstream os;
        ojson j = ojson::array();
        for (const auto& c : case_registry()) {
            os << c.name << "  beta=" << c.beta.to_string() << "  interval " << c.interval.to_string() << "  "
               << c.tasks.size() << " certifications\n";
            j.push_back({{"name", c.name}, {"beta", c.beta.to_string()}, {"interval", c.interval.to_string()},
                         {"certifications", c.tasks.size()}});
        }
        emit(os.str(), j);
    });
    auto run_cases = [&](const std::vector<const CaseSpec*>& specs) {
        run_opt.anticertify = !no_anti;
        std::string text;
        ojson j = ojson::array();
        bool ok = true;
        for (const auto* spec : specs) {
            auto t0 = std::chrono::steady_clock::now();
            auto rep = run_case(*spec, run_opt);
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cerr << spec->name << ": " << secs << " s\n";
            text += rep.text();
            j.push_back(rep.json());
            ok = ok && rep.ok;
        }
        emit(text, specs.size() == 1 ? j[0] : j);
        if (!ok) exit_code = 1;
    };
    case_run->callback([&] { run_cases({&case_by_name(case_name)}); });
    case_all->callback([&] {
        std::vector<const CaseSpec*> all;
        for (const auto& c : case_registry()) all.push_back(&c);
        run_cases(all);
    });

    // eval ----------------------------------------------------------------
    auto* cmd_eval = app.add_subcommand("eval", "Evaluate f, g or a*g+b*f at an integer list");
    bool eval_f = false;
    std::string eval_g;
    std::vector<long> eval_combo;
    std::vector<long> eval_point;
    cmd_eval->add_flag("--f", eval_f, "Evaluate f");
    cmd_eval->add_option("--g", eval_g, "Evaluate g for this edge subset (e.g. K4, 12,34)");
    cmd_eval->add_option("--combo", eval_combo, "a b: evaluate a*g+b*f (needs --g)")->expected(2);
    cmd_eval->add_option("point", eval_point, "d12 d13 d14 d23 d24 d34")->required()->expected(6);
    cmd_eval->callback([&] {
        const EdgeList d = to_edge_list(eval_point);
        ojson j;
        std::ostringstream os;
        if (eval_f || eval_g.empty()) {
            auto v = cm_f().evaluate(std::span<const Integer>(d));
            os << "f = " << v << "\n";
            j["f"] = v.get_str();
        }
        if (!eval_g.empty()) {
            auto beta = EdgeSubset::parse(eval_g);
            auto v = directional_derivative(beta).evaluate(std::span<const Integer>(d));
            os << "g[" << beta.to_string() << "] = " << v << "\n";
            j["beta"] = beta.to_string();
            j["g"] = v.get_str();
            if (eval_combo.size() == 2) {
                Combination c{eval_combo[0], eval_combo[1]};
                auto w = c.polynomial(beta).evaluate(std::span<const Integer>(d));
                os << c.to_string() << " = " << w << "\n";
                j["combination"] = c.to_string();
                j["value"] = w.get_str();
            }
        }
        emit(os.str(), j);
    });

    // certify-file ----------------------------------------------------------
    auto* cmd_cert = app.add_subcommand("certify-file", "Certify a polynomial from a coefficient file");
    std::string poly_file, simplex_spec;
    CertifyOptions cert_opt;
    bool print_trace = false;
    cmd_cert->add_option("--poly", poly_file, "Coefficient file: lines '<coeff> e1 .. ek'")->required();
    cmd_cert->add_option("--simplex", simplex_spec,
                         "Pull a 6-variable polynomial back to this simplex (id such as C_11, or a file)");
    cmd_cert->add_option("--budget", cert_opt.budget, "Maximum steps")->capture_default_str();
    cmd_cert->add_flag("--parallel", cert_opt.parallel, "Threaded certification");
    cmd_cert->add_flag("--trace", print_trace, "Print the step trace");
    cmd_cert->callback([&] {
        std::ifstream in(poly_file);
        if (!in) throw std::runtime_error("cannot open " + poly_file);
        Polynomial p = parse_polynomial(in);
        if (!simplex_spec.empty()) p = pullback(p, load_simplex(simplex_spec));
        const Certificate c = certify(p, cert_opt);
        ojson j = cert_json(c);
        std::string text = cert_text(c);
        if (print_trace) {
            j["trace"] = c.trace;
            text += "  trace " + c.trace + "\n";
        }
        emit(text, j);
        exit_code = c.status == CertificateStatus::Nonnegative ? 0
                    : c.status == CertificateStatus::NegativeWitness ? 1
                                                                     : 2;
    });

    // anticert ----------------------------------------------------------------
    auto* cmd_anti = app.add_subcommand("anticert", "Search a chamber for an exact point with f > 0, g < 0");
    std::string anti_beta, anti_chamber, anti_out;
    AntiCertifyOptions anti_opt;
    cmd_anti->add_option("--beta", anti_beta, "Edge subset")->required();
    cmd_anti->add_option("--chamber", anti_chamber, "D-simplex id, or 'outside' for every chamber outside X_beta")
        ->required();
    cmd_anti->add_option("--trials", anti_opt.trials)->capture_default_str();
    cmd_anti->add_option("--seed", anti_opt.seed)->capture_default_str();
    cmd_anti->add_option("--out", anti_out, "Append witnesses in golden-file format");
    cmd_anti->callback([&] {
        const auto beta = EdgeSubset::parse(anti_beta);
        std::vector<std::string> ids =
            anti_chamber == "outside" ? chambers_outside(beta) : std::vector<std::string>{anti_chamber};
        std::vector<Witness> found;
        std::ostringstream os;
        ojson j = ojson::array();
        for (const auto& id : ids) {
            auto r = anti_certify(id, beta, anti_opt);
            ojson e{{"chamber", id}, {"trials_run", r.trials_run}, {"exact_checks", r.exact_checks}};
            if (r.witness) {
                const bool verified = verify_witness(*r.witness).ok();
                std::vector<std::string> pt;
                for (const auto& x : r.witness->point) pt.push_back(x.get_str());
                e["point"] = pt;
                e["f"] = r.witness->f.get_str();
                e["g"] = r.witness->g.get_str();
                e["trial"] = r.witness->trial;
                e["verified"] = verified;
                std::ostringstream line;
                write_witnesses(line, {*r.witness});
                os << line.str();
                if (verified) found.push_back(*r.witness);
                else exit_code = 1;
            } else {
                os << "# " << beta.to_string() << " " << id << ": none in " << r.trials_run << " trials\n";
                exit_code = 1;
            }
            j.push_back(e);
        }
        emit(os.str(), j);
        if (!anti_out.empty()) {
            std::ofstream out(anti_out, std::ios::app);
            write_witnesses(out, found);
        }
    });

    // partition-check ---------------------------------------------------------
    auto* cmd_part = app.add_subcommand("partition-check", "Volume additivity and sampled coverage of the partitions");
    std::size_t part_samples = 10000;
    std::uint64_t part_seed = 1;
    cmd_part->add_option("--samples", part_samples)->capture_default_str();
    cmd_part->add_option("--seed", part_seed)->capture_default_str();
    cmd_part->callback([&] {
        auto rep = partition_check(part_samples, part_seed);
        auto bary = verify_barycenter_conditions();
        std::ostringstream os;
        ojson j;
        j["samples"] = rep.samples;
        j["seed"] = rep.seed;
        j["hull_volume_det"] = rep.hull_volume_det.get_str();
        os << "hull |det| " << rep.hull_volume_det << ", " << rep.samples << " samples, seed " << rep.seed << "\n";
        for (const auto& c : rep.partitions) {
            os << "  " << c.name << ": " << c.simplices << " simplices, |det| sum " << c.total_volume_det
               << ", hits per point " << c.min_hits << ".." << c.max_hits << ", tie-free " << c.tie_free_exactly_one
               << "/" << c.tie_free_points << " in exactly one\n";
            j["partitions"].push_back({{"name", c.name},
                                       {"simplices", c.simplices},
                                       {"total_volume_det", c.total_volume_det.get_str()},
                                       {"min_hits", c.min_hits},
                                       {"max_hits", c.max_hits},
                                       {"tie_free_points", c.tie_free_points},
                                       {"tie_free_exactly_one", c.tie_free_exactly_one}});
        }
        bool bary_ok = true;
        for (const auto& b : bary) {
            os << "  barycenter " << b.name << " " << to_string(b.point) << ": " << b.condition << " "
               << (b.ok ? "ok" : "FAILED") << "\n";
            j["barycenters"].push_back({{"name", b.name}, {"condition", b.condition}, {"ok", b.ok}});
            bary_ok = bary_ok && b.ok;
        }
        const bool ok = rep.ok && bary_ok;
        os << (ok ? "ok" : "FAILED") << "\n";
        j["ok"] = ok;
        emit(os.str(), j);
        if (!ok) exit_code = 1;
    });

    // chambers --------------------------------------------------------------
    auto* cmd_ch = app.add_subcommand("chambers", "The 48 chambers");
    cmd_ch->require_subcommand(1);
    auto* ch_list = cmd_ch->add_subcommand("list", "Each D-simplex with its decoration");
    std::string ch_beta;
    ch_list->add_option("--beta", ch_beta, "Mark membership in X_beta");
    ch_list->callback([&] {
        std::optional<EdgeSubset> beta;
        if (!ch_beta.empty()) beta = EdgeSubset::parse(ch_beta);
        std::ostringstream os;
        ojson j = ojson::array();
        for (const auto& c : chamber_table()) {
            os << c.simplex.id << "  " << c.decoration.id();
            ojson e{{"id", c.simplex.id}, {"decoration", c.decoration.id()}, {"simplex", c.simplex.to_string()}};
            if (beta) {
                const bool in = in_x_beta(*beta, c.decoration);
                os << (in ? "  in X_beta" : "  outside");
                e["in_x_beta"] = in;
            }
            os << "\n    " << c.simplex.to_string() << "\n";
            j.push_back(e);
        }
        emit(os.str(), j);
    });

    // property suites -------------------------------------------------------
    std::size_t suite_trials = 0;
    std::uint64_t suite_seed = 1;
    auto* cmd_len = app.add_subcommand("lengthen-check", "Unit-lengthening volume inequality on random lists");
    cmd_len->add_option("--trials", suite_trials, "Random lists (default 1000)");
    cmd_len->add_option("--seed", suite_seed)->capture_default_str();
    cmd_len->callback([&] {
        auto rep = lengthen_suite(suite_trials ? suite_trials : 1000, suite_seed);
        emit(rep.text(), rep.json());
        if (!rep.ok()) exit_code = 1;
    });
    auto* cmd_app = app.add_subcommand("appendix-check", "Squared-length sum checks on random lists");
    cmd_app->add_option("--trials", suite_trials, "Random pairs and lists (default 500)");
    cmd_app->add_option("--seed", suite_seed)->capture_default_str();
    cmd_app->callback([&] {
        const std::size_t n = suite_trials ? suite_trials : 500;
        auto a = appendix_suite(n, suite_seed);
        auto b = squared_list_suite(n, suite_seed + 1);
        emit(a.text() + b.text(), ojson::array({a.json(), b.json()}));
        if (!a.ok() || !b.ok()) exit_code = 1;
    });

    // explore ---------------------------------------------------------------
    auto* cmd_exp = app.add_subcommand("explore", "Evaluate f and g at a point and locate its chambers");
    std::string exp_beta;
    std::vector<long> exp_point;
    cmd_exp->add_option("--beta", exp_beta, "Edge subset")->required();
    cmd_exp->add_option("--point", exp_point, "d12 d13 d14 d23 d24 d34")->required()->expected(6);
    cmd_exp->callback([&] {
        auto rep = explore(EdgeSubset::parse(exp_beta), to_edge_list(exp_point));
        emit(rep.text(), rep.json());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
