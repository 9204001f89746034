#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cmcert/anticert.hpp"
#include "cmcert/random.hpp"

using namespace cmcert;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kSubsets{
    {"12", 12}, {"12,13", 4}, {"12,34", 32}, {"12,13,14", 12}, {"12,14,23", 8}, {"12,13,24,34", 16}, {"12,13,23", 36}};

std::vector<Witness> golden() {
    std::ifstream in(CMCERT_SOURCE_DIR "/data/witnesses.txt");
    REQUIRE(in.good());
    return read_witnesses(in);
}

}  // namespace

TEST_CASE("X_beta chamber counts") {
    for (const auto& [text, count] : kSubsets) {
        EdgeSubset beta = EdgeSubset::parse(text);
        INFO(text);
        CHECK(chambers_in(beta).size() == count);
        CHECK(chambers_in(beta).size() + chambers_outside(beta).size() == 48);
    }
    CHECK(chambers_in(EdgeSubset::full()).size() == 48);
    CHECK(chambers_outside(EdgeSubset::full()).empty());
    CHECK_THROWS_AS(in_x_beta(EdgeSubset::parse("12,13,14,23,24"), Decoration::all().front()), std::invalid_argument);
}

TEST_CASE("X_beta is equivariant under relabeling") {
    for (const auto& [text, count] : kSubsets) {
        (void)count;
        EdgeSubset beta = EdgeSubset::parse(text);
        for (const auto& s : VertexPermutation::all())
            for (const auto& d : Decoration::all()) CHECK(in_x_beta(beta, d) == in_x_beta(beta.relabeled(s), d.relabeled(s)));
    }
}

TEST_CASE("g by interpolation matches the derivative polynomial") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        EdgeSubset beta(static_cast<std::uint8_t>(rng.uniform_int(1, 63)));
        EdgeList p;
        for (auto& x : p) x = static_cast<long>(rng.uniform_int(1, 1000000));
        CHECK(g_by_interpolation(beta, p) == directional_derivative(beta).evaluate(std::span<const Integer>(p)));
    }
}

TEST_CASE("committed witnesses re-verify from scratch") {
    auto ws = golden();
    std::map<std::string, std::set<std::string>> seen;
    for (const auto& w : ws) {
        INFO(w.beta.to_string() << " " << w.chamber);
        auto check = verify_witness(w);
        CHECK(check.tetrahedral_cone);
        CHECK(check.in_chamber);
        CHECK(check.outside_x_beta);
        CHECK(check.f_matches);
        CHECK(check.g_matches);
        CHECK(check.signs);
        CHECK(sgn(w.f) > 0);
        CHECK(sgn(w.g) < 0);
        seen[w.beta.to_string()].insert(w.chamber);
    }
    std::size_t total = 0;
    for (const auto& [text, count] : kSubsets) {
        EdgeSubset beta = EdgeSubset::parse(text);
        auto outside = chambers_outside(beta);
        INFO(text);
        CHECK(seen[beta.to_string()] == std::set<std::string>(outside.begin(), outside.end()));
        total += outside.size();
    }
    CHECK(ws.size() == total);
}

TEST_CASE("verification rejects tampered witnesses") {
    auto ws = golden();
    REQUIRE(!ws.empty());
    Witness w = ws.front();
    w.f += 1;
    CHECK_FALSE(verify_witness(w).f_matches);
    w = ws.front();
    w.g = -w.g;
    CHECK_FALSE(verify_witness(w).ok());
    w = ws.front();
    w.chamber = chambers_in(w.beta).front();
    CHECK_FALSE(verify_witness(w).ok());
}

TEST_CASE("witness files round trip and reject junk") {
    auto ws = golden();
    std::ostringstream out;
    write_witnesses(out, ws);
    std::istringstream in(out.str());
    auto back = read_witnesses(in);
    REQUIRE(back.size() == ws.size());
    for (std::size_t k = 0; k < ws.size(); ++k) {
        CHECK(back[k].beta == ws[k].beta);
        CHECK(back[k].chamber == ws[k].chamber);
        CHECK(back[k].point == ws[k].point);
        CHECK(back[k].f == ws[k].f);
        CHECK(back[k].g == ws[k].g);
    }
    std::istringstream junk("12 D_1111 1 2 3\n");
    CHECK_THROWS_AS(read_witnesses(junk), std::runtime_error);
    std::istringstream comment("# nothing\n\n");
    CHECK(read_witnesses(comment).empty());
}

TEST_CASE("searches are deterministic in the seed") {
    EdgeSubset beta = EdgeSubset::parse("12,13,23");
    std::string chamber = chambers_outside(beta).front();
    AntiCertifyOptions opt;
    opt.trials = 5000;
    opt.seed = 9;
    auto a = anti_certify(chamber, beta, opt);
    auto b = anti_certify(chamber, beta, opt);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->point == b.witness->point);
    CHECK(a.trials_run == b.trials_run);
    CHECK(verify_witness(*a.witness).ok());
}

TEST_CASE("no witness inside X_beta") {
    AntiCertifyOptions opt;
    opt.trials = 400;
    opt.exact_every_trial = true;
    for (const auto& [text, count] : kSubsets) {
        (void)count;
        EdgeSubset beta = EdgeSubset::parse(text);
        auto in = chambers_in(beta);
        INFO(text);
        CHECK_FALSE(anti_certify(in.front(), beta, opt).witness);
    }
}
