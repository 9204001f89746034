#include "cmcert/poly.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cmcert {

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly UnivariatePoly::constant(const Integer& c) { return UnivariatePoly({c}); }

UnivariatePoly UnivariatePoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer UnivariatePoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

int UnivariatePoly::lowest_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
    return -1;
}

Integer UnivariatePoly::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational UnivariatePoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const Integer& s, UnivariatePoly a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k > 0) os << "*";
        }
        if (k == 1) os << var;
        if (k > 1) os << var << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void check_nvars(std::size_t n) {
    if (n == 0 || n > kMaxVars) throw std::invalid_argument("polynomial nvars must be in 1..6");
}

void check_same_nvars(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("polynomial nvars mismatch");
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
    Polynomial p(nvars);
    p.add_term(Exponents{}, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    Exponents e{};
    e[index] = 1;
    return monomial(nvars, Integer(1), e);
}

Polynomial Polynomial::monomial(std::size_t nvars, const Integer& c, const Exponents& e) {
    Polynomial p(nvars);
    for (std::size_t i = nvars; i < kMaxVars; ++i)
        if (e[i] != 0) throw std::invalid_argument("exponent set on a variable past nvars");
    p.add_term(e, c);
    return p;
}

Integer Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::vector<Monomial> Polynomial::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({c, e});
    return out;
}

Exponents Polynomial::degree_envelope() const {
    Exponents env{};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) env[i] = std::max(env[i], e[i]);
    return env;
}

int Polynomial::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += e[i];
        best = std::max(best, d);
    }
    return best;
}

bool Polynomial::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) d += e[i];
        if (d != degree) return false;
    }
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_nvars(a, b);
    Polynomial out(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
                if (s > 255) throw std::overflow_error("exponent exceeds 255");
                e[i] = static_cast<std::uint8_t>(s);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

template <typename T>
T evaluate_impl(const Polynomial& p, std::span<const T> point) {
    if (point.size() != p.nvars()) throw std::invalid_argument("evaluation point has wrong length");
    // Cache powers per variable up to the envelope.
    Exponents env = p.degree_envelope();
    std::array<std::vector<T>, kMaxVars> powers;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        powers[i].resize(env[i] + 1u);
        powers[i][0] = T(1);
        for (std::size_t k = 1; k <= env[i]; ++k) powers[i][k] = powers[i][k - 1] * point[i];
    }
    T acc(0);
    for (const auto& [e, c] : p.terms()) {
        T term(c);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (e[i]) term *= powers[i][e[i]];
        acc += term;
    }
    return acc;
}

}  // namespace

Integer Polynomial::evaluate(std::span<const Integer> point) const { return evaluate_impl<Integer>(*this, point); }

Rational Polynomial::evaluate(std::span<const Rational> point) const { return evaluate_impl<Rational>(*this, point); }

double Polynomial::evaluate(std::span<const double> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
    if (index >= p.nvars()) throw std::invalid_argument("derivative index out of range");
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[index] == 0) continue;
        Exponents d = e;
        d[index] -= 1;
        out.add_term(d, c * e[index]);
    }
    return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars()) throw std::invalid_argument("substitute: need one image per variable");
    const std::size_t m = images.empty() ? 1 : images.front().nvars();
    for (const auto& img : images)
        if (img.nvars() != m) throw std::invalid_argument("substitute: images disagree on nvars");

    Exponents env = p.degree_envelope();
    std::array<std::vector<Polynomial>, kMaxVars> powers;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        powers[i].reserve(env[i] + 1u);
        powers[i].push_back(Polynomial::constant(m, 1));
        for (std::size_t k = 1; k <= env[i]; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }

    Polynomial out(m);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (e[i]) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

UnivariatePoly restrict_curve(const Polynomial& p, std::span<const UnivariatePoly> curve) {
    if (curve.size() != p.nvars()) throw std::invalid_argument("restrict_curve: need one curve per variable");
    Exponents env = p.degree_envelope();
    std::array<std::vector<UnivariatePoly>, kMaxVars> powers;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        powers[i].push_back(UnivariatePoly::constant(1));
        for (std::size_t k = 1; k <= env[i]; ++k) powers[i].push_back(powers[i].back() * curve[i]);
    }
    UnivariatePoly out;
    for (const auto& [e, c] : p.terms()) {
        UnivariatePoly term = UnivariatePoly::constant(c);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (e[i]) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

Polynomial parse_polynomial(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t nvars = 0;
    std::vector<std::pair<Exponents, Integer>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        const std::size_t k = tokens.size() - 1;
        if (k == 0 || k > kMaxVars)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected coefficient and 1..6 exponents");
        if (nvars == 0) nvars = k;
        if (k != nvars) throw std::invalid_argument("line " + std::to_string(lineno) + ": inconsistent exponent count");
        Integer c;
        if (c.set_str(tokens[0], 10) != 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad coefficient '" + tokens[0] + "'");
        Exponents e{};
        for (std::size_t i = 0; i < k; ++i) {
            const std::string& t = tokens[i + 1];
            if (t.empty() || t.size() > 3 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad exponent '" + t + "'");
            int v = std::stoi(t);
            if (v > 255) throw std::invalid_argument("line " + std::to_string(lineno) + ": exponent too large");
            e[i] = static_cast<std::uint8_t>(v);
        }
        rows.emplace_back(e, c);
    }
    if (nvars == 0) throw std::invalid_argument("polynomial file has no terms; cannot infer variable count");
    Polynomial p(nvars);
    for (const auto& [e, c] : rows) p.add_term(e, c);
    return p;
}

Polynomial parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    return parse_polynomial(in);
}

std::string serialize_polynomial(const Polynomial& p) {
    std::ostringstream os;
    os << "# nvars " << p.nvars() << ", " << p.size() << " terms\n";
    for (const auto& [e, c] : p.terms()) {
        os << c.get_str();
        for (std::size_t i = 0; i < p.nvars(); ++i) os << ' ' << unsigned(e[i]);
        os << '\n';
    }
    return os.str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest-degree terms first reads more naturally.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool wrote = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << unsigned(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace cmcert
