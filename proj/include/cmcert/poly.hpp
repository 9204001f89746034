#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients, plus dense univariate polynomials used for curve
// restrictions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmcert {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 6;

/// Exponent vector. Slots past the polynomial's variable count are zero.
using Exponents = std::array<std::uint8_t, kMaxVars>;

/// Dense univariate polynomial c_0 + c_1 t + ... with trailing zeros trimmed.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Integer> coeffs);

    static UnivariatePoly constant(const Integer& c);
    /// The monomial c * t^k.
    static UnivariatePoly monomial(const Integer& c, std::size_t k);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t k) const;

    /// Index of the lowest nonzero coefficient; -1 for zero.
    int lowest_degree() const;

    Integer evaluate(const Integer& t) const;
    Rational evaluate(const Rational& t) const;

    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const Integer& s, UnivariatePoly a);
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// A single term C * x_1^e_1 ... x_n^e_n.
struct Monomial {
    Integer coeff;
    Exponents exponents{};
};

/// Sparse polynomial in 1..6 variables. Keys are kept in lexicographic
/// exponent order and zero coefficients are never stored, so equal
/// polynomials compare and serialize identically.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Integer>;

    explicit Polynomial(std::size_t nvars = kMaxVars);

    static Polynomial constant(std::size_t nvars, const Integer& c);
    /// The polynomial x_index (0-based).
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(std::size_t nvars, const Integer& c, const Exponents& e);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^e (zero when absent).
    Integer coeff(const Exponents& e) const;
    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Integer& c);

    std::vector<Monomial> monomials() const;

    /// Largest exponent of each variable over the support.
    Exponents degree_envelope() const;
    /// Largest total degree over the support; -1 for zero.
    int total_degree() const;
    bool is_homogeneous(int degree) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Integer& s);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Integer& s, Polynomial p) { return p *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned k) const;

    Integer evaluate(std::span<const Integer> point) const;
    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Formal partial derivative with respect to x_index (0-based).
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Composition p(images_0, ..., images_{n-1}). All images share one nvars,
/// which becomes the nvars of the result.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// p(curve_0(t), ..., curve_{n-1}(t)).
UnivariatePoly restrict_curve(const Polynomial& p, std::span<const UnivariatePoly> curve);

/// Text format: one monomial per line, "<coeff> <e1> ... <ek>". Lines may
/// carry '#' comments; blank lines are ignored. Every data line must have
/// the same number of exponent columns, which fixes nvars.
Polynomial parse_polynomial(std::istream& in);
Polynomial parse_polynomial(const std::string& text);
std::string serialize_polynomial(const Polynomial& p);

/// Human-readable form, e.g. "2*x1^2 - x1*x3 + 5".
std::string to_string(const Polynomial& p);

}  // namespace cmcert
