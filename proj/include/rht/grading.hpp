#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

/// Thrown on malformed arguments (bad degrees, inhomogeneous input, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a query falls outside the range in which an answer can be
/// certified. A refusal is a precondition failure, never a wrong answer.
struct Refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string name;
    int degree = 0;
};

struct Factor {
    int gen = 0;  // generator index in the owning algebra
    int exp = 0;
    auto operator<=>(const Factor&) const = default;
};

/// Canonical monomial in a free graded-commutative algebra: factors sorted
/// by generator index, positive exponents, odd generators never squared.
/// The empty factor list is the unit, degree 0.
class Monomial {
public:
    Monomial() = default;

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }

    /// Total exponent count; a monomial is decomposable when this is >= 2.
    int total_exponents() const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    /// Lexicographic on the factor list; this is the basis order everywhere.
    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }

private:
    friend class Algebra;
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Finite rational linear combination of canonical monomials. The zero
/// element is the empty map; no zero coefficients are ever stored.
class Element {
public:
    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Element& add_term(const Monomial& m, const Rational& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Rational& c) const;

    /// Degree of a homogeneous element; nullopt when terms mix degrees.
    /// The zero element is homogeneous of every degree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;

    bool operator==(const Element&) const = default;

private:
    std::map<Monomial, Rational> terms_;
};

/// Free graded-commutative algebra over the rationals on a finite ordered
/// list of generators of positive degree. Owns the generator table; all
/// monomial and element arithmetic routes through here so Koszul signs are
/// applied in exactly one place.
class Algebra {
public:
    explicit Algebra(std::vector<Generator> gens);

    int generator_count() const { return static_cast<int>(gens_.size()); }
    const Generator& generator(int i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<int> find(std::string_view name) const;

    /// Highest generator degree (0 for the empty algebra).
    int top_generator_degree() const;

    /// Monomial from (generator index -> exponent); throws on odd squares.
    Monomial monomial(const std::vector<Factor>& factors) const;
    Monomial generator_monomial(int i) const;
    Element generator_element(int i) const;
    static Element unit_element();

    /// Every canonical monomial of total degree d, in monomial order.
    /// Finite because all generators have degree >= 1.
    std::vector<Monomial> basis(int d) const;

    /// Graded-commutative product of two monomials: the merged canonical
    /// monomial and the Koszul sign, or nullopt when an odd generator
    /// repeats and the product vanishes.
    std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) const;

    Element multiply(const Element& x, const Element& y) const;

    std::string format(const Element& x) const;
    std::string format(const Monomial& m) const;

private:
    std::vector<Generator> gens_;
};

/// Coordinates of a homogeneous element over an ordered monomial basis.
std::vector<Rational> coordinates(const std::vector<Monomial>& basis, const Element& x);
Element from_coordinates(const std::vector<Monomial>& basis, const std::vector<Rational>& coords);

}  // namespace rht
