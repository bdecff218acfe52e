#pragma once

// Exact multivariate polynomials over the rationals.
//
// A Poly is an immutable value bound to a PolyRing. Terms are kept in
// canonical form: no zero coefficients, sorted by grevlex descending. Other
// monomial orders are only consulted by leading_term() and the Groebner
// engine.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hcs/error.hpp"

namespace hcs {

using Rational = mpq_class;

std::string to_string(const Rational& q);

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  // Number of variables with a positive exponent.
  std::size_t support_size() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) to hold for `divisor`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

/// Multiplicative well-orders on monomials.
///
/// block(k) compares the first k variables by grevlex and breaks ties by
/// grevlex on the remaining ones; it eliminates the first k variables.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::block, k); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// K[v_1, ..., v_d] with named variables. Rings are compared by their
/// variable lists.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t dimension() const { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // A ring with `name` inserted before the existing variables. Used for
  // elimination with an auxiliary variable.
  RingPtr with_leading_variable(const std::string& name) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  std::vector<std::string> vars_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

struct Term {
  Monomial monomial;
  Rational coeff;
};

class Poly {
 public:
  explicit Poly(RingPtr ring);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Total degree; -1 for the zero polynomial.
  long degree() const;
  // Degree in a single variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  // Indices of variables that occur.
  std::vector<std::size_t> support() const;
  Rational constant_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly scaled(const Rational& c) const;
  Poly times_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned n) const;
  // Divides by the leading coefficient under the canonical order.
  Poly monic() const;

  // Re-embeds into a ring that has `extra` new variables in front.
  Poly lifted(const RingPtr& target, std::size_t extra) const;
  // Inverse of lifted(); requires the first `extra` exponents to be zero.
  Poly dropped(const RingPtr& target, std::size_t extra) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact division; throws DomainError when `divisor` does not divide `f`.
Poly divide_exact(const Poly& f, const Poly& divisor);

/// Order-maximal monomial of f with its coefficient. Throws DomainError on 0.
std::pair<Monomial, Rational> leading_term(const Poly& f, const MonomialOrder& order);

/// Ring endomorphism of K[v_1..v_d] given by the images of the variables.
class Substitution {
 public:
  static Substitution identity(RingPtr ring);
  Substitution(RingPtr ring, std::vector<Poly> images);
  // Variables absent from the map are fixed. Unknown names are a DomainError.
  static Substitution from_map(RingPtr ring, const std::map<std::string, Poly>& images);

  const RingPtr& ring() const { return ring_; }
  const Poly& image(std::size_t var) const { return images_[var]; }
  Poly apply(const Poly& f) const;
  bool is_identity() const;
  bool moves(std::size_t var) const;
  // Images of the variables under `after` composed with `this`:
  // x -> after(this(x)).
  Substitution followed_by(const Substitution& after) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Poly> images_;
};

Poly apply_shift(const Poly& f, const std::map<std::string, Poly>& substitutions);

// Text interface. Grammar: sums and products of variables, integer and
// rational literals, parentheses, and `^` with a non-negative integer
// exponent. Division is allowed by nonzero constants only.
Poly parse_poly(const RingPtr& ring, std::string_view text);
// Comma separated list of polynomials; an empty string is the empty list.
std::vector<Poly> parse_poly_list(const RingPtr& ring, std::string_view text);

}  // namespace hcs
