#include "hcs/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hcs {

std::string to_string(const Rational& q) {
  // mpq_class keeps values canonical: gcd(num, den) = 1 and den > 0.
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::block: {
      const std::size_t k = std::min(block_, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// PolyRing

RingPtr PolyRing::make(std::vector<std::string> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw DomainError("ring variable names must be nonempty");
    if (!seen.insert(v).second) throw DomainError("duplicate ring variable '" + v + "'");
  }
  return RingPtr(new PolyRing(std::move(variables)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_leading_variable(const std::string& name) const {
  std::vector<std::string> vars;
  vars.reserve(vars_.size() + 1);
  vars.push_back(name);
  vars.insert(vars.end(), vars_.begin(), vars_.end());
  return make(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(what) + ": operands belong to different rings");
}

// ---------------------------------------------------------------------------
// Poly

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool canonical_before(const Term& a, const Term& b) {
  return kCanonical.compare(a.monomial, b.monomial) > 0;
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.ring_->dimension()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->dimension();
  return monomial(std::move(ring), Monomial::variable(n, index), 1);
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Poly p(std::move(ring));
  if (m.size() != p.ring_->dimension()) throw DomainError("monomial arity does not match the ring");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto n = ring->dimension();
  for (const auto& t : terms)
    if (t.monomial.size() != n) throw DomainError("monomial arity does not match the ring");
  std::sort(terms.begin(), terms.end(), canonical_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(ring), std::move(out));
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

long Poly::degree() const {
  // Canonical order is degree-compatible.
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().monomial.degree());
}

long Poly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.monomial[var]));
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->dimension(); ++i)
    if (degree_in(i) > 0) out.push_back(i);
  return out;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& g) const {
  require_same_ring(ring_, g.ring_, "poly_add");
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    auto c = kCanonical.compare(terms_[i].monomial, g.terms_[j].monomial);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + g.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  return Poly(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::operator*(const Poly& g) const {
  require_same_ring(ring_, g.ring_, "poly_mul");
  if (is_zero() || g.is_zero()) return Poly(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r(*this);
  // Multiplication by a monomial preserves any monomial order.
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coeff *= c;
  }
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / Rational(terms_.front().coeff));
}

Poly Poly::lifted(const RingPtr& target, std::size_t extra) const {
  if (target->dimension() != ring_->dimension() + extra) throw DomainError("lift: ring arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e(extra, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::dropped(const RingPtr& target, std::size_t extra) const {
  if (ring_->dimension() != target->dimension() + extra) throw DomainError("drop: ring arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.monomial.exponents();
    for (std::size_t i = 0; i < extra; ++i)
      if (e[i] != 0) throw DomainError("drop: polynomial involves an eliminated variable");
    out.push_back({Monomial(std::vector<Monomial::Exponent>(e.begin() + extra, e.end())), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      os << hcs::to_string(c);
      continue;
    }
    if (c != 1) os << hcs::to_string(c) << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[i];
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly divide_exact(const Poly& f, const Poly& divisor) {
  require_same_ring(f.ring(), divisor.ring(), "divide_exact");
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  // Division by a single polynomial under the canonical order; the
  // remainder is zero exactly when divisor | f.
  const auto& lead = divisor.terms().front();
  Poly rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const auto& t = rest.terms().front();
    if (!lead.monomial.divides(t.monomial))
      throw DomainError("divide_exact: " + divisor.to_string() + " does not divide " + f.to_string());
    Monomial m = t.monomial / lead.monomial;
    Rational c = t.coeff / lead.coeff;
    rest = rest - divisor.times_term(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(f.ring(), std::move(quotient));
}

std::pair<Monomial, Rational> leading_term(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading_term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return {best->monomial, best->coeff};
}

// ---------------------------------------------------------------------------
// Substitution

Substitution Substitution::identity(RingPtr ring) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->dimension(); ++i) images.push_back(Poly::variable(ring, i));
  return Substitution(std::move(ring), std::move(images));
}

Substitution::Substitution(RingPtr ring, std::vector<Poly> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->dimension()) throw DomainError("substitution must give one image per variable");
  for (const auto& p : images_) require_same_ring(ring_, p.ring(), "substitution");
}

Substitution Substitution::from_map(RingPtr ring, const std::map<std::string, Poly>& images) {
  Substitution s = identity(ring);
  for (const auto& [name, image] : images) {
    auto idx = ring->index_of(name);
    if (!idx) throw DomainError("substitution names unknown variable '" + name + "'");
    require_same_ring(ring, image.ring(), "substitution");
    s.images_[*idx] = image;
  }
  return s;
}

Poly Substitution::apply(const Poly& f) const {
  require_same_ring(ring_, f.ring(), "apply_shift");
  const std::size_t n = ring_->dimension();
  // powers[i][e] = images_[i]^e, filled on demand.
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](std::size_t i, std::size_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(ring_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[i]);
    return cache[e];
  };
  Poly result(ring_);
  for (const auto& t : f.terms()) {
    Poly term = Poly::constant(ring_, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] > 0) term = term * power(i, t.monomial[i]);
    result = result + term;
  }
  return result;
}

bool Substitution::moves(std::size_t var) const { return !(images_[var] == Poly::variable(ring_, var)); }

bool Substitution::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (moves(i)) return false;
  return true;
}

Substitution Substitution::followed_by(const Substitution& after) const {
  require_same_ring(ring_, after.ring_, "substitution composition");
  std::vector<Poly> images;
  images.reserve(images_.size());
  for (const auto& p : images_) images.push_back(after.apply(p));
  return Substitution(ring_, std::move(images));
}

std::string Substitution::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!moves(i)) continue;
    if (!first) os << ", ";
    first = false;
    os << ring_->variables()[i] << " -> " << images_[i].to_string();
  }
  os << "}";
  return os.str();
}

Poly apply_shift(const Poly& f, const std::map<std::string, Poly>& substitutions) {
  return Substitution::from_map(f.ring(), substitutions).apply(f);
}

}  // namespace hcs
