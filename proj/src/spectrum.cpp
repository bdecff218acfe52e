#include "hcs/spectrum.hpp"

#include <algorithm>
#include <set>

namespace hcs {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::monomial:
      return "monomial";
    case Certificate::linear_maximal:
      return "linear-maximal";
    case Certificate::principal_irreducible:
      return "principal-irreducible";
    case Certificate::declared:
      return "declared";
  }
  return "?";
}

Certificate certificate_from_string(std::string_view s) {
  if (s == "monomial") return Certificate::monomial;
  if (s == "linear-maximal") return Certificate::linear_maximal;
  if (s == "principal-irreducible") return Certificate::principal_irreducible;
  if (s == "declared") return Certificate::declared;
  throw ParseError("unknown certificate '" + std::string(s) + "'");
}

namespace {

// Index of the variable v when p = a*v + b with a, b constants, a != 0.
std::optional<std::size_t> linear_univariate(const Poly& p) {
  if (p.degree() != 1) return std::nullopt;
  auto supp = p.support();
  if (supp.size() != 1) return std::nullopt;
  return supp.front();
}

}  // namespace

PrimeIdeal::PrimeIdeal(Ideal ideal, Certificate cert) : ideal_(std::move(ideal)), cert_(cert) {
  if (ideal_.is_unit()) throw DomainError("prime ideal must be proper: " + ideal_.to_string());
  const auto& gens = ideal_.generators();
  switch (cert_) {
    case Certificate::monomial:
      for (const auto& g : gens)
        if (!(g.is_monomial() && g.degree() == 1))
          throw DomainError("monomial certificate requires variable generators, got " + g.to_string());
      break;
    case Certificate::linear_maximal: {
      const std::size_t d = ideal_.ring()->dimension();
      std::set<std::size_t> vars;
      for (const auto& g : gens) {
        auto v = linear_univariate(g);
        if (!v) throw DomainError("linear-maximal certificate requires generators t_i - c_i, got " + g.to_string());
        vars.insert(*v);
      }
      if (gens.size() != d || vars.size() != d)
        throw DomainError("linear-maximal certificate requires one generator per variable");
      break;
    }
    case Certificate::principal_irreducible:
      if (gens.size() != 1 || gens.front().is_constant())
        throw DomainError("principal-irreducible certificate requires one nonconstant generator");
      break;
    case Certificate::declared:
      break;
  }
}

PrimeIdeal PrimeIdeal::from_variables(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  std::vector<Poly> gens;
  for (auto v : vars) gens.push_back(Poly::variable(ring, v));
  return PrimeIdeal(Ideal(ring, std::move(gens)), Certificate::monomial);
}

PrimeIdeal PrimeIdeal::maximal_at(const RingPtr& ring, const std::vector<Rational>& point) {
  if (point.size() != ring->dimension()) throw DomainError("point arity does not match the ring");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < point.size(); ++i)
    gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, point[i]));
  return PrimeIdeal(Ideal(ring, std::move(gens)), Certificate::linear_maximal);
}

PrimeIdeal PrimeIdeal::principal(const Poly& generator) {
  return PrimeIdeal(Ideal(generator.ring(), {generator}), Certificate::principal_irreducible);
}

int coheight(const PrimeIdeal& p) { return dimension(p.ideal()); }

int height(const PrimeIdeal& p) { return static_cast<int>(p.ring()->dimension()) - coheight(p); }

bool prime_contained(const PrimeIdeal& p, const PrimeIdeal& q) { return is_subset(p.ideal(), q.ideal()); }

std::vector<PrimeIdeal> min_elements(const std::vector<PrimeIdeal>& family) {
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < family.size() && minimal; ++j) {
      if (i == j) continue;
      if (prime_contained(family[j], family[i]) && !(family[j] == family[i])) minimal = false;
    }
    if (!minimal) continue;
    if (std::any_of(out.begin(), out.end(), [&](const PrimeIdeal& p) { return p == family[i]; })) continue;
    out.push_back(family[i]);
  }
  return out;
}

UpClosureOf::UpClosureOf(std::vector<PrimeIdeal> antichain) {
  for (auto& p : antichain) {
    bool dup = false;
    for (const auto& q : antichain_) {
      if (q == p) {
        dup = true;
        break;
      }
      if (prime_contained(q, p) || prime_contained(p, q))
        throw DomainError("up-closure generators must form an antichain: " + q.to_string() + " and " +
                          p.to_string() + " are comparable");
    }
    if (!dup) antichain_.push_back(std::move(p));
  }
}

bool z_contains(const SpecSubset& Z, const PrimeIdeal& p) {
  if (const auto* c = std::get_if<CoheightAtMost>(&Z)) return coheight(p) <= c->bound;
  const auto& up = std::get<UpClosureOf>(Z);
  return std::any_of(up.antichain().begin(), up.antichain().end(),
                     [&p](const PrimeIdeal& a) { return prime_contained(a, p); });
}

std::string to_string(const SpecSubset& Z) {
  if (const auto* c = std::get_if<CoheightAtMost>(&Z)) return "Z<=" + std::to_string(c->bound);
  std::string s = "up(";
  const auto& a = std::get<UpClosureOf>(Z).antichain();
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].to_string();
  return s + ")";
}

}  // namespace hcs
