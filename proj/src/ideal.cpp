#include "hcs/ideal.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

#include "hcs/groebner.hpp"

namespace hcs {

namespace {

// Not a valid identifier for the text grammar, so it never clashes with a
// user variable.
const std::string kAux = "@w";

std::vector<Poly> nonzero(std::vector<Poly> gens) {
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
  return gens;
}

}  // namespace

struct Ideal::Cache {
  std::mutex mu;
  std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Poly>>>> entries;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), gens_(nonzero(std::move(generators))), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) require_same_ring(ring_, g.ring(), "ideal");
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Poly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const std::vector<Poly>& Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mu);
    for (const auto& [o, gb] : cache_->entries)
      if (o == order) return *gb;
  }
  // Computed outside the lock; racing writers produce identical bases and
  // the first one wins.
  auto gb = std::make_shared<const std::vector<Poly>>(reduced_groebner_basis(gens_, order));
  std::lock_guard lock(cache_->mu);
  for (const auto& [o, existing] : cache_->entries)
    if (o == order) return *existing;
  cache_->entries.emplace_back(order, gb);
  return *cache_->entries.back().second;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  const auto& gb = groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Poly& p) { return p.is_monomial(); });
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.terms().front().monomial);
  return out;
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "{";
  const auto& gb = groebner_basis();
  for (std::size_t i = 0; i < gb.size(); ++i) os << (i ? ", " : "") << gb[i].to_string();
  os << "}";
  return os.str();
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.groebner_basis() == b.groebner_basis();
}

const std::vector<Poly>& groebner_basis(const Ideal& I, const MonomialOrder& order) {
  return I.groebner_basis(order);
}

Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& order) {
  require_same_ring(f.ring(), I.ring(), "normal_form");
  return reduce_fully(f, I.groebner_basis(order), order);
}

bool contains(const Ideal& I, const Poly& f) { return normal_form(f, I).is_zero(); }

bool is_subset(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal inclusion");
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&J](const Poly& g) { return contains(J, g); });
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_product");
  std::vector<Poly> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned k) {
  Ideal result = Ideal::unit(I.ring());
  for (unsigned i = 0; i < k; ++i) result = ideal_product(result, I);
  return result;
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_intersection");
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;

  RingPtr ext = ring->with_leading_variable(kAux);
  Poly w = Poly::variable(ext, 0);
  Poly one_minus_w = Poly::constant(ext, 1) - w;
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) gens.push_back(w * f.lifted(ext, 1));
  for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.lifted(ext, 1));

  std::vector<Poly> out;
  for (const auto& g : reduced_groebner_basis(gens, MonomialOrder::block(1)))
    if (g.degree_in(0) <= 0) out.push_back(g.dropped(ring, 1));
  return Ideal(ring, std::move(out));
}

Ideal ideal_intersection(std::span<const Ideal> family) {
  if (family.empty()) throw DomainError("intersection of an empty family");
  Ideal acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = ideal_intersection(acc, family[i]);
  return acc;
}

Ideal ideal_quotient(const Ideal& I, const Poly& f) {
  require_same_ring(I.ring(), f.ring(), "ideal_quotient");
  if (f.is_zero()) throw DomainError("ideal_quotient: colon by the zero polynomial");
  if (contains(I, f)) return Ideal::unit(I.ring());
  Ideal meet = ideal_intersection(I, Ideal(I.ring(), {f}));
  std::vector<Poly> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_quotient");
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::vector<Ideal> parts;
  for (const auto& g : J.groebner_basis()) parts.push_back(ideal_quotient(I, g));
  return ideal_intersection(parts);
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  while (true) {
    Ideal next = ideal_quotient(current, J);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_comaximal(const Ideal& I, const Ideal& J) { return ideal_sum(I, J).is_unit(); }

bool radical_membership(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "radical_membership");
  if (f.is_zero()) return true;
  RingPtr ext = I.ring()->with_leading_variable(kAux);
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.lifted(ext, 1));
  gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, 0) * f.lifted(ext, 1));
  return Ideal(ext, std::move(gens)).is_unit();
}

int dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  const std::size_t d = I.ring()->dimension();
  if (d > 24) throw DomainError("dimension: too many variables for subset enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& m : I.leading_monomials()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (m[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint32_t m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> vector_space_dimension(const Ideal& I) {
  const int dim = dimension(I);
  if (dim < 0) return 0;
  if (dim > 0) return std::nullopt;
  const std::size_t d = I.ring()->dimension();
  auto lms = I.leading_monomials();
  // Zero-dimensional: every variable has a pure power among the leading
  // monomials, which bounds the staircase.
  std::vector<Monomial::Exponent> bound(d, 0);
  for (const auto& m : lms) {
    if (m.support_size() != 1) continue;
    for (std::size_t i = 0; i < d; ++i)
      if (m[i] > 0 && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
  }
  std::size_t count = 0;
  Monomial m(d);
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == d) {
      if (std::none_of(lms.begin(), lms.end(), [&m](const Monomial& lm) { return lm.divides(m); })) ++count;
      return;
    }
    for (Monomial::Exponent e = 0; e < bound[var]; ++e) {
      m[var] = e;
      self(self, var + 1);
    }
    m[var] = 0;
  };
  walk(walk, 0);
  return count;
}

Ideal apply(const Substitution& sigma, const Ideal& I) {
  require_same_ring(sigma.ring(), I.ring(), "apply substitution");
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(sigma.apply(g));
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace hcs
