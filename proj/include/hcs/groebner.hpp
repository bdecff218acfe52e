#pragma once

#include <span>
#include <vector>

#include "hcs/poly.hpp"

namespace hcs {

/// Reduced Groebner basis of the ideal generated by `generators`: monic,
/// no term of any element divisible by another element's leading monomial,
/// sorted by leading monomial descending under `order`. The zero ideal has
/// the empty basis; the unit ideal has basis {1}.
///
/// Buchberger's algorithm with the coprime-leading-monomial criterion,
/// the chain criterion and normal (smallest lcm first) pair selection.
std::vector<Poly> reduced_groebner_basis(std::span<const Poly> generators, const MonomialOrder& order);

/// Remainder of f after full reduction by `basis` under `order`. When
/// `basis` is a Groebner basis the result is the unique normal form.
Poly reduce_fully(const Poly& f, std::span<const Poly> basis, const MonomialOrder& order);

}  // namespace hcs
