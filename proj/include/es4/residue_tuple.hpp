//===----------------------------------------------------------------------===//
// Part of es4, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
//
// Exact arithmetic on the discrete torus of order D: tuples of residues with
// zero entry sum mod D. A primitive tuple is the generator of a cyclic lattice
// simplex; the equivalence class of the simplex is the orbit of the tuple
// under entry permutations and multiplication by units mod D.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "es4/numtheory.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace es4 {

/// A length-(d+1) vector of residues mod D with zero entry sum. Entries are
/// stored as least nonnegative residues. Immutable after construction.
class ResidueTuple {
public:
  /// Reduces raw entries mod D and validates the zero-sum invariant.
  /// Throws std::invalid_argument on wrong length (< 2 entries) or nonzero sum.
  static ResidueTuple make(Int modulus, std::span<const Int> raw);
  static ResidueTuple make(Int modulus, std::initializer_list<Int> raw);

  Int modulus() const { return modulus_; }
  const std::vector<Int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Ambient dimension d (= size - 1).
  int dimension() const { return static_cast<int>(entries_.size()) - 1; }

  friend bool operator==(const ResidueTuple&, const ResidueTuple&) = default;
  friend auto operator<=>(const ResidueTuple&, const ResidueTuple&) = default;

private:
  ResidueTuple(Int m, std::vector<Int> e) : modulus_(m), entries_(std::move(e)) {}

  Int modulus_;
  std::vector<Int> entries_;
};

/// True iff gcd(entries, D) = 1, i.e. the tuple generates a cyclic subgroup of
/// full order D. The all-zero tuple at D = 1 counts as primitive.
bool is_primitive(const ResidueTuple& t);

/// A ResidueTuple known to be the canonical representative of its class:
/// the lexicographically smallest ascending-sorted vector among all unit
/// multiples. Only canonical_form() creates these; usable as an exact set key.
class CanonicalTuple {
public:
  const ResidueTuple& tuple() const { return tuple_; }
  Int modulus() const { return tuple_.modulus(); }
  const std::vector<Int>& entries() const { return tuple_.entries(); }

  friend bool operator==(const CanonicalTuple&, const CanonicalTuple&) = default;
  friend auto operator<=>(const CanonicalTuple&, const CanonicalTuple&) = default;

private:
  friend CanonicalTuple canonical_form(const ResidueTuple&);
  friend CanonicalTuple parse_canonical(std::string_view);
  explicit CanonicalTuple(ResidueTuple t) : tuple_(std::move(t)) {}

  ResidueTuple tuple_;
};

/// Canonical representative of the orbit of t under permutations and unit
/// scaling. Sorting absorbs the permutations; the unit loop costs at most
/// phi(D) sorts of d+1 elements. Requires a primitive tuple.
CanonicalTuple canonical_form(const ResidueTuple& t);

/// True iff t1 and t2 generate equivalent simplices (identical canonical
/// forms). Requires equal moduli and primitivity of both.
bool equivalent(const ResidueTuple& t1, const ResidueTuple& t2);

/// The full orbit { permute(c * t) : permutation, unit c }, sorted and
/// deduplicated. Size divides (d+1)! * phi(D).
std::vector<ResidueTuple> orbit(const ResidueTuple& t);

/// Reduction mod a divisor a of the modulus (the natural map T_D -> T_a).
ResidueTuple relax(const ResidueTuple& t, Int a);

/// Chinese-remainder combination b*ta + a*tb of primitive tuples with coprime
/// moduli a, b; the result is a primitive tuple mod a*b whose relaxations are
/// unit multiples of the inputs.
ResidueTuple crt_combine(const ResidueTuple& ta, const ResidueTuple& tb);

/// Fixed text rendering "D:e0 e1 ... ed", e.g. "101:1 36 84 87 95".
std::string render(const ResidueTuple& t);
std::string render(const CanonicalTuple& t);

/// Inverse of render(). Throws std::invalid_argument on malformed input.
ResidueTuple parse_tuple(std::string_view text);

/// Parses a rendering that is trusted to be canonical (store files).
/// Throws if the parsed tuple is not equal to its own canonical form.
CanonicalTuple parse_canonical(std::string_view text);

} // namespace es4
