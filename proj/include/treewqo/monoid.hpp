#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treewqo {

// Multiplication table of a finite monoid over elements 0..size-1.
// table[a*size+b] = a*b; row index is the left factor.
struct FiniteMonoid {
  int size = 0;
  int identity = 0;
  std::vector<int> table;
  std::vector<std::string> names;  // optional; filled with e0,e1,... when absent

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }

  bool is_idempotent(int a) const { return mul(a, a) == a; }

  // Left-to-right product; empty range yields the identity.
  int product(std::span<const int> xs) const {
    int acc = identity;
    for (int x : xs) acc = mul(acc, x);
    return acc;
  }

  const std::string& name_of(int a) const { return names[static_cast<std::size_t>(a)]; }
  std::optional<int> element_by_name(const std::string& n) const;

  // Checks table shape, identity laws and full associativity.  Size is capped
  // at 64 elements, which keeps the cubic associativity sweep at desk scale.
  // Throws std::invalid_argument naming the first failing law instance.
  void validate() const;

  void ensure_names();
};

// Maps alphabet symbols (by position) into a monoid.
struct Morphism {
  std::vector<std::string> alphabet;
  std::vector<int> image;  // image[i] = element for alphabet[i]
  FiniteMonoid monoid;

  void validate() const;
  std::optional<int> symbol_index(const std::string& s) const;

  // Product of the images of a word, left to right.
  int apply(std::span<const int> word) const;
};

// Convenience constructors used across tests and corpus generation.
FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_monoid(int n);
// {1, a_1..a_m} with x*y = x for non-identity x; every element idempotent.
FiniteMonoid left_zero_monoid(int m);
// {1, 0} with 0 absorbing.
FiniteMonoid annihilator_monoid();
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);
// Words over an alphabet of `letters` generators truncated to their first
// `keep` letters; identity is the empty word.
FiniteMonoid truncation_monoid(int letters, int keep);

}  // namespace treewqo
