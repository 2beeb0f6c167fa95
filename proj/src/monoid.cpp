#include "treewqo/monoid.hpp"

#include <stdexcept>
#include <string>

namespace treewqo {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::optional<int> FiniteMonoid::element_by_name(const std::string& n) const {
  for (int i = 0; i < size; ++i) {
    if (i < static_cast<int>(names.size()) && names[static_cast<std::size_t>(i)] == n) return i;
  }
  return std::nullopt;
}

void FiniteMonoid::ensure_names() {
  if (static_cast<int>(names.size()) == size) return;
  names.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    if (names[static_cast<std::size_t>(i)].empty()) names[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
  }
}

void FiniteMonoid::validate() const {
  if (size < 1) fail("monoid: size must be positive");
  if (size > 64) fail("monoid: size exceeds the supported cap of 64 elements");
  if (identity < 0 || identity >= size) fail("monoid: identity index out of range");
  if (table.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
    fail("monoid: table must hold size*size entries");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= size)
      fail("monoid: table entry " + std::to_string(i) + " out of range");
  }
  for (int a = 0; a < size; ++a) {
    if (mul(identity, a) != a)
      fail("monoid: identity law fails on the left of element " + std::to_string(a));
    if (mul(a, identity) != a)
      fail("monoid: identity law fails on the right of element " + std::to_string(a));
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("monoid: associativity fails on (" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ")");
  if (!names.empty() && names.size() != static_cast<std::size_t>(size))
    fail("monoid: names must be empty or match size");
}

void Morphism::validate() const {
  monoid.validate();
  if (alphabet.size() != image.size()) fail("morphism: alphabet and image sizes differ");
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] >= monoid.size)
      fail("morphism: image of symbol '" + alphabet[i] + "' out of range");
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j]) fail("morphism: duplicate symbol '" + alphabet[i] + "'");
  }
}

std::optional<int> Morphism::symbol_index(const std::string& s) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == s) return static_cast<int>(i);
  return std::nullopt;
}

int Morphism::apply(std::span<const int> word) const {
  int acc = monoid.identity;
  for (int s : word) {
    if (s < 0 || s >= static_cast<int>(image.size())) fail("morphism: symbol index out of range");
    acc = monoid.mul(acc, image[static_cast<std::size_t>(s)]);
  }
  return acc;
}

FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.size = 1;
  m.identity = 0;
  m.table = {0};
  m.names = {"1"};
  return m;
}

FiniteMonoid cyclic_monoid(int n) {
  FiniteMonoid m;
  m.size = n;
  m.identity = 0;
  m.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  m.names.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.names[static_cast<std::size_t>(i)] = i == 0 ? "1" : "g" + std::to_string(i);
  return m;
}

FiniteMonoid left_zero_monoid(int k) {
  int n = k + 1;
  FiniteMonoid m;
  m.size = n;
  m.identity = 0;
  m.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.table[static_cast<std::size_t>(a) * n + b] = (a == 0) ? b : a;
  m.names.resize(static_cast<std::size_t>(n));
  m.names[0] = "1";
  for (int i = 1; i < n; ++i) m.names[static_cast<std::size_t>(i)] = std::string(1, static_cast<char>('a' + i - 1));
  return m;
}

FiniteMonoid annihilator_monoid() {
  FiniteMonoid m;
  m.size = 2;
  m.identity = 0;
  m.table = {0, 1, 1, 1};
  m.names = {"1", "0"};
  return m;
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  FiniteMonoid m;
  m.size = a.size * b.size;
  m.identity = a.identity * b.size + b.identity;
  m.table.resize(static_cast<std::size_t>(m.size) * m.size);
  for (int x = 0; x < m.size; ++x) {
    int xa = x / b.size, xb = x % b.size;
    for (int y = 0; y < m.size; ++y) {
      int ya = y / b.size, yb = y % b.size;
      m.table[static_cast<std::size_t>(x) * m.size + y] = a.mul(xa, ya) * b.size + b.mul(xb, yb);
    }
  }
  m.names.resize(static_cast<std::size_t>(m.size));
  for (int x = 0; x < m.size; ++x) {
    FiniteMonoid ca = a, cb = b;
    ca.ensure_names();
    cb.ensure_names();
    m.names[static_cast<std::size_t>(x)] =
        "(" + ca.names[static_cast<std::size_t>(x / b.size)] + "," + cb.names[static_cast<std::size_t>(x % b.size)] + ")";
  }
  return m;
}

FiniteMonoid truncation_monoid(int letters, int keep) {
  // Elements are words of length <= keep over `letters` generators, indexed in
  // length-then-lexicographic order; multiplication concatenates and truncates.
  std::vector<std::string> words{""};
  for (int len = 1; len <= keep; ++len) {
    std::size_t begin = 0;
    while (begin < words.size() && static_cast<int>(words[begin].size()) < len - 1) ++begin;
    std::vector<std::string> next;
    for (std::size_t i = begin; i < words.size(); ++i) {
      if (static_cast<int>(words[i].size()) != len - 1) continue;
      for (int c = 0; c < letters; ++c) next.push_back(words[i] + static_cast<char>('a' + c));
    }
    for (auto& w : next) words.push_back(w);
  }
  FiniteMonoid m;
  m.size = static_cast<int>(words.size());
  m.identity = 0;
  m.table.resize(static_cast<std::size_t>(m.size) * m.size);
  auto index_of = [&](const std::string& w) {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] == w) return static_cast<int>(i);
    return -1;
  };
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y) {
      std::string w = words[static_cast<std::size_t>(x)] + words[static_cast<std::size_t>(y)];
      if (static_cast<int>(w.size()) > keep) w.resize(static_cast<std::size_t>(keep));
      m.table[static_cast<std::size_t>(x) * m.size + y] = index_of(w);
    }
  m.names.resize(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) m.names[i] = words[i].empty() ? "1" : words[i];
  return m;
}

}  // namespace treewqo
