#ifndef LND_RING_HPP
#define LND_RING_HPP

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/errors.hpp"

namespace lnd {

using Exponent = std::uint32_t;

/// Exponent vector, one entry per ring variable.
using Monomial = boost::container::small_vector<Exponent, 8>;

/// Default bound on any single exponent.
inline constexpr unsigned long kDefaultExponentCap = 1ul << 16;

inline bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

/// Polynomial ring k[v1, ..., vn] over the rationals: an ordered list of
/// variable names and an optional positive weight per variable.
///
/// Rings are cheap to copy (shared immutable storage). Two rings are equal
/// when they have the same variable names in the same order and the same
/// grading.
class Ring {
 public:
  Ring() : data_(std::make_shared<const Data>()) {}

  explicit Ring(std::vector<std::string> vars,
                std::optional<std::vector<std::int64_t>> weights = std::nullopt,
                unsigned long exponent_cap = kDefaultExponentCap) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!is_identifier(vars[i])) throw InvalidRing("invalid variable name '" + vars[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (vars[i] == vars[j]) throw InvalidRing("duplicate variable '" + vars[i] + "'");
    }
    if (weights) {
      if (weights->size() != vars.size())
        throw InvalidRing("weight count " + std::to_string(weights->size()) +
                          " does not match variable count " + std::to_string(vars.size()));
      for (auto w : *weights)
        if (w <= 0) throw InvalidRing("weights must be positive");
    }
    if (exponent_cap == 0) throw InvalidRing("exponent cap must be positive");
    data_ = std::make_shared<const Data>(Data{std::move(vars), std::move(weights), exponent_cap});
  }

  std::size_t size() const noexcept { return data_->vars.size(); }
  const std::vector<std::string>& variables() const noexcept { return data_->vars; }
  const std::string& name(std::size_t i) const { return data_->vars.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    const auto& v = data_->vars;
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  bool graded() const noexcept { return data_->weights.has_value(); }
  const std::optional<std::vector<std::int64_t>>& weights() const noexcept { return data_->weights; }
  unsigned long exponent_cap() const noexcept { return data_->exponent_cap; }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->vars == b.data_->vars && a.data_->weights == b.data_->weights;
  }

  std::string to_string() const {
    std::string out = "k[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += name(i);
    }
    return out + "]";
  }

 private:
  struct Data {
    std::vector<std::string> vars;
    std::optional<std::vector<std::int64_t>> weights;
    unsigned long exponent_cap = kDefaultExponentCap;
  };
  std::shared_ptr<const Data> data_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch(a.to_string() + " vs " + b.to_string());
}

// --- monomial helpers ---------------------------------------------------

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial multiply(const Monomial& a, const Monomial& b, unsigned long cap) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > cap) throw ExponentOverflow(cap);
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

/// a / b; requires divides(b, a).
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// Graded-lexicographic comparison: total degree first, then the first
/// variable (in ring order) with differing exponent decides.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

/// Storage order of polynomial terms: largest monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace lnd

#endif  // LND_RING_HPP
