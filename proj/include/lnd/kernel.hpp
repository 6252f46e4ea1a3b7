#ifndef LND_KERNEL_HPP
#define LND_KERNEL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/groebner.hpp"
#include "lnd/laurent.hpp"

namespace lnd {

/// The derivation extended to the localization at e's denominator variable
/// by the quotient rule.
inline LaurentElement apply_localized(const Derivation& d, const LaurentElement& e) {
  require_same_ring(d.ring(), e.ring());
  const std::size_t x = e.denom_var();
  const Exponent k = e.denom_power();
  const Polynomial dn = d(e.numerator());
  if (k == 0) return LaurentElement(dn, x, 0);
  const Polynomial dx = d.image(x);
  if (dx.is_zero()) return LaurentElement(dn, x, k);
  // (d(N) x - k N d(x)) / x^(k+1)
  const Polynomial xv = Polynomial::variable(d.ring(), x);
  return LaurentElement(dn * xv - e.numerator() * dx * Rational(static_cast<long>(k)), x, k + 1);
}

/// d(sigma) == 1 exactly. The denominator variable must be a constant of d.
inline bool verify_slice(const Derivation& d, const LaurentElement& sigma) {
  require_same_ring(d.ring(), sigma.ring());
  if (!d.image(sigma.denom_var()).is_zero()) throw DenomNotConstant(sigma.denom_name());
  const LaurentElement one(Polynomial::constant(d.ring(), Rational(1)), sigma.denom_var(), 0);
  return apply_localized(d, sigma) == one;
}

/// An element sigma of k[V]_x with d(sigma) = 1, checked on construction.
class Slice {
 public:
  static Slice make(const Derivation& d, LaurentElement sigma) {
    bool ok = false;
    try {
      ok = verify_slice(d, sigma);
    } catch (const DenomNotConstant& e) {
      throw SliceInvalid(e.what());
    }
    if (!ok) throw SliceInvalid("d(" + sigma.to_string() + ") != 1");
    return Slice(std::move(sigma));
  }

  const LaurentElement& element() const noexcept { return element_; }
  std::size_t denom_var() const noexcept { return element_.denom_var(); }

 private:
  explicit Slice(LaurentElement e) : element_(std::move(e)) {}
  LaurentElement element_;
};

/// For each ring variable g, the element sum_k d^k(g)/k! (-sigma)^k of the
/// localization. Together with 1/x these generate the localized kernel.
inline std::vector<LaurentElement> slice_kernel_generators(const Derivation& d, const Slice& slice,
                                                           unsigned cap = kDefaultNilpotencyCap) {
  const LaurentElement minus_sigma = -slice.element();
  const std::size_t x = slice.denom_var();
  std::vector<LaurentElement> out;
  for (std::size_t i = 0; i < d.ring().size(); ++i) {
    Polynomial current = Polynomial::variable(d.ring(), i);
    LaurentElement power(Polynomial::constant(d.ring(), Rational(1)), x, 0);
    LaurentElement sum(Polynomial(d.ring()), x, 0);
    for (unsigned k = 0; !current.is_zero(); ++k) {
      if (k > cap) throw CapExceeded(static_cast<int>(cap));
      sum = sum + LaurentElement(current, x, 0) * power * (Rational(1) / factorial(k));
      current = d(current);
      power = power * minus_sigma;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

enum class KernelStatus { Confirmed, NewGenerators, Inconclusive };

inline std::string to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::Confirmed: return "Confirmed";
    case KernelStatus::NewGenerators: return "NewGenerators";
    case KernelStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// One relation processed by the kernel check.
struct KernelCheckStep {
  Polynomial relation;  ///< generator P of the relation ideal, in k[X1..Xm]
  Polynomial reduced;   ///< P(candidates) / x
  std::optional<Polynomial> representation;  ///< set when `reduced` is in k[candidates]
  bool member() const noexcept { return representation.has_value(); }
};

struct KernelCheckOutcome {
  KernelStatus status = KernelStatus::Inconclusive;
  std::vector<Polynomial> new_elements;
  std::vector<KernelCheckStep> transcript;
  std::string note;  ///< reason for Inconclusive
};

struct KernelOptions {
  unsigned clearing_bound = 16;  ///< max power of x tried when clearing denominators
  unsigned nilpotency_cap = kDefaultNilpotencyCap;
};

namespace kernel_detail {

inline void require_invariant(const Derivation& d, const Polynomial& f) {
  const Polynomial df = d(f);
  if (!df.is_zero()) throw NonInvariantCandidate("d(" + to_string(f) + ") = " + to_string(df));
}

inline void check_preconditions(const Derivation& d, std::size_t loc, const Slice& slice) {
  if (loc >= d.ring().size()) throw InvalidArgument("localization variable out of range");
  if (!d.image(loc).is_zero()) throw DenomNotConstant(d.ring().name(loc));
  require_same_ring(slice.element().ring(), d.ring());
  if (slice.denom_var() != loc && !slice.element().is_polynomial())
    throw SliceInvalid("slice denominator is not the localization variable");
  bool ok = false;
  try {
    ok = verify_slice(d, slice.element());
  } catch (const DenomNotConstant& e) {
    throw SliceInvalid(e.what());
  }
  if (!ok) throw SliceInvalid("slice does not satisfy d(sigma) = 1 for this derivation");
}

inline void sort_canonical(std::vector<Polynomial>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace kernel_detail

/// Kernel check for R = k[candidates]:
///  1. every slice generator lies in R_x (so ker d is inside R_x);
///  2. relations among the candidates modulo x;
///  3. for each relation P, P(candidates)/x must lie in R;
///  4. Confirmed when all do, otherwise the non-members are returned.
inline KernelCheckOutcome kernel_check(const Derivation& d, const std::vector<Polynomial>& candidates,
                                       std::size_t loc, const Slice& slice, const KernelOptions& opts = {}) {
  kernel_detail::check_preconditions(d, loc, slice);
  if (candidates.empty()) throw InvalidArgument("kernel_check needs at least one candidate");
  for (const auto& c : candidates) {
    require_same_ring(c.ring(), d.ring());
    kernel_detail::require_invariant(d, c);
  }

  KernelCheckOutcome out;
  const Ring& ring = d.ring();
  const Polynomial xpoly = Polynomial::variable(ring, loc);
  const SubalgebraOracle oracle(candidates);

  // (1) localized sufficiency
  if (!oracle.contains(xpoly)) {
    out.note = ring.name(loc) + " is not in the candidate algebra";
    return out;
  }
  for (const auto& g : slice_kernel_generators(d, slice, opts.nilpotency_cap)) {
    Polynomial cleared = g.numerator();
    bool found = false;
    for (unsigned j = 0; j <= opts.clearing_bound && !found; ++j) {
      if (oracle.contains(cleared)) found = true;
      else cleared *= xpoly;
    }
    if (!found) {
      out.note = "slice generator " + g.to_string() + " not reached within " +
                 std::to_string(opts.clearing_bound) + " powers of " + ring.name(loc);
      return out;
    }
  }

  // (2) relations modulo x
  std::vector<Polynomial> residues;
  const Polynomial zero(ring);
  for (const auto& c : candidates) residues.push_back(substitute_variable(c, loc, zero));
  const RelationIdeal rel = relation_ideal(residues);

  // (3) P(candidates)/x in R?
  std::vector<Polynomial> missing;
  for (const auto& p : rel.generators) {
    const Polynomial value = evaluate_presentation(p, candidates);
    Polynomial reduced;
    try {
      reduced = exact_divide_by_power(value, loc, 1);
    } catch (const NotDivisible& e) {
      throw DivisionImpossible(to_string(p) + ": " + e.witness());
    }
    KernelCheckStep step{p, reduced, oracle.represent(reduced)};
    if (!step.member()) missing.push_back(primitive(reduced));
    out.transcript.push_back(std::move(step));
  }

  // (4) normalize, drop redundant ones, sort
  kernel_detail::sort_canonical(missing);
  std::vector<Polynomial> accepted;
  for (const auto& m : missing) {
    if (!accepted.empty()) {
      std::vector<Polynomial> gens = candidates;
      gens.insert(gens.end(), accepted.begin(), accepted.end());
      if (SubalgebraOracle(gens).contains(m)) continue;
    }
    kernel_detail::require_invariant(d, m);
    accepted.push_back(m);
  }
  out.new_elements = std::move(accepted);
  out.status = out.new_elements.empty() ? KernelStatus::Confirmed : KernelStatus::NewGenerators;
  return out;
}

inline KernelCheckOutcome kernel_check(const Derivation& d, const std::vector<Polynomial>& candidates,
                                       std::string_view loc, const Slice& slice, const KernelOptions& opts = {}) {
  return kernel_check(d, candidates, d.ring().index_of(loc), slice, opts);
}

struct Stabilized {
  std::vector<Polynomial> generators;  ///< irredundant generating set of the kernel
  unsigned rounds = 0;                 ///< round in which the check confirmed
  std::vector<Polynomial> candidates;  ///< final candidate list before minimizing
};

struct NonStabilized {
  std::vector<std::size_t> generator_counts;       ///< seed count, then count after each round
  std::vector<std::vector<Polynomial>> adjoined;   ///< new elements per round
  std::vector<Polynomial> candidates;              ///< candidates after the last round
};

using KernelComputeResult = std::variant<Stabilized, NonStabilized>;

/// Initial candidates: primitive numerators of the slice generators, then
/// the localization variable, duplicates and zeros dropped.
inline std::vector<Polynomial> kernel_seeds(const Derivation& d, std::size_t loc, const Slice& slice,
                                            unsigned cap = kDefaultNilpotencyCap) {
  std::vector<Polynomial> seeds;
  auto push = [&](Polynomial p) {
    p = primitive(p);
    if (p.is_zero() || std::find(seeds.begin(), seeds.end(), p) != seeds.end()) return;
    seeds.push_back(std::move(p));
  };
  for (const auto& g : slice_kernel_generators(d, slice, cap)) push(g.numerator());
  push(Polynomial::variable(d.ring(), loc));
  return seeds;
}

/// Drops generators lying in the algebra of the others, scanning from the
/// most recently adjoined.
inline std::vector<Polynomial> minimize_generators(std::vector<Polynomial> gens) {
  for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (gens[i].is_constant() || SubalgebraOracle(others).contains(gens[i])) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return gens;
}

inline bool same_subalgebra(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  const SubalgebraOracle in_a(a), in_b(b);
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& p) { return in_b.contains(p); }) &&
         std::all_of(b.begin(), b.end(), [&](const Polynomial& p) { return in_a.contains(p); });
}

/// Iterates kernel_check, adjoining new generators, until Confirmed or
/// `max_rounds` checks have run.
inline KernelComputeResult kernel_compute(const Derivation& d, std::size_t loc, const Slice& slice,
                                          unsigned max_rounds, const KernelOptions& opts = {}) {
  if (max_rounds < 1) throw InvalidArgument("max_rounds must be at least 1");
  kernel_detail::check_preconditions(d, loc, slice);
  std::vector<Polynomial> candidates = kernel_seeds(d, loc, slice, opts.nilpotency_cap);
  NonStabilized trace;
  trace.generator_counts.push_back(candidates.size());
  for (unsigned round = 1; round <= max_rounds; ++round) {
    KernelCheckOutcome outcome = kernel_check(d, candidates, loc, slice, opts);
    if (outcome.status == KernelStatus::Inconclusive)
      throw Error("kernel check inconclusive in round " + std::to_string(round) + ": " + outcome.note);
    if (outcome.status == KernelStatus::Confirmed) {
      Stabilized s{minimize_generators(candidates), round, candidates};
      if (!same_subalgebra(s.generators, s.candidates))
        throw Error("minimized generators do not span the candidate algebra");
      return s;
    }
    for (const auto& e : outcome.new_elements) kernel_detail::require_invariant(d, e);
    candidates.insert(candidates.end(), outcome.new_elements.begin(), outcome.new_elements.end());
    trace.adjoined.push_back(std::move(outcome.new_elements));
    trace.generator_counts.push_back(candidates.size());
  }
  trace.candidates = std::move(candidates);
  return trace;
}

inline KernelComputeResult kernel_compute(const Derivation& d, std::string_view loc, const Slice& slice,
                                          unsigned max_rounds, const KernelOptions& opts = {}) {
  return kernel_compute(d, d.ring().index_of(loc), slice, max_rounds, opts);
}

}  // namespace lnd

#endif  // LND_KERNEL_HPP
