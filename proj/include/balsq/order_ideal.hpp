#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "balsq/ring.hpp"

namespace balsq {

/// A finite color-squarefree order ideal of monomials: closed under
/// divisibility, containing 1 and every variable of its signature.
/// Monomials are kept sorted by (degree, revlex).
class OrderIdeal {
 public:
  /// Divisibility closure of the seeds, plus 1 and all variables.
  /// Errors if a seed is not color-squarefree.
  static OrderIdeal from_monomials(const RingSignature& sig, const std::vector<Monomial>& seeds);

  /// Least order ideal containing the seeds that is shifted: closure under
  /// divisibility and under raising one index inside its color.
  static OrderIdeal smallest_shifted_closure(const RingSignature& sig,
                                             const std::vector<Monomial>& seeds);

  const RingSignature& signature() const { return sig_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool contains(const Monomial& m) const;

  /// Largest total degree of a member.
  int d_max() const;

  /// Replacing any variable factor by a higher index of the same color stays
  /// inside the ideal.
  bool is_shifted() const;
  /// Shifted, and replacing any variable factor by any prec-larger variable
  /// stays inside whenever the result is color-squarefree.
  bool is_shifted_across_colors() const;

  /// Member counts by total degree, index 0..d_max.
  std::vector<long long> degree_histogram() const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  OrderIdeal(RingSignature sig, std::vector<Monomial> sorted_members);
  void validate() const;

  RingSignature sig_;
  std::vector<Monomial> monomials_;
};

struct EnumerateOptions {
  enum class Mode { Auto, Exhaustive, Sample };
  Mode mode = Mode::Auto;
  /// Require is_shifted / is_shifted_across_colors when set.
  std::optional<bool> shifted;
  std::optional<bool> shifted_across_colors;
  /// Stop after this many ideals have been yielded.
  std::size_t max_count = 200;
  /// Auto mode switches to sampling above this many color-squarefree
  /// monomials; Exhaustive mode errors instead.
  std::size_t exhaustive_limit = 64;
  std::uint64_t seed = 1;
  /// Attempts per sampled ideal before giving up (sampling mode only).
  std::size_t sample_attempts = 4096;
  /// Exhaustive walk aborts with a resource error beyond this many leaves.
  std::size_t max_visited = std::size_t(1) << 22;
};

/// Streams order ideals of the signature into the callback until it returns
/// false or the cap is reached. Exhaustive mode walks every divisibility-
/// closed subset of the color-squarefree monomials (deterministic order);
/// sampling mode draws seeded random closures (deduplicated).
void enumerate_order_ideals(const RingSignature& sig, const EnumerateOptions& options,
                            const std::function<bool(const OrderIdeal&)>& yield);

/// Convenience form collecting the stream into a vector.
std::vector<OrderIdeal> enumerate_order_ideals(const RingSignature& sig,
                                               const EnumerateOptions& options = {});

}  // namespace balsq
