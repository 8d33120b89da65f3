#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ipclab/rng.hpp"

namespace ipclab {

namespace detail {
class OffspringImpl;
}

enum class OffspringKind { Constant, ShiftedGeometric, Zeta, Sibuya, Table };

// Offspring law X on {1, 2, ...} with a power tail P(X > x) = cx * x^{-alpha}
// (1 + o(1)) for the heavy-tailed kinds. Immutable, cheap to copy, safe to
// share across threads.
class OffspringDist {
 public:
  static OffspringDist constant(std::uint64_t d);
  static OffspringDist shifted_geometric(double q);
  static OffspringDist zeta(double alpha);
  static OffspringDist sibuya(double alpha);
  // CSV "l,prob" rows preceded by a header comment "# alpha=<a> cx=<c>"; the
  // table covers l up to its last row, beyond which the tail is the annotated
  // power law.
  static OffspringDist from_table(const std::string& path);
  // CLI grammar: constant:d=2, geom1:q=0.5, zeta:alpha=2.3, sibuya:alpha=0.5,
  // table:path=<file>.
  static OffspringDist parse(const std::string& spec);

  OffspringKind kind() const;
  const std::string& name() const;

  double alpha() const;      // tail exponent, +inf for light tails
  double cx() const;         // tail constant, 0 for light tails
  double mean() const;       // may be +inf
  double m2() const;         // E[X^2], may be +inf
  double p_c() const;        // 1/mean, 0 when the mean is infinite
  double alpha_hat() const;  // min(alpha, 2)

  double pmf(std::uint64_t l) const;
  // P(X > x) for real x >= 0.
  double tail(double x) const;
  std::uint64_t sample(RngStream& rng) const;

  // order 0: E[(1-s)^X]; order 1: E[X(1-s)^{X-1}]; order 2: E[X^2(1-s)^{X-1}].
  // Throws DivergenceError at s = 0 when the raw moment is infinite.
  double tilted_moment(int order, double s) const;
  // 1 - E[(1-s)^X], evaluated without cancellation for small s.
  double gf_complement(double s) const;

 private:
  explicit OffspringDist(std::shared_ptr<const detail::OffspringImpl> impl);
  std::shared_ptr<const detail::OffspringImpl> impl_;
};

}  // namespace ipclab
