#include "ipclab/offspring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "ipclab/errors.hpp"
#include "ipclab/special.hpp"

namespace ipclab {
namespace detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kMaxDraw = std::numeric_limits<std::uint64_t>::max();

// Head length of the tilted-moment series; beyond it the power tail is summed
// analytically. Large enough that the analytic continuation error is far
// below the fixed-point tolerances downstream.
constexpr std::uint64_t kHeadLen = 10000;

std::uint64_t saturating_index(double x) {
  if (!(x < 1.8e19)) return kMaxDraw;
  return static_cast<std::uint64_t>(x);
}

}  // namespace

class OffspringImpl {
 public:
  OffspringImpl(OffspringKind kind, std::string name)
      : kind_(kind), name_(std::move(name)) {}
  virtual ~OffspringImpl() = default;

  OffspringKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double alpha() const { return alpha_; }
  double cx() const { return cx_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }
  double p_c() const { return std::isfinite(mean_) ? 1.0 / mean_ : 0.0; }
  double alpha_hat() const { return std::min(alpha_, 2.0); }

  virtual double pmf(std::uint64_t l) const = 0;
  virtual double tail(double x) const = 0;
  virtual std::uint64_t sample(RngStream& rng) const = 0;

  // Generic series engine; closed-form kinds override both entry points.
  virtual double tilted_moment(int order, double s) const;
  virtual double gf_complement(double s) const;

 protected:
  // sum_{l>m} pmf(l) l^r e^{beta l}, analytic continuation of the pmf tail.
  virtual double tail_power_sum(int r, double beta, double m) const;
  // sum_{l>m} pmf(l) (1 - e^{beta l}).
  virtual double tail_one_minus_sum(double beta, double m) const;

  const std::vector<double>& head_pmf() const;
  virtual std::uint64_t head_len() const { return kHeadLen; }

  OffspringKind kind_;
  std::string name_;
  double alpha_ = kInf;
  double cx_ = 0.0;
  double mean_ = kInf;
  double m2_ = kInf;

 private:
  mutable std::once_flag head_once_;
  mutable std::vector<double> head_;  // head_[l] = pmf(l), l = 0..head_len
};

const std::vector<double>& OffspringImpl::head_pmf() const {
  std::call_once(head_once_, [this] {
    head_.resize(head_len() + 1);
    head_[0] = 0.0;
    for (std::uint64_t l = 1; l <= head_len(); ++l) head_[l] = pmf(l);
  });
  return head_;
}

double OffspringImpl::tail_power_sum(int, double, double) const {
  throw DomainError("tail_power_sum not available for " + name_);
}

double OffspringImpl::tail_one_minus_sum(double, double) const {
  throw DomainError("tail_one_minus_sum not available for " + name_);
}

double OffspringImpl::tilted_moment(int order, double s) const {
  if (order < 0 || order > 2) throw DomainError("tilted_moment order in 0..2");
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("tilted_moment needs s in [0,1]");
  if (s == 0.0) {
    if (order == 0) return 1.0;
    double raw = order == 1 ? mean_ : m2_;
    if (!std::isfinite(raw)) {
      throw DivergenceError("raw moment of order " + std::to_string(order) +
                            " diverges for " + name_);
    }
    return raw;
  }
  if (s == 1.0) return order == 0 ? 0.0 : pmf(1);
  double z = 1.0 - s;
  double beta = std::log1p(-s);
  const std::vector<double>& head = head_pmf();
  std::uint64_t m = head.size() - 1;
  // exponent of z is l for order 0 and l-1 for orders 1 and 2
  int shift = order == 0 ? 0 : 1;
  double acc = 0.0;
  double zp = shift == 0 ? z : 1.0;
  for (std::uint64_t l = 1; l <= m; ++l) {
    double lw = 1.0;
    if (order == 1) {
      lw = static_cast<double>(l);
    } else if (order == 2) {
      lw = static_cast<double>(l) * static_cast<double>(l);
    }
    acc += head[l] * lw * zp;
    if ((l & 511u) == 0u) {
      zp = std::pow(z, static_cast<double>(l + 1 - shift));
    } else {
      zp *= z;
    }
    if (zp < 1e-300) return acc;
  }
  double tail = tail_power_sum(order, beta, static_cast<double>(m));
  if (tail > 0.0) acc += shift == 0 ? tail : tail / z;
  return acc;
}

double OffspringImpl::gf_complement(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("gf_complement needs s in [0,1]");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 1.0;
  double z = 1.0 - s;
  double beta = std::log1p(-s);
  const std::vector<double>& head = head_pmf();
  std::uint64_t m = head.size() - 1;
  double acc = 0.0;
  double zp = z;    // z^l
  double cl = s;    // 1 - z^l, built from positive increments
  for (std::uint64_t l = 1; l <= m; ++l) {
    acc += head[l] * cl;
    cl += zp * s;
    if ((l & 511u) == 0u) {
      zp = std::pow(z, static_cast<double>(l + 1));
      cl = -std::expm1(beta * static_cast<double>(l + 1));
    } else {
      zp *= z;
    }
  }
  return acc + tail_one_minus_sum(beta, static_cast<double>(m));
}

namespace {

// ---------------------------------------------------------------- Constant

class ConstantImpl final : public OffspringImpl {
 public:
  explicit ConstantImpl(std::uint64_t d)
      : OffspringImpl(OffspringKind::Constant,
                      "constant:d=" + std::to_string(d)),
        d_(d) {
    mean_ = static_cast<double>(d);
    m2_ = mean_ * mean_;
  }

  double pmf(std::uint64_t l) const override { return l == d_ ? 1.0 : 0.0; }
  double tail(double x) const override {
    return x < static_cast<double>(d_) ? 1.0 : 0.0;
  }
  std::uint64_t sample(RngStream&) const override { return d_; }

  double tilted_moment(int order, double s) const override {
    if (order < 0 || order > 2) throw DomainError("tilted_moment order in 0..2");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("tilted_moment needs s in [0,1]");
    double z = 1.0 - s;
    double d = static_cast<double>(d_);
    if (order == 0) return std::pow(z, d);
    double base = std::pow(z, d - 1.0);
    return order == 1 ? d * base : d * d * base;
  }

  double gf_complement(double s) const override {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("gf_complement needs s in [0,1]");
    if (s == 1.0) return 1.0;
    return -std::expm1(static_cast<double>(d_) * std::log1p(-s));
  }

 private:
  std::uint64_t d_;
};

// ------------------------------------------------------- ShiftedGeometric

class ShiftedGeomImpl final : public OffspringImpl {
 public:
  explicit ShiftedGeomImpl(double q)
      : OffspringImpl(OffspringKind::ShiftedGeometric, make_name(q)), q_(q) {
    mean_ = 1.0 / q;
    m2_ = (2.0 - q) / (q * q);
  }

  double pmf(std::uint64_t l) const override {
    if (l == 0) return 0.0;
    return q_ * std::pow(1.0 - q_, static_cast<double>(l - 1));
  }
  double tail(double x) const override {
    if (x < 1.0) return x < 0.0 ? 1.0 : (x < 1.0 ? 1.0 - 0.0 : 0.0) - 0.0;
    return std::pow(1.0 - q_, std::floor(x));
  }
  std::uint64_t sample(RngStream& rng) const override {
    if (q_ >= 1.0) return 1;
    double u = rng.uniform_pos();
    double g = std::floor(std::log(u) / std::log1p(-q_));
    return 1 + saturating_index(g);
  }

  double tilted_moment(int order, double s) const override {
    if (order < 0 || order > 2) throw DomainError("tilted_moment order in 0..2");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("tilted_moment needs s in [0,1]");
    double z = 1.0 - s;
    double den = 1.0 - (1.0 - q_) * z;
    if (order == 0) return q_ * z / den;
    double g1 = q_ / (den * den);
    if (order == 1) return g1;
    return g1 + z * 2.0 * q_ * (1.0 - q_) / (den * den * den);
  }

  double gf_complement(double s) const override {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("gf_complement needs s in [0,1]");
    return s / (q_ + s * (1.0 - q_));
  }

 private:
  static std::string make_name(double q) {
    std::ostringstream os;
    os << "geom1:q=" << q;
    return os.str();
  }
  double q_;
};

// ------------------------------------------------------------------ Sibuya

class SibuyaImpl final : public OffspringImpl {
 public:
  explicit SibuyaImpl(double alpha)
      : OffspringImpl(OffspringKind::Sibuya, make_name(alpha)) {
    alpha_ = alpha;
    cx_ = 1.0 / std::tgamma(1.0 - alpha);
  }

  double pmf(std::uint64_t l) const override {
    if (l == 0) return 0.0;
    double a = alpha_;
    if (l <= 2048) {
      double p = a;
      for (std::uint64_t j = 1; j < l; ++j) {
        p *= (static_cast<double>(j) - a) / static_cast<double>(j + 1);
      }
      return p;
    }
    // p_l = (alpha / l) * T_{l-1} with T in gamma form
    double ld = static_cast<double>(l);
    return a / ld *
           std::exp(std::lgamma(ld - a) - std::lgamma(1.0 - a) -
                    std::lgamma(ld));
  }

  double tail(double x) const override {
    if (x < 1.0) return 1.0;
    std::uint64_t l = static_cast<std::uint64_t>(std::floor(x));
    double a = alpha_;
    if (l <= 2048) {
      double t = 1.0;
      for (std::uint64_t j = 1; j <= l; ++j) {
        t *= (static_cast<double>(j) - a) / static_cast<double>(j);
      }
      return t;
    }
    double ld = static_cast<double>(l);
    return std::exp(std::lgamma(ld + 1.0 - a) - std::lgamma(1.0 - a) -
                    std::lgamma(ld + 1.0));
  }

  std::uint64_t sample(RngStream& rng) const override {
    // Theta ~ Beta(alpha, 1-alpha) by Johnk's rejection, then a geometric
    // round: X = 1 + floor(log U / log(1 - Theta)).
    double a = alpha_;
    double theta;
    for (;;) {
      double x = std::pow(rng.uniform_pos(), 1.0 / a);
      double y = std::pow(rng.uniform_pos(), 1.0 / (1.0 - a));
      if (x + y <= 1.0 && x + y > 0.0) {
        theta = x / (x + y);
        break;
      }
    }
    double g = std::floor(std::log(rng.uniform_pos()) / std::log1p(-theta));
    return 1 + saturating_index(g);
  }

  double tilted_moment(int order, double s) const override {
    if (order < 0 || order > 2) throw DomainError("tilted_moment order in 0..2");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("tilted_moment needs s in [0,1]");
    double a = alpha_;
    if (s == 0.0) {
      if (order == 0) return 1.0;
      throw DivergenceError("Sibuya raw moments diverge");
    }
    if (order == 0) return 1.0 - std::pow(s, a);
    double g1 = a * std::pow(s, a - 1.0);
    if (order == 1) return g1;
    return g1 + (1.0 - s) * a * (1.0 - a) * std::pow(s, a - 2.0);
  }

  double gf_complement(double s) const override {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("gf_complement needs s in [0,1]");
    return std::pow(s, alpha_);
  }

 private:
  static std::string make_name(double a) {
    std::ostringstream os;
    os << "sibuya:alpha=" << a;
    return os.str();
  }
};

// -------------------------------------------------------------------- Zeta

class ZetaImpl final : public OffspringImpl {
 public:
  explicit ZetaImpl(double alpha)
      : OffspringImpl(OffspringKind::Zeta, make_name(alpha)) {
    alpha_ = alpha;
    zeta_norm_ = riemann_zeta(alpha + 1.0);
    cx_ = 1.0 / (alpha * zeta_norm_);
    mean_ = alpha > 1.0 ? riemann_zeta(alpha) / zeta_norm_ : kInf;
    m2_ = alpha > 2.0 ? riemann_zeta(alpha - 1.0) / zeta_norm_ : kInf;
  }

  double pmf(std::uint64_t l) const override {
    if (l == 0) return 0.0;
    return std::pow(static_cast<double>(l), -(alpha_ + 1.0)) / zeta_norm_;
  }

  double tail(double x) const override {
    if (x < 1.0) return 1.0;
    double l = std::floor(x);
    return hurwitz_zeta(alpha_ + 1.0, l + 1.0) / zeta_norm_;
  }

  std::uint64_t sample(RngStream& rng) const override {
    const std::vector<double>& cdf = sampler_cdf();
    double u = rng.uniform01();
    if (u < cdf.back()) {
      auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
      return static_cast<std::uint64_t>(it - cdf.begin()) + 1;
    }
    // Pareto inversion of the asymptotic tail beyond the table.
    double v = 1.0 - u;
    if (v <= 0.0) return kMaxDraw;
    double x = std::pow(cx_ / v, 1.0 / alpha_);
    return saturating_index(std::floor(x)) + 1;
  }

 protected:
  double tail_power_sum(int r, double beta, double m) const override {
    return power_tail_exp_sum(static_cast<double>(r) - alpha_, beta, m) /
           zeta_norm_;
  }
  double tail_one_minus_sum(double beta, double m) const override {
    return power_tail_one_minus_exp_sum(-alpha_, beta, m) / zeta_norm_;
  }

 private:
  static std::string make_name(double a) {
    std::ostringstream os;
    os << "zeta:alpha=" << a;
    return os.str();
  }

  const std::vector<double>& sampler_cdf() const {
    std::call_once(cdf_once_, [this] {
      cdf_.reserve(1 << 16);
      double acc = 0.0;
      for (std::uint64_t l = 1; l <= 1000000; ++l) {
        acc += pmf(l);
        cdf_.push_back(acc);
        if (1.0 - acc < 1e-16) break;
      }
    });
    return cdf_;
  }

  double zeta_norm_;
  mutable std::once_flag cdf_once_;
  mutable std::vector<double> cdf_;
};

// ------------------------------------------------------------------- Table

class TableImpl final : public OffspringImpl {
 public:
  TableImpl(std::vector<double> head, double alpha, double cx,
            const std::string& path)
      : OffspringImpl(OffspringKind::Table, "table:path=" + path),
        probs_(std::move(head)) {
    alpha_ = alpha;
    cx_ = cx;
    cutoff_ = probs_.size() - 1;
    double mass = 0.0;
    for (double p : probs_) mass += p;
    tail_at_cutoff_ = 1.0 - mass;
    if (tail_at_cutoff_ < -1e-10) {
      throw ConfigError("table pmf mass exceeds 1 by " +
                        std::to_string(-tail_at_cutoff_));
    }
    tail_at_cutoff_ = std::max(tail_at_cutoff_, 0.0);
    double annotated = cx * std::pow(static_cast<double>(cutoff_), -alpha);
    if (std::fabs(annotated - tail_at_cutoff_) >
        1e-3 * (annotated + tail_at_cutoff_) + 1e-12) {
      throw ConfigError("table tail annotation inconsistent with pmf mass: " +
                        std::to_string(annotated) + " vs " +
                        std::to_string(tail_at_cutoff_));
    }
    // Scale so the continued tail carries exactly the leftover mass.
    kt_ = tail_at_cutoff_ * std::pow(static_cast<double>(cutoff_), alpha);
    double lc = static_cast<double>(cutoff_);
    if (alpha > 1.0) {
      double mh = 0.0;
      for (std::uint64_t l = 1; l <= cutoff_; ++l) {
        mh += static_cast<double>(l) * probs_[l];
      }
      mean_ = mh + (lc + 1.0) * tail_at_cutoff_ +
              kt_ * hurwitz_zeta(alpha, lc + 1.0);
    }
    if (alpha > 2.0) {
      double m2h = 0.0;
      for (std::uint64_t l = 1; l <= cutoff_; ++l) {
        m2h += static_cast<double>(l) * static_cast<double>(l) * probs_[l];
      }
      m2_ = m2h + (lc + 1.0) * (lc + 1.0) * tail_at_cutoff_ +
            2.0 * kt_ * hurwitz_zeta(alpha - 1.0, lc + 1.0) +
            kt_ * hurwitz_zeta(alpha, lc + 1.0);
    }
    cdf_.resize(cutoff_ + 1);
    double acc = 0.0;
    for (std::uint64_t l = 0; l <= cutoff_; ++l) {
      acc += probs_[l];
      cdf_[l] = acc;
    }
  }

  double pmf(std::uint64_t l) const override {
    if (l == 0) return 0.0;
    if (l <= cutoff_) return probs_[l];
    return power_tail(static_cast<double>(l - 1)) -
           power_tail(static_cast<double>(l));
  }

  double tail(double x) const override {
    if (x < 1.0) return 1.0;
    double l = std::floor(x);
    if (l >= static_cast<double>(cutoff_)) return power_tail(l);
    return 1.0 - cdf_[static_cast<std::uint64_t>(l)];
  }

  std::uint64_t sample(RngStream& rng) const override {
    double u = rng.uniform01();
    if (u < cdf_.back()) {
      auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
      return static_cast<std::uint64_t>(it - cdf_.begin());
    }
    double v = 1.0 - u;
    if (v <= 0.0) return kMaxDraw;
    double x = std::pow(kt_ / v, 1.0 / alpha_);
    return saturating_index(std::floor(std::max(
               x, static_cast<double>(cutoff_)))) + 1;
  }

 protected:
  std::uint64_t head_len() const override {
    return std::max<std::uint64_t>(kHeadLen, cutoff_);
  }

  // Beyond the head the pmf is kt*((l-1)^-a - l^-a); expand in 1/l so each
  // piece is a pure power sum. Three terms keep the continuation error far
  // below the solver tolerances.
  double tail_power_sum(int r, double beta, double m) const override {
    double a = alpha_;
    double c1 = static_cast<double>(r) - a;
    double s = power_tail_exp_sum(c1, beta, m) +
               (a + 1.0) / 2.0 * power_tail_exp_sum(c1 - 1.0, beta, m) +
               (a + 1.0) * (a + 2.0) / 6.0 *
                   power_tail_exp_sum(c1 - 2.0, beta, m);
    return kt_ * a * s;
  }
  double tail_one_minus_sum(double beta, double m) const override {
    double a = alpha_;
    double s = power_tail_one_minus_exp_sum(-a, beta, m) +
               (a + 1.0) / 2.0 * power_tail_one_minus_exp_sum(-a - 1.0, beta, m) +
               (a + 1.0) * (a + 2.0) / 6.0 *
                   power_tail_one_minus_exp_sum(-a - 2.0, beta, m);
    return kt_ * a * s;
  }

 private:
  double power_tail(double x) const { return kt_ * std::pow(x, -alpha_); }

  std::vector<double> probs_;  // probs_[l], l = 0..cutoff
  std::vector<double> cdf_;
  std::uint64_t cutoff_;
  double tail_at_cutoff_;
  double kt_;
};

}  // namespace

}  // namespace detail

// ------------------------------------------------------------ value facade

OffspringDist::OffspringDist(std::shared_ptr<const detail::OffspringImpl> impl)
    : impl_(std::move(impl)) {}

OffspringDist OffspringDist::constant(std::uint64_t d) {
  if (d < 1) throw DomainError("constant offspring needs d >= 1");
  return OffspringDist(std::make_shared<detail::ConstantImpl>(d));
}

OffspringDist OffspringDist::shifted_geometric(double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw DomainError("shifted geometric needs q in (0,1]");
  }
  return OffspringDist(std::make_shared<detail::ShiftedGeomImpl>(q));
}

OffspringDist OffspringDist::zeta(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("zeta offspring needs alpha > 0");
  return OffspringDist(std::make_shared<detail::ZetaImpl>(alpha));
}

OffspringDist OffspringDist::sibuya(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("sibuya needs alpha in (0,1)");
  }
  return OffspringDist(std::make_shared<detail::SibuyaImpl>(alpha));
}

OffspringDist OffspringDist::from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file " + path);
  std::string line;
  double alpha = 0.0, cx = 0.0;
  bool annotated = false;
  std::vector<double> probs(1, 0.0);
  std::uint64_t expect = 1;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (line[0] == '#') {
      std::size_t ap = line.find("alpha=");
      std::size_t cp = line.find("cx=");
      if (ap != std::string::npos && cp != std::string::npos) {
        alpha = std::stod(line.substr(ap + 6));
        cx = std::stod(line.substr(cp + 3));
        annotated = true;
      }
      continue;
    }
    std::istringstream row(line);
    std::string lf, pf;
    if (!std::getline(row, lf, ',') || !std::getline(row, pf)) {
      throw ConfigError("bad table row: " + line);
    }
    std::uint64_t l = std::stoull(lf);
    double p = std::stod(pf);
    if (l != expect) throw ConfigError("table rows must be l=1,2,... in order");
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("bad probability " + pf);
    probs.push_back(p);
    ++expect;
  }
  if (!annotated) throw ConfigError("table needs '# alpha=<a> cx=<c>' header");
  if (probs.size() < 2) throw ConfigError("table has no rows");
  if (!(alpha > 0.0) || !(cx > 0.0)) {
    throw ConfigError("table annotation needs alpha > 0 and cx > 0");
  }
  return OffspringDist(
      std::make_shared<detail::TableImpl>(std::move(probs), alpha, cx, path));
}

OffspringDist OffspringDist::parse(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("bad dist spec '" + spec +
                      "', expected kind:key=value");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  std::size_t eq = rest.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("bad dist spec '" + spec + "', missing key=value");
  }
  std::string key = rest.substr(0, eq);
  std::string val = rest.substr(eq + 1);
  try {
    if (kind == "constant" && key == "d") return constant(std::stoull(val));
    if (kind == "geom1" && key == "q") return shifted_geometric(std::stod(val));
    if (kind == "zeta" && key == "alpha") return zeta(std::stod(val));
    if (kind == "sibuya" && key == "alpha") return sibuya(std::stod(val));
    if (kind == "table" && key == "path") return from_table(val);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("bad dist spec '") + spec + "': " + e.what());
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad numeric value in dist spec '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("numeric value out of range in dist spec '" + spec + "'");
  }
  throw ConfigError("unknown dist spec '" + spec +
                    "', kinds: constant:d= geom1:q= zeta:alpha= sibuya:alpha= "
                    "table:path=");
}

OffspringKind OffspringDist::kind() const { return impl_->kind(); }
const std::string& OffspringDist::name() const { return impl_->name(); }
double OffspringDist::alpha() const { return impl_->alpha(); }
double OffspringDist::cx() const { return impl_->cx(); }
double OffspringDist::mean() const { return impl_->mean(); }
double OffspringDist::m2() const { return impl_->m2(); }
double OffspringDist::p_c() const { return impl_->p_c(); }
double OffspringDist::alpha_hat() const { return impl_->alpha_hat(); }
double OffspringDist::pmf(std::uint64_t l) const { return impl_->pmf(l); }
double OffspringDist::tail(double x) const {
  if (x < 0.0) throw DomainError("tail needs x >= 0");
  return impl_->tail(x);
}
std::uint64_t OffspringDist::sample(RngStream& rng) const {
  return impl_->sample(rng);
}
double OffspringDist::tilted_moment(int order, double s) const {
  return impl_->tilted_moment(order, s);
}
double OffspringDist::gf_complement(double s) const {
  return impl_->gf_complement(s);
}

}  // namespace ipclab
