#include "hjscc/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hjscc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DistortionMatrix DistortionMatrix::validated(
    const std::vector<std::vector<double>>& table) {
  if (table.empty() || table[0].empty())
    raise(errc::invalid_argument, "distortion matrix must be nonempty");
  const std::size_t cols = table[0].size();
  std::vector<double> v;
  v.reserve(table.size() * cols);
  for (const auto& row : table) {
    if (row.size() != cols) raise(errc::dim_mismatch, "ragged distortion matrix");
    for (double d : row) {
      if (!std::isfinite(d)) raise(errc::non_finite, "distortion entry not finite");
      if (d < 0.0) raise(errc::invalid_argument, "distortion entry below zero");
      v.push_back(d);
    }
  }
  return DistortionMatrix(table.size(), cols, std::move(v));
}

DistortionMatrix DistortionMatrix::hamming(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0)
    raise(errc::invalid_argument, "distortion matrix must be nonempty");
  std::vector<double> v(n * m, 1.0);
  for (std::size_t i = 0; i < std::min(n, m); ++i) v[i * m + i] = 0.0;
  return DistortionMatrix(n, m, std::move(v));
}

double DistortionMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    raise(errc::index_out_of_range, "distortion index");
  return v_[i * cols_ + j];
}

double DistortionMatrix::max_value() const {
  return *std::max_element(v_.begin(), v_.end());
}

DistortionSpec DistortionSpec::validated(DistortionMatrix d_s,
                                         DistortionMatrix d_x,
                                         double threshold_s,
                                         double threshold_x) {
  if (!(threshold_s >= 0.0) || !(threshold_x >= 0.0) ||
      !std::isfinite(threshold_s) || !std::isfinite(threshold_x))
    raise(errc::invalid_argument, "thresholds must be finite and nonnegative");
  return DistortionSpec{std::move(d_s), std::move(d_x), threshold_s,
                        threshold_x};
}

RelaxationFunction RelaxationFunction::linear(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
    raise(errc::invalid_argument, "linear coefficients must be finite and >= 0");
  if (a == 0.0 && b == 0.0)
    raise(errc::invalid_argument, "linear coefficients cannot both be zero");
  return RelaxationFunction(Kind::linear, a, b, {});
}

RelaxationFunction RelaxationFunction::max_normalized() {
  return RelaxationFunction(Kind::max_normalized, 0.0, 0.0, {});
}

RelaxationFunction RelaxationFunction::custom_table(
    std::vector<TableEntry> entries) {
  if (entries.empty())
    raise(errc::invalid_argument, "custom table must be nonempty");
  for (const auto& e : entries)
    if (!std::isfinite(e.ds) || !std::isfinite(e.dx) || !std::isfinite(e.value) ||
        e.ds < 0.0 || e.dx < 0.0)
      raise(errc::invalid_argument, "custom table entries must be finite, d >= 0");
  // Exhaustive pairwise monotonicity check over the tabulated pairs.
  for (const auto& lo : entries)
    for (const auto& hi : entries)
      if (lo.ds <= hi.ds && lo.dx <= hi.dx && lo.value > hi.value)
        raise(errc::non_monotone_table,
              "decreasing pair in custom relaxation table");
  return RelaxationFunction(Kind::custom_table, 0.0, 0.0, std::move(entries));
}

double RelaxationFunction::evaluate(double ds, double dx,
                                    const DistortionSpec& spec) const {
  switch (kind_) {
    case Kind::linear:
      return a_ * ds + b_ * dx;
    case Kind::max_normalized: {
      // Zero threshold with zero distortion contributes 0; zero threshold
      // with positive distortion is the DegenerateThreshold case, reported
      // as an infinite relaxed distortion.
      auto ratio = [](double d, double t) {
        if (t > 0.0) return d / t;
        return d == 0.0 ? 0.0 : kInf;
      };
      return std::max(ratio(ds, spec.threshold_s), ratio(dx, spec.threshold_x));
    }
    case Kind::custom_table: {
      for (const auto& e : table_)
        if (e.ds == ds && e.dx == dx) return e.value;
      raise(errc::value_out_of_range,
            "relaxation table has no entry for the requested pair");
    }
  }
  raise(errc::internal, "unknown relaxation kind");
}

double RelaxationFunction::threshold(const DistortionSpec& spec) const {
  switch (kind_) {
    case Kind::linear:
      return a_ * spec.threshold_s + b_ * spec.threshold_x;
    case Kind::max_normalized:
      return 1.0;
    case Kind::custom_table: {
      // Tightest sound threshold: the largest tabulated value among pairs
      // dominated by (D_s, D_x). Monotonicity then gives
      // {d~ > D~} inside the excess event.
      double best = 0.0;
      for (const auto& e : table_)
        if (e.ds <= spec.threshold_s && e.dx <= spec.threshold_x)
          best = std::max(best, e.value);
      return best;
    }
  }
  raise(errc::internal, "unknown relaxation kind");
}

std::string RelaxationFunction::label() const {
  switch (kind_) {
    case Kind::linear: {
      std::ostringstream os;
      os << "linear(" << a_ << ";" << b_ << ")";
      return os.str();
    }
    case Kind::max_normalized:
      return "max_normalized";
    case Kind::custom_table:
      return "custom_table";
  }
  return "unknown";
}

bool excess_indicator(const DistortionSpec& spec, std::size_t s, std::size_t x,
                      std::size_t shat, std::size_t xhat) {
  return spec.d_s.at(s, shat) > spec.threshold_s ||
         spec.d_x.at(x, xhat) > spec.threshold_x;
}

double ball_probability(const Pmf& p_xhat, const DistortionSpec& spec,
                        std::size_t x) {
  if (x >= spec.x_size()) raise(errc::index_out_of_range, "ball center");
  if (p_xhat.size() != spec.xhat_size())
    raise(errc::dim_mismatch, "reproduction pmf size");
  double mass = 0.0;
  for (std::size_t xhat = 0; xhat < p_xhat.size(); ++xhat)
    if (spec.d_x(x, xhat) <= spec.threshold_x) mass += p_xhat[xhat];
  return std::min(mass, 1.0);
}

double relaxed_distortion(const RelaxationFunction& r, const DistortionSpec& spec,
                          std::size_t s, std::size_t x, std::size_t shat,
                          std::size_t xhat) {
  return r.evaluate(spec.d_s.at(s, shat), spec.d_x.at(x, xhat), spec);
}

double relaxed_threshold(const RelaxationFunction& r,
                         const DistortionSpec& spec) {
  return r.threshold(spec);
}

}  // namespace hjscc
