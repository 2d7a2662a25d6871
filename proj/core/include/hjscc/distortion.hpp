#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hjscc/prob.hpp"

namespace hjscc {

/// Nonnegative finite matrix of per-pair distortions.
class DistortionMatrix {
 public:
  static DistortionMatrix validated(const std::vector<std::vector<double>>& table);
  static DistortionMatrix hamming(std::size_t n, std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const;
  double operator()(std::size_t i, std::size_t j) const {
    return v_[i * cols_ + j];
  }
  double max_value() const;

 private:
  DistortionMatrix(std::size_t r, std::size_t c, std::vector<double> v)
      : rows_(r), cols_(c), v_(std::move(v)) {}
  std::size_t rows_, cols_;
  std::vector<double> v_;
};

/// Distortion matrices for both reconstruction tasks plus the excess
/// thresholds. Reproduction alphabet sizes are the matrix column counts.
struct DistortionSpec {
  DistortionMatrix d_s;  // |S| x |Shat|
  DistortionMatrix d_x;  // |X| x |Xhat|
  double threshold_s = 0.0;
  double threshold_x = 0.0;

  static DistortionSpec validated(DistortionMatrix d_s, DistortionMatrix d_x,
                                  double threshold_s, double threshold_x);

  std::size_t s_size() const { return d_s.rows(); }
  std::size_t shat_size() const { return d_s.cols(); }
  std::size_t x_size() const { return d_x.rows(); }
  std::size_t xhat_size() const { return d_x.cols(); }
};

/// Monotone scalarization d(d_s, d_x) collapsing the two distortions into
/// one. Evaluation may return +infinity (the max_normalized kind with a zero
/// threshold against positive distortion); infinite values mark reproductions
/// that can never sit inside the relaxed event.
class RelaxationFunction {
 public:
  enum class Kind { linear, max_normalized, custom_table };

  struct TableEntry {
    double ds, dx, value;
  };

  static RelaxationFunction linear(double a, double b);
  static RelaxationFunction max_normalized();
  /// Table over the achievable (d_s, d_x) pairs. Monotonicity is verified by
  /// an exhaustive pairwise check; a decreasing pair is rejected.
  static RelaxationFunction custom_table(std::vector<TableEntry> entries);

  Kind kind() const { return kind_; }
  double linear_a() const { return a_; }
  double linear_b() const { return b_; }

  double evaluate(double ds, double dx, const DistortionSpec& spec) const;
  double threshold(const DistortionSpec& spec) const;
  std::string label() const;

 private:
  RelaxationFunction(Kind k, double a, double b, std::vector<TableEntry> t)
      : kind_(k), a_(a), b_(b), table_(std::move(t)) {}
  Kind kind_;
  double a_ = 0.0, b_ = 0.0;
  std::vector<TableEntry> table_;
};

/// True iff d_s(s,shat) > D_s or d_x(x,xhat) > D_x (strict, per the excess
/// event definition).
bool excess_indicator(const DistortionSpec& spec, std::size_t s, std::size_t x,
                      std::size_t shat, std::size_t xhat);

/// P_{Xhat}(B_{D_x}(x)) with non-strict ball membership d_x <= D_x.
double ball_probability(const Pmf& p_xhat, const DistortionSpec& spec,
                        std::size_t x);

double relaxed_distortion(const RelaxationFunction& r, const DistortionSpec& spec,
                          std::size_t s, std::size_t x, std::size_t shat,
                          std::size_t xhat);

/// The threshold paired with the relaxed distortion: d(D_s, D_x).
double relaxed_threshold(const RelaxationFunction& r, const DistortionSpec& spec);

}  // namespace hjscc
