#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hjscc/errors.hpp"

namespace hjscc {

/// Sum deviation accepted by validation before rejecting a weight vector.
inline constexpr double kValidationTolerance = 1e-9;
/// Tolerance for internal identity checks (reconstruction, normalization).
inline constexpr double kIdentityTolerance = 1e-12;

enum class Axis : int { rows = 0, cols = 1 };

class Kernel;

/// Probability mass function over a finite alphabet {0, ..., n-1}.
/// Immutable after construction; always normalized.
class Pmf {
 public:
  /// Validates raw weights: nonempty, finite, nonnegative, summing to 1
  /// within kValidationTolerance. Drift within tolerance is corrected by an
  /// exact renormalization; anything larger is rejected.
  static Pmf validated(std::vector<double> raw);

  static Pmf uniform(std::size_t n);
  static Pmf point_mass(std::size_t n, std::size_t index);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  double at(std::size_t i) const;
  const std::vector<double>& weights() const { return w_; }

  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

 private:
  struct Trusted {};
  Pmf(Trusted, std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

/// Joint pmf over a product alphabet, stored row-major as rows x cols.
class JointPmf {
 public:
  static JointPmf validated(const std::vector<std::vector<double>>& table);
  static JointPmf validated_flat(std::size_t rows, std::size_t cols,
                                 std::vector<double> flat);
  static JointPmf uniform(std::size_t rows, std::size_t cols);
  /// Builds p(a) * k(b|a); rows follow `row_marginal`.
  static JointPmf from_marginal_conditional(const Pmf& row_marginal,
                                            const Kernel& cols_given_rows);
  static JointPmf product(const Pmf& rows, const Pmf& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const;
  double operator()(std::size_t r, std::size_t c) const {
    return w_[r * cols_ + c];
  }
  const std::vector<double>& flat() const { return w_; }

  Pmf marginal(Axis axis) const;
  /// Conditional of the other axis given `given`. Rows of the result are
  /// indexed by the conditioning symbol; symbols with zero marginal mass
  /// yield undefined rows that consumers must not read.
  Kernel condition(Axis given) const;
  /// The joint as a single pmf over the flattened product alphabet.
  Pmf flattened() const;

 private:
  JointPmf(std::size_t rows, std::size_t cols, std::vector<double> w)
      : rows_(rows), cols_(cols), w_(std::move(w)) {}
  std::size_t rows_, cols_;
  std::vector<double> w_;
};

/// Stochastic kernel: one Pmf per input symbol. Rows produced by
/// conditioning on a zero-mass symbol are flagged undefined; reading them
/// raises ZeroMarginalRow.
class Kernel {
 public:
  static Kernel validated(const std::vector<std::vector<double>>& rows);
  static Kernel validated_flat(std::size_t in, std::size_t out,
                               std::vector<double> flat);
  static Kernel identity(std::size_t n);
  /// Binary symmetric channel with crossover probability p.
  static Kernel bsc(double p);
  /// Kernel whose every row equals `row` (an input-independent output).
  static Kernel constant(std::size_t in, const Pmf& row);

  std::size_t input_size() const { return in_; }
  std::size_t output_size() const { return out_; }
  bool row_defined(std::size_t y) const;
  double at(std::size_t y, std::size_t z) const;
  Pmf row(std::size_t y) const;
  const std::vector<double>& flat() const { return w_; }

 private:
  friend class JointPmf;
  Kernel(std::size_t in, std::size_t out, std::vector<double> w,
         std::vector<std::uint8_t> defined)
      : in_(in), out_(out), w_(std::move(w)), defined_(std::move(defined)) {}
  std::size_t in_, out_;
  std::vector<double> w_;
  std::vector<std::uint8_t> defined_;
};

/// output(z) = sum_y p(y) k(z|y)
Pmf compose(const Pmf& input, const Kernel& k);

/// Deterministic random stream. Substreams are derived from a master seed
/// by a counter so that parallel consumers stay reproducible regardless of
/// scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);
  static RandomStream substream(std::uint64_t master_seed,
                                std::uint64_t counter);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  std::uint64_t next();

 private:
  std::mt19937_64 gen_;
};

/// Inverse-CDF sampling over cumulative weights.
std::size_t sample(const Pmf& p, RandomStream& stream);

}  // namespace hjscc
