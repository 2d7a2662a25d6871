#include "hjscc/prob.hpp"

#include <cmath>
#include <numeric>

namespace hjscc {

namespace {

void check_weights(const std::vector<double>& w) {
  if (w.empty()) raise(errc::invalid_argument, "alphabet must be nonempty");
  double sum = 0.0;
  for (double v : w) {
    if (!std::isfinite(v)) raise(errc::non_finite, "weight is not finite");
    if (v < 0.0) raise(errc::negative_weight, "weight below zero");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kValidationTolerance)
    raise(errc::not_normalized,
          "weights sum to " + std::to_string(sum) + ", expected 1");
}

std::vector<double> renormalized(std::vector<double> w) {
  double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= sum;
  return w;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Pmf Pmf::validated(std::vector<double> raw) {
  check_weights(raw);
  return Pmf(Trusted{}, renormalized(std::move(raw)));
}

Pmf Pmf::uniform(std::size_t n) {
  if (n == 0) raise(errc::invalid_argument, "alphabet must be nonempty");
  return Pmf(Trusted{}, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::point_mass(std::size_t n, std::size_t index) {
  if (index >= n) raise(errc::index_out_of_range, "point mass index");
  std::vector<double> w(n, 0.0);
  w[index] = 1.0;
  return Pmf(Trusted{}, std::move(w));
}

double Pmf::at(std::size_t i) const {
  if (i >= w_.size()) raise(errc::index_out_of_range, "pmf index");
  return w_[i];
}

JointPmf JointPmf::validated(const std::vector<std::vector<double>>& table) {
  if (table.empty() || table[0].empty())
    raise(errc::invalid_argument, "joint table must be nonempty");
  const std::size_t cols = table[0].size();
  std::vector<double> flat;
  flat.reserve(table.size() * cols);
  for (const auto& row : table) {
    if (row.size() != cols) raise(errc::dim_mismatch, "ragged joint table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validated_flat(table.size(), cols, std::move(flat));
}

JointPmf JointPmf::validated_flat(std::size_t rows, std::size_t cols,
                                  std::vector<double> flat) {
  if (rows == 0 || cols == 0)
    raise(errc::invalid_argument, "joint table must be nonempty");
  if (flat.size() != rows * cols)
    raise(errc::dim_mismatch, "flat joint size does not match shape");
  check_weights(flat);
  return JointPmf(rows, cols, renormalized(std::move(flat)));
}

JointPmf JointPmf::uniform(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    raise(errc::invalid_argument, "joint table must be nonempty");
  return JointPmf(rows, cols,
                  std::vector<double>(rows * cols,
                                      1.0 / static_cast<double>(rows * cols)));
}

JointPmf JointPmf::from_marginal_conditional(const Pmf& row_marginal,
                                             const Kernel& cols_given_rows) {
  if (row_marginal.size() != cols_given_rows.input_size())
    raise(errc::dim_mismatch, "marginal/conditional size mismatch");
  const std::size_t rows = row_marginal.size();
  const std::size_t cols = cols_given_rows.output_size();
  std::vector<double> flat(rows * cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_marginal[r] <= 0.0) continue;  // zero-mass rows contribute nothing
    for (std::size_t c = 0; c < cols; ++c)
      flat[r * cols + c] = row_marginal[r] * cols_given_rows.at(r, c);
  }
  return JointPmf(rows, cols, renormalized(std::move(flat)));
}

JointPmf JointPmf::product(const Pmf& rows, const Pmf& cols) {
  std::vector<double> flat(rows.size() * cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      flat[r * cols.size() + c] = rows[r] * cols[c];
  return JointPmf(rows.size(), cols.size(), std::move(flat));
}

double JointPmf::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) raise(errc::index_out_of_range, "joint index");
  return w_[r * cols_ + c];
}

Pmf JointPmf::marginal(Axis axis) const {
  if (axis != Axis::rows && axis != Axis::cols)
    raise(errc::bad_axis, "axis must be rows or cols");
  const bool over_rows = axis == Axis::rows;
  std::vector<double> m(over_rows ? rows_ : cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m[over_rows ? r : c] += w_[r * cols_ + c];
  return Pmf::validated(std::move(m));
}

Kernel JointPmf::condition(Axis given) const {
  if (given != Axis::rows && given != Axis::cols)
    raise(errc::bad_axis, "axis must be rows or cols");
  const bool given_rows = given == Axis::rows;
  const std::size_t in = given_rows ? rows_ : cols_;
  const std::size_t out = given_rows ? cols_ : rows_;
  std::vector<double> flat(in * out, 0.0);
  std::vector<std::uint8_t> defined(in, 1);
  for (std::size_t g = 0; g < in; ++g) {
    double mass = 0.0;
    for (std::size_t o = 0; o < out; ++o)
      mass += given_rows ? w_[g * cols_ + o] : w_[o * cols_ + g];
    if (mass <= 0.0) {
      defined[g] = 0;  // flagged, never fabricated
      continue;
    }
    for (std::size_t o = 0; o < out; ++o)
      flat[g * out + o] = (given_rows ? w_[g * cols_ + o] : w_[o * cols_ + g]) / mass;
  }
  return Kernel(in, out, std::move(flat), std::move(defined));
}

Pmf JointPmf::flattened() const { return Pmf::validated(w_); }

Kernel Kernel::validated(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].empty())
    raise(errc::invalid_argument, "kernel must be nonempty");
  const std::size_t out = rows[0].size();
  std::vector<double> flat;
  flat.reserve(rows.size() * out);
  for (const auto& row : rows) {
    if (row.size() != out) raise(errc::dim_mismatch, "ragged kernel");
    Pmf checked = Pmf::validated(row);
    flat.insert(flat.end(), checked.begin(), checked.end());
  }
  return Kernel(rows.size(), out, std::move(flat),
                std::vector<std::uint8_t>(rows.size(), 1));
}

Kernel Kernel::validated_flat(std::size_t in, std::size_t out,
                              std::vector<double> flat) {
  if (in == 0 || out == 0) raise(errc::invalid_argument, "kernel must be nonempty");
  if (flat.size() != in * out)
    raise(errc::dim_mismatch, "flat kernel size does not match shape");
  for (std::size_t y = 0; y < in; ++y) {
    Pmf checked = Pmf::validated(
        std::vector<double>(flat.begin() + static_cast<std::ptrdiff_t>(y * out),
                            flat.begin() + static_cast<std::ptrdiff_t>((y + 1) * out)));
    std::copy(checked.begin(), checked.end(),
              flat.begin() + static_cast<std::ptrdiff_t>(y * out));
  }
  return Kernel(in, out, std::move(flat), std::vector<std::uint8_t>(in, 1));
}

Kernel Kernel::identity(std::size_t n) {
  if (n == 0) raise(errc::invalid_argument, "kernel must be nonempty");
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1.0;
  return Kernel(n, n, std::move(flat), std::vector<std::uint8_t>(n, 1));
}

Kernel Kernel::bsc(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    raise(errc::invalid_argument, "crossover probability outside [0,1]");
  return Kernel::validated({{1.0 - p, p}, {p, 1.0 - p}});
}

Kernel Kernel::constant(std::size_t in, const Pmf& row) {
  if (in == 0) raise(errc::invalid_argument, "kernel must be nonempty");
  std::vector<double> flat(in * row.size());
  for (std::size_t y = 0; y < in; ++y)
    std::copy(row.begin(), row.end(),
              flat.begin() + static_cast<std::ptrdiff_t>(y * row.size()));
  return Kernel(in, row.size(), std::move(flat),
                std::vector<std::uint8_t>(in, 1));
}

bool Kernel::row_defined(std::size_t y) const {
  if (y >= in_) raise(errc::index_out_of_range, "kernel row index");
  return defined_[y] != 0;
}

double Kernel::at(std::size_t y, std::size_t z) const {
  if (y >= in_ || z >= out_) raise(errc::index_out_of_range, "kernel index");
  if (!defined_[y]) raise(errc::zero_marginal_row, "reading an undefined row");
  return w_[y * out_ + z];
}

Pmf Kernel::row(std::size_t y) const {
  if (y >= in_) raise(errc::index_out_of_range, "kernel row index");
  if (!defined_[y]) raise(errc::zero_marginal_row, "reading an undefined row");
  return Pmf::validated(std::vector<double>(
      w_.begin() + static_cast<std::ptrdiff_t>(y * out_),
      w_.begin() + static_cast<std::ptrdiff_t>((y + 1) * out_)));
}

Pmf compose(const Pmf& input, const Kernel& k) {
  if (input.size() != k.input_size())
    raise(errc::dim_mismatch, "compose: input alphabet mismatch");
  std::vector<double> out(k.output_size(), 0.0);
  for (std::size_t y = 0; y < input.size(); ++y) {
    if (input[y] <= 0.0) continue;
    for (std::size_t z = 0; z < k.output_size(); ++z)
      out[z] += input[y] * k.at(y, z);
  }
  return Pmf::validated(std::move(out));
}

RandomStream::RandomStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

RandomStream RandomStream::substream(std::uint64_t master_seed,
                                     std::uint64_t counter) {
  return RandomStream(splitmix64(master_seed) ^
                      splitmix64(counter * 0xD1342543DE82EF95ULL + 1));
}

double RandomStream::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::next() { return gen_(); }

std::size_t sample(const Pmf& p, RandomStream& stream) {
  const double u = stream.uniform01();
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    last_positive = i;
    cum += p[i];
    if (u < cum) return i;
  }
  return last_positive;  // guards against cumulative rounding at u ~ 1
}

}  // namespace hjscc
