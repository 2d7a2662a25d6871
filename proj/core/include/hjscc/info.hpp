#pragma once

#include <limits>

#include "hjscc/prob.hpp"

namespace hjscc {

/// Sentinel for log(0/q): a symbol the channel cannot produce. Expectations
/// must skip the zero-mass atoms that carry it.
inline constexpr double kNegInfDensity = -std::numeric_limits<double>::infinity();

/// Channel whose input alphabet is a declared product Y1 x Y2; input index
/// y = y1 * y2_size + y2.
struct StructuredChannel {
  Kernel z_given_y;
  std::size_t y1_size = 0;
  std::size_t y2_size = 0;

  static StructuredChannel validated(Kernel z_given_y, std::size_t y1_size,
                                     std::size_t y2_size);

  std::size_t z_size() const { return z_given_y.output_size(); }
  std::size_t input_index(std::size_t y1, std::size_t y2) const {
    return y1 * y2_size + y2;
  }
};

/// Effective single-layer kernels of a structured channel under a declared
/// input law P_{Y1 Y2}: built once, consistent with that law by construction.
struct LayeredView {
  JointPmf p12;        // the declared input law
  Pmf p_y1;
  Kernel y2_given_y1;  // undefined rows where P(y1) = 0
  Kernel z_given_y1;   // marginalized over Y2; undefined rows where P(y1) = 0
  Pmf p_z;

  static LayeredView build(const StructuredChannel& ch, const JointPmf& p12);
};

/// log( k(z|y) / q(z) ) in nats with q = compose(p_in, k); kNegInfDensity
/// when k(z|y) = 0.
double info_density(const Pmf& p_in, const Kernel& k, std::size_t y,
                    std::size_t z);

/// Reference-measure form: q is caller-supplied. Raises
/// AbsoluteContinuityViolation when k(z|y) > 0 but ref(z) = 0.
double info_density_ref(const Kernel& k, const Pmf& ref, std::size_t y,
                        std::size_t z);

/// log( P(z|y1,y2) / P(z|y1) ) in nats under the view's input law.
double cond_info_density(const LayeredView& view, const StructuredChannel& ch,
                         std::size_t y1, std::size_t y2, std::size_t z);

/// Convenience overload building the view on the fly.
double cond_info_density(const JointPmf& p12, const StructuredChannel& ch,
                         std::size_t y1, std::size_t y2, std::size_t z);

/// E[i(Y;Z)] in nats; nonnegative.
double mutual_information(const Pmf& p_in, const Kernel& k);

}  // namespace hjscc
