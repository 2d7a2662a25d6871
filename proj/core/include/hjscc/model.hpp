#pragma once

#include "hjscc/prob.hpp"

namespace hjscc {

/// A two-component source: latent state S observed only through X.
/// Holds the joint law plus the derived marginals and conditionals.
struct SourceModel {
  JointPmf joint;      // axis 0 = S, axis 1 = X
  Pmf p_s;
  Pmf p_x;
  Kernel x_given_s;    // rows indexed by s
  Kernel s_given_x;    // rows indexed by x; zero-mass x rows are undefined

  static SourceModel from_joint(JointPmf p_sx);
  static SourceModel from_parts(const Pmf& p_s, const Kernel& x_given_s);

  std::size_t state_size() const { return joint.rows(); }
  std::size_t obs_size() const { return joint.cols(); }
};

}  // namespace hjscc
