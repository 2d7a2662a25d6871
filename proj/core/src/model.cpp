#include "hjscc/model.hpp"

namespace hjscc {

SourceModel SourceModel::from_joint(JointPmf p_sx) {
  Pmf p_s = p_sx.marginal(Axis::rows);
  Pmf p_x = p_sx.marginal(Axis::cols);
  Kernel x_given_s = p_sx.condition(Axis::rows);
  Kernel s_given_x = p_sx.condition(Axis::cols);
  return SourceModel{std::move(p_sx), std::move(p_s), std::move(p_x),
                     std::move(x_given_s), std::move(s_given_x)};
}

SourceModel SourceModel::from_parts(const Pmf& p_s, const Kernel& x_given_s) {
  return from_joint(JointPmf::from_marginal_conditional(p_s, x_given_s));
}

}  // namespace hjscc
