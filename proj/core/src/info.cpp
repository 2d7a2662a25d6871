#include "hjscc/info.hpp"

#include <cmath>

namespace hjscc {

StructuredChannel StructuredChannel::validated(Kernel z_given_y,
                                               std::size_t y1_size,
                                               std::size_t y2_size) {
  if (y1_size == 0 || y2_size == 0)
    raise(errc::invalid_argument, "structured input sizes must be positive");
  if (z_given_y.input_size() != y1_size * y2_size)
    raise(errc::dim_mismatch,
          "channel input size does not equal y1_size * y2_size");
  return StructuredChannel{std::move(z_given_y), y1_size, y2_size};
}

LayeredView LayeredView::build(const StructuredChannel& ch,
                               const JointPmf& p12) {
  if (p12.rows() != ch.y1_size || p12.cols() != ch.y2_size)
    raise(errc::dim_mismatch, "input law does not match channel structure");
  Pmf p_y1 = p12.marginal(Axis::rows);
  Kernel y2_given_y1 = p12.condition(Axis::rows);

  const std::size_t nz = ch.z_size();
  std::vector<double> zy1(ch.y1_size * nz, 0.0);
  std::vector<std::uint8_t> defined(ch.y1_size, 1);
  std::vector<double> pz(nz, 0.0);
  for (std::size_t y1 = 0; y1 < ch.y1_size; ++y1) {
    if (p_y1[y1] <= 0.0) {
      defined[y1] = 0;
      continue;
    }
    for (std::size_t y2 = 0; y2 < ch.y2_size; ++y2) {
      const double w = y2_given_y1.at(y1, y2);
      if (w <= 0.0) continue;
      for (std::size_t z = 0; z < nz; ++z)
        zy1[y1 * nz + z] += w * ch.z_given_y.at(ch.input_index(y1, y2), z);
    }
    for (std::size_t z = 0; z < nz; ++z) pz[z] += p_y1[y1] * zy1[y1 * nz + z];
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(ch.y1_size);
  // Assemble through the validated constructors; undefined rows are rebuilt
  // via a joint with a zero row so the flags survive.
  std::vector<double> joint_flat(ch.y1_size * nz, 0.0);
  for (std::size_t y1 = 0; y1 < ch.y1_size; ++y1)
    for (std::size_t z = 0; z < nz; ++z)
      joint_flat[y1 * nz + z] = p_y1[y1] * zy1[y1 * nz + z];
  JointPmf joint_y1z =
      JointPmf::validated_flat(ch.y1_size, nz, std::move(joint_flat));
  Kernel z_given_y1 = joint_y1z.condition(Axis::rows);

  return LayeredView{p12, std::move(p_y1), std::move(y2_given_y1),
                     std::move(z_given_y1), Pmf::validated(std::move(pz))};
}

double info_density(const Pmf& p_in, const Kernel& k, std::size_t y,
                    std::size_t z) {
  if (p_in.size() != k.input_size())
    raise(errc::dim_mismatch, "info_density: input alphabet mismatch");
  return info_density_ref(k, compose(p_in, k), y, z);
}

double info_density_ref(const Kernel& k, const Pmf& ref, std::size_t y,
                        std::size_t z) {
  if (ref.size() != k.output_size())
    raise(errc::dim_mismatch, "info_density: reference alphabet mismatch");
  const double fwd = k.at(y, z);
  if (fwd <= 0.0) return kNegInfDensity;
  const double q = ref.at(z);
  if (q <= 0.0)
    raise(errc::absolute_continuity_violation,
          "channel reaches an output the reference gives zero mass");
  return std::log(fwd / q);
}

double cond_info_density(const LayeredView& view, const StructuredChannel& ch,
                         std::size_t y1, std::size_t y2, std::size_t z) {
  if (y1 >= ch.y1_size || y2 >= ch.y2_size || z >= ch.z_size())
    raise(errc::index_out_of_range, "cond_info_density index");
  if (view.p_y1[y1] <= 0.0)
    raise(errc::zero_conditioning_mass, "P(y1) = 0");
  const double fwd = ch.z_given_y.at(ch.input_index(y1, y2), z);
  if (fwd <= 0.0) return kNegInfDensity;
  const double eff = view.z_given_y1.at(y1, z);
  if (eff <= 0.0)
    raise(errc::absolute_continuity_violation,
          "conditional reference has zero mass at a reachable output");
  return std::log(fwd / eff);
}

double cond_info_density(const JointPmf& p12, const StructuredChannel& ch,
                         std::size_t y1, std::size_t y2, std::size_t z) {
  return cond_info_density(LayeredView::build(ch, p12), ch, y1, y2, z);
}

double mutual_information(const Pmf& p_in, const Kernel& k) {
  if (p_in.size() != k.input_size())
    raise(errc::dim_mismatch, "mutual_information: alphabet mismatch");
  const Pmf q = compose(p_in, k);
  double mi = 0.0;
  for (std::size_t y = 0; y < p_in.size(); ++y) {
    if (p_in[y] <= 0.0) continue;
    for (std::size_t z = 0; z < k.output_size(); ++z) {
      const double fwd = k.at(y, z);
      if (fwd <= 0.0) continue;
      mi += p_in[y] * fwd * std::log(fwd / q[z]);
    }
  }
  return std::max(mi, 0.0);
}

}  // namespace hjscc
