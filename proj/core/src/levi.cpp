#include "pshnd/levi.hpp"

#include "pshnd/error.hpp"

namespace pshnd {

LeviMatrix levi_matrix(const MixedPolynomial& p) {
  LeviMatrix m;
  const MixedPolynomial pzb = p.wirtinger(Var::zbar);
  const MixedPolynomial pwb = p.wirtinger(Var::wbar);
  m.zz = pzb.wirtinger(Var::z);
  m.wz = pzb.wirtinger(Var::w);
  m.zw = pwb.wirtinger(Var::z);
  m.ww = pwb.wirtinger(Var::w);
  return m;
}

MixedPolynomial hessian_det_direct(const MixedPolynomial& p) {
  const LeviMatrix m = levi_matrix(p);
  return m.zz * m.ww - m.wz * m.zw;
}

HolomorphicPolynomial wronskian(const HolomorphicPolynomial& f,
                                const HolomorphicPolynomial& g) {
  return f.derivative_z() * g.derivative_w() - g.derivative_z() * f.derivative_w();
}

DetDecomposition hessian_det_formula(const ModulusCombination& mc) {
  for (const auto& s : mc.summands)
    if (s.sign != 1 && s.sign != -1)
      throw InvalidArgument("modulus combination signs must be +1 or -1");
  DetDecomposition out;
  for (std::size_t i = 0; i < mc.summands.size(); ++i) {
    for (std::size_t j = i + 1; j < mc.summands.size(); ++j) {
      HolomorphicPolynomial w = wronskian(mc.summands[i].part, mc.summands[j].part);
      if (w.is_zero()) continue;
      out.terms.push_back(
          {mc.summands[i].sign * mc.summands[j].sign, std::move(w)});
    }
  }
  return out;
}

MixedPolynomial decomposition_expand(const DetDecomposition& d) {
  MixedPolynomial out;
  for (const auto& t : d.terms) {
    const MixedPolynomial w = t.cross.to_mixed();
    MixedPolynomial sq = w * w.conjugated();
    out += (t.sign == 1) ? sq : -sq;
  }
  return out;
}

}  // namespace pshnd
