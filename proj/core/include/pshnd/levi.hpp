#pragma once

#include "pshnd/polynomial.hpp"

#include <vector>

namespace pshnd {

// Complex Hessian of p in the two holomorphic directions, as formal
// polynomials. Matrix layout:
//
//   row 1: [ zz  wz ]      zz = d2p/(dz dzbar)    wz = d2p/(dw dzbar)
//   row 2: [ zw  ww ]      zw = d2p/(dz dwbar)    ww = d2p/(dw dwbar)
//
// For real-valued p the off-diagonal entries are conjugates of each other,
// so the matrix is Hermitian at every point.
struct LeviMatrix {
  MixedPolynomial zz;
  MixedPolynomial wz;
  MixedPolynomial zw;
  MixedPolynomial ww;
};

LeviMatrix levi_matrix(const MixedPolynomial& p);

// Formal determinant zz*ww - wz*zw. Real-valued whenever p is.
MixedPolynomial hessian_det_direct(const MixedPolynomial& p);

// W(f, g) = f_z g_w - g_z f_w.
HolomorphicPolynomial wronskian(const HolomorphicPolynomial& f,
                                const HolomorphicPolynomial& g);

// det H of sum_i c_i |f_i|^2 telescopes into pairwise Wronskians:
// sum_{i<j} c_i c_j |W(f_i, f_j)|^2. One term per unordered pair with a
// nonzero Wronskian; sign is the product of the two summand signs.
struct DetDecomposition {
  struct Term {
    int sign = 1;
    HolomorphicPolynomial cross;  // the pair's Wronskian
  };
  std::vector<Term> terms;
};

DetDecomposition hessian_det_formula(const ModulusCombination& mc);

// sum_i sign_i * |cross_i|^2 back in the mixed ring; equals
// hessian_det_direct(expand_modulus_combination(mc)).
MixedPolynomial decomposition_expand(const DetDecomposition& d);

}  // namespace pshnd
