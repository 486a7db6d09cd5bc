#include "asymcont/states.hpp"

#include <cmath>

namespace asymcont {

PureState bell_state(Bell which) {
  const double h = 1.0 / std::sqrt(2.0);
  CVector v = CVector::Zero(4);
  switch (which) {
    case Bell::PhiPlus:
      v(0) = h;
      v(3) = h;
      break;
    case Bell::PhiMinus:
      v(0) = h;
      v(3) = -h;
      break;
    case Bell::PsiPlus:
      v(1) = h;
      v(2) = h;
      break;
    case Bell::PsiMinus:
      v(1) = h;
      v(2) = -h;
      break;
  }
  return PureState::normalized(2, 2, std::move(v));
}

DensityMatrix maximally_mixed(int dim_a, int dim_b) {
  const int d = dim_a * dim_b;
  return DensityMatrix(dim_a, dim_b, CMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix werner_state(double singlet_weight) {
  if (!(singlet_weight >= 0.0 && singlet_weight <= 1.0)) {
    throw DomainError("werner_state: weight must lie in [0, 1]");
  }
  const CVector s = bell_state(Bell::PsiMinus).amplitudes();
  CMatrix m = singlet_weight * s * s.adjoint() +
              (1.0 - singlet_weight) * CMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix(2, 2, std::move(m));
}

DensityMatrix isotropic_2x3(double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw DomainError("isotropic_2x3: weight must lie in [0, 1]");
  }
  CVector v = CVector::Zero(6);
  v(0) = 1.0 / std::sqrt(2.0);  // |0,0>
  v(4) = 1.0 / std::sqrt(2.0);  // |1,1>
  CMatrix m = weight * v * v.adjoint() + (1.0 - weight) * CMatrix::Identity(6, 6) / 6.0;
  return DensityMatrix(2, 3, std::move(m));
}

PureState two_qubit_schmidt_state(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("two_qubit_schmidt_state: x in [0, 1]");
  CVector v = CVector::Zero(4);
  v(0) = std::sqrt(1.0 - x);
  v(3) = std::sqrt(x);
  return PureState::normalized(2, 2, std::move(v));
}

}  // namespace asymcont
