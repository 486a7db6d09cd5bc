#pragma once

#include "asymcont/linalg.hpp"

namespace asymcont {

/// Bell basis in the order Phi+, Phi-, Psi+, Psi-.
enum class Bell { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

PureState bell_state(Bell which);

/// (|00> + |11>) / sqrt(2), the unit of entanglement.
inline PureState phi_plus() { return bell_state(Bell::PhiPlus); }

DensityMatrix maximally_mixed(int dim_a, int dim_b);

/// Two-qubit Werner state p |Psi-><Psi-| + (1 - p) I/4, p in [0, 1].
/// PPT exactly when p <= 1/3.
DensityMatrix werner_state(double singlet_weight);

/// 2x3 path p |v><v| + (1 - p) I/6 with |v> = (|00> + |11>)/sqrt(2).
/// PPT exactly when p <= 1/4.
DensityMatrix isotropic_2x3(double weight);

/// sqrt(1 - x)|00> + sqrt(x)|11>: Schmidt squares (1 - x, x).
PureState two_qubit_schmidt_state(double x);

}  // namespace asymcont
