#pragma once

namespace hp {

// Fault-injection hook for the verification suites: setting HP_FAULT_INJECT
// to one of the names below perturbs a single constant in the corresponding
// formula, so the suites can be shown to catch it. Unset means no fault.
enum class Fault {
  none,
  eig_hsum,      // the h-function sum behind the symmetric eigenvalue
  t_diag,        // the diagonal coefficient of the truncated operator T_i
  avgchar_norm,  // the normalization of the averaged character
};

Fault injected_fault();

}  // namespace hp
