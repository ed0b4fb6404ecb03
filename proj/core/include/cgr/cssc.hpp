#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgr/catgroup.hpp"
#include "cgr/ccm.hpp"
#include "cgr/report.hpp"

namespace cgr {

// Morphisms whose source is isomorphic to 0, as a c-crossed module over
// the objects: addition is the monoidal sum, the boundary is the target
// map, objects act by r.c = 1_r + (c + -1_r), and the relation identifies
// everything (all sources are isomorphic to 0, so the result is
// connected). special_h is the special-isomorphism relation on objects.
struct RelaxedKernel {
  CCrossedModule ccm;
  std::vector<int> morphism_of;  // carrier index -> morphism index
};

RelaxedKernel relaxed_kernel_ccm(const CategoricalGroup& c);

// Morphisms with source exactly 0, made a c-group by correcting endpoints
// with the unique special isomorphisms gamma : 0 -> 0 + 0 and
// kappa : 0 -> -0:
//   f + f' = (f msum f') . gamma,   -f = neg_morphism(f) . kappa.
// Throws UniqueSpecialError when either corrector is missing or ambiguous.
struct KernelCGroup {
  CGroup group;
  std::vector<int> morphism_of;
  int gamma = -1;
  int kappa = -1;
};

KernelCGroup strict_kernel_cgroup(const CategoricalGroup& c);

// The full construction: strict kernel as G, objects as H, boundary the
// target map, action r.c = (1_r + (c + -1_r)) . gamma_r with gamma_r the
// unique special 0 -> r + (0 + -r). The result is certified as a
// connected strict special c-crossed module.
struct CsscResult {
  bool ok = false;
  std::optional<CCrossedModule> ccm;
  std::optional<KernelCGroup> kernel;
  ValidationReport certification;   // validate_ccm(strict) plus the classification
  CcmClassification classification; // meaningful when ok
  std::string diagnostic;           // set when construction aborted
};

CsscResult build_cssc(const CategoricalGroup& c);

}  // namespace cgr
