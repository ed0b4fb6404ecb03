#pragma once

#include <string>
#include <vector>

#include "cgr/cgroup.hpp"
#include "cgr/report.hpp"

namespace cgr {

// A left action of a c-group on a c-group, as a table action[b][a].
// The laws hold up to the relations; validate_caction certifies:
//   b.(a + a') ~ b.a + b.a'
//   (b + b').a ~ b.(b'.a)
//   0.a ~ a
//   b ~ b', a ~ a'  =>  b.a ~ b'.a'
struct CAction {
  CGroup acting;
  CGroup acted;
  std::vector<std::vector<int>> table;

  int act(int b, int a) const { return table.at(b).at(a); }

  friend bool operator==(const CAction&, const CAction&) = default;
};

ValidationReport validate_caction(const CAction& act);

// A split extension of c-groups
//   A --incl--> E --proj--> B   with  section : B -> E,  proj . section = 1_B.
// incl and proj are certified homs; the section only needs additivity up
// to the relation (exact sections need not exist), which is what the
// induced action and the comparison with the semidirect product use.
struct SplitExtension {
  CGroup sub;    // A
  CGroup total;  // E
  CGroup base;   // B
  CGroupHom incl;
  CGroupHom proj;
  CGroupHom section;

  friend bool operator==(const SplitExtension&, const SplitExtension&) = default;
};

// proj surjective up to ~, incl embeds A onto the c-kernel of proj,
// proj . section = 1_B exactly, incl and proj certified, section additive
// up to ~ and relation preserving.
ValidationReport validate_split_extension(const SplitExtension& e);

// b . a = section(b) + (incl(a) - section(b)), read back through incl.
// Throws CgrError if a conjugate leaves the image closure of A.
CAction induced_action(const SplitExtension& e);

// B x A with (b', a') + (b, a) = (b' + b, a' + b'.a), zero (0, 0),
// -(b, a) = (-b, -(-b.a)), relation componentwise. Element ids "(b,a)".
struct Semidirect {
  CGroup group;
  CGroupHom proj;     // onto B
  CGroupHom section;  // b -> (b, 0)
};

Semidirect semidirect(const CAction& act);

// Compares E with B x| A for the induced action: canonical maps
//   phi : E -> B x| A,  e |-> (proj e, e - section(proj e))
//   psi : B x| A -> E,  (b, a) |-> incl(a) + section(b)
// are additive up to ~, relation preserving, and compose to identities up
// to ~ pointwise; and the c-kernel of the semidirect projection is
// c-isomorphic to A via a |-> (0, a).
ValidationReport check_semidirect_iso(const SplitExtension& e);

}  // namespace cgr
