#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgr/cgroup.hpp"
#include "cgr/report.hpp"
#include "cgr/setoid.hpp"

namespace cgr {

struct Morphism {
  std::string id;
  int src = 0;
  int tgt = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// A finite groupoid as explicit tables. comp[g][f] is g after f, or -1 when
// the pair is not composable. Nothing is assumed valid at construction.
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::vector<int>> comp;
  std::vector<int> ident;  // object -> identity morphism
  std::vector<int> inv;    // morphism -> inverse morphism

  static FiniteGroupoid make(std::vector<std::string> objects,
                             std::vector<Morphism> morphisms,
                             std::vector<std::vector<int>> comp,
                             std::vector<int> ident, std::vector<int> inv);

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int object_index(std::string_view id) const;
  int morphism_index(std::string_view id) const;
  std::vector<int> hom(int x, int y) const;

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;
};

// Monoidal data on a groupoid: sums on objects and morphisms, a unit
// object, and the structure components as full tables.
struct MonoidalStructure {
  std::vector<std::vector<int>> obj_sum;
  std::vector<std::vector<int>> mor_sum;
  int zero_obj = 0;
  std::vector<std::vector<std::vector<int>>> alpha;  // alpha[x][y][z]
  std::vector<int> lambda;                           // lambda[x] : 0+x -> x
  std::vector<int> rho;                              // rho[x]    : x+0 -> x

  friend bool operator==(const MonoidalStructure&, const MonoidalStructure&) = default;
};

// A monoidal groupoid in which every object has a chosen quasi-inverse,
// with contraction components eps[x] : -x+x -> 0 and delta[x] : x+-x -> 0.
struct CategoricalGroup {
  FiniteGroupoid gd;
  MonoidalStructure mon;
  std::vector<int> neg_obj;
  std::vector<int> eps;
  std::vector<int> delta;

  int object_count() const { return gd.object_count(); }
  int morphism_count() const { return gd.morphism_count(); }
  int src(int f) const { return gd.morphisms.at(f).src; }
  int tgt(int f) const { return gd.morphisms.at(f).tgt; }
  int id_of(int x) const { return gd.ident.at(x); }

  // Checked composition: throws CgrError on a non-composable pair.
  int compose(int g, int f) const;
  int minv(int f) const { return gd.inv.at(f); }
  int msum(int f, int g) const { return mon.mor_sum.at(f).at(g); }
  int osum(int x, int y) const { return mon.obj_sum.at(x).at(y); }
  int oneg(int x) const { return neg_obj.at(x); }

  const std::string& obj_name(int x) const { return gd.objects.at(x); }
  const std::string& mor_name(int f) const { return gd.morphisms.at(f).id; }

  friend bool operator==(const CategoricalGroup&, const CategoricalGroup&) = default;
};

// Table shapes, composition defined exactly on composable pairs with the
// right endpoints, identities, associativity, inverses.
ValidationReport validate_groupoid(const FiniteGroupoid& gd);

// Staged validation: groupoid laws, functoriality of +, endpoints of the
// structure components, naturality, pentagon, triangle, unit coherence,
// the two contraction triangles, then naturality of eps and delta (which
// needs negation of morphisms and so runs last).
ValidationReport validate_categorical_group(const CategoricalGroup& c);

// Morphisms reachable from identities and structure components under
// composition, sum, and inverse.
struct SpecialClosure {
  std::vector<char> special;   // morphism index -> membership
  std::vector<int> members;    // ascending indices

  bool is_special(int f) const { return special.at(f) != 0; }
};

SpecialClosure special_closure(const CategoricalGroup& c);

enum class UniqueSpecialStatus { found, none, ambiguous };

struct UniqueSpecialResult {
  UniqueSpecialStatus status = UniqueSpecialStatus::none;
  int morphism = -1;            // valid when status == found
  std::vector<int> witnesses;   // the competing morphisms when ambiguous
};

// The unique special morphism x -> y, when it exists and is unique.
UniqueSpecialResult unique_special(const CategoricalGroup& c, const SpecialClosure& clo,
                                   int x, int y);

class UniqueSpecialError : public CgrError {
 public:
  UniqueSpecialError(std::string what, UniqueSpecialStatus status, int src, int tgt,
                     std::vector<int> witnesses)
      : CgrError(std::move(what)), status(status), src(src), tgt(tgt),
        witnesses(std::move(witnesses)) {}

  UniqueSpecialStatus status;
  int src;
  int tgt;
  std::vector<int> witnesses;
};

int unique_special_or_throw(const CategoricalGroup& c, const SpecialClosure& clo, int x, int y);

// Negation of a morphism f : x -> x', as a morphism -x -> -x'. Built from
// the contraction components so that -1_x = 1_{-x} and eps, delta become
// natural in a certified categorical group.
int neg_morphism(const CategoricalGroup& c, int f);

// Congruence between parallel-up-to-iso morphisms: f ~ g when a pair
// (theta0, theta1) of isos closes the square theta1 . f = g . theta0.
// Mode any allows arbitrary isos; mode weak_special requires both special.
enum class CongruenceMode { any, weak_special };

std::optional<std::pair<int, int>> congruence_between_morphisms(
    const CategoricalGroup& c, int f, int g, CongruenceMode mode,
    const SpecialClosure* clo = nullptr);

// Which object relation defines membership in the kernels up to ~:
// connected to 0 by any iso, or connected by a special iso.
enum class KernelScope { isomorphic, special };

// Exchange law between the kernels: for every f whose target is related to
// 0 and g whose source is related to 0, f + g and g + f agree up to weak
// special congruence. Checked over all pairs; every witness square is
// re-verified. The special scope is the one under which the law is exact
// on the strict fixtures; the isomorphic scope is exposed for comparison
// and fails on connected nonabelian examples.
ValidationReport check_lemma_comm(const CategoricalGroup& c,
                                  KernelScope scope = KernelScope::special);

// Objects related by some morphism between them.
FiniteSetoid object_iso_setoid(const CategoricalGroup& c);

// Objects related by a special morphism.
FiniteSetoid object_special_setoid(const CategoricalGroup& c, const SpecialClosure& clo);

// The objects as a c-group: sum and negation tables with the iso relation.
CGroup objects_cgroup(const CategoricalGroup& c);

}  // namespace cgr
