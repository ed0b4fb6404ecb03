#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "cgr/actions.hpp"
#include "cgr/catgroup.hpp"
#include "cgr/ccm.hpp"
#include "cgr/cgroup.hpp"
#include "cgr/classical.hpp"
#include "cgr/report.hpp"

namespace cgr {

enum class StructureKind {
  setoid,
  cgroup,
  catgroup,
  xmod,
  gg,
  ccm,
  extension,
  action,
};

std::string kind_name(StructureKind k);
StructureKind kind_from_name(std::string_view name);  // throws SchemaError

using StructureBody = std::variant<FiniteSetoid, CGroup, CategoricalGroup, CrossedModule,
                                   GroupGroupoid, CCrossedModule, SplitExtension, CAction>;

// On-disk document: {"format": "cgr/1", "kind": ..., "body": {...}}.
// Parsing validates shape only (dimensions, id references, composability of
// listed composites); axioms stay the validators' job. Unknown fields
// anywhere are rejected. parse(emit(x)) == x for every kind.
struct StructureFile {
  StructureKind kind = StructureKind::setoid;
  StructureBody body;
};

StructureFile parse_structure(const std::string& text);
std::string emit_structure(const StructureFile& f);

StructureFile load_structure(const std::string& path);
void save_structure(const StructureFile& f, const std::string& path);

std::string report_to_json(const ValidationReport& r);

}  // namespace cgr
