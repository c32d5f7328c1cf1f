// JSON interchange: group definitions consumed by the CLI, representation
// and measure files, and classification-report serialization.

#pragma once

#include "finrep/mackey.hpp"

#include <stdexcept>
#include <string>

namespace finrep {

// Malformed or invalid input (syntax, missing fields, data failing group
// validation).  The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// { "abelian": {"orders": [..]},
//   "h": {"table": [[..],..]} | {"cyclic": n} | {"units_mod": n},
//   "action": {"per_element": [matrix, ..]} }
// A missing "action" means the trivial action.
SemidirectPtr parse_group_definition(const std::string& text,
                                     std::int64_t limit = kDefaultGroupLimit);
SemidirectPtr load_group_definition(const std::string& path,
                                    std::int64_t limit = kDefaultGroupLimit);

// { "dim": d, "mats": [ [[ [re,im], .. ], ..], .. ] } indexed by group element.
MatrixRep parse_rep(const std::string& text, const GroupPtr& group, double tol = kMatrixTol);
MatrixRep load_rep(const std::string& path, const GroupPtr& group, double tol = kMatrixTol);
std::string rep_to_json(const MatrixRep& rep);

// { "orders": [..], "dim": d, "atoms": { "<char-index>": matrix, .. } };
// atoms outside the support are omitted on output and zero on input.
std::string pvm_to_json(const ProjectionValuedMeasure& p, double tol = kMatrixTol);
ProjectionValuedMeasure parse_pvm(const std::string& text, double tol = kMatrixTol);

std::string report_to_json(const ClassificationReport& report, const CompletenessResult& check);

}  // namespace finrep
