#pragma once

#include <optional>
#include <string>

#include "orbrec/atlas.hpp"
#include "orbrec/quotients.hpp"

namespace orbrec::model_io {

// On-disk form of a quotient model: the reconstruction input plus an
// optional embedded semialgebraic description (the variables and the
// defining equalities/inequalities of the orbit space).
struct ModelDocument {
  atlas::OrbifoldInputModel model;
  std::optional<quotients::SemialgebraicModel> semialgebraic;
};

// Document for the standard quotient by g, embedded model included.
ModelDocument standard_document(const quotients::IsotropyGroupKind& g);

// Canonical JSON: fixed key order, strata in stored order, frontier pairs
// and germ keys sorted, polynomials in canonical text form.  parse is a
// left inverse, and serialize(parse(serialize(d))) == serialize(d).
std::string serialize_model(const ModelDocument& doc);

// Parses and validates: JSON syntax errors report line and column;
// stratification violations and missing codimension-2 data are rejected.
ModelDocument parse_model(const std::string& text);

std::string serialize_atlas(const atlas::AtlasDescriptor& a);

}  // namespace orbrec::model_io
