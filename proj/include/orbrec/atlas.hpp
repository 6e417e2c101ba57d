#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbrec/grouprec.hpp"
#include "orbrec/localalg.hpp"
#include "orbrec/poly.hpp"
#include "orbrec/quotients.hpp"
#include "orbrec/strata.hpp"

namespace orbrec::atlas {

// Everything the reconstruction needs to know about a quotient: its
// dimension, the orbit-type stratification, and a defining germ of the
// singular locus (in the embedding coordinates) for codimension-2 strata
// whose order is not stored directly.
struct OrbifoldInputModel {
  unsigned dimension = 2;
  strata::StratifiedModel stratified;
  std::map<std::string, RatPoly> germs;  // keyed by codimension-2 stratum id
};

struct PipelineOptions {
  unsigned degree_cap = localalg::kDefaultDegreeCap;
  std::size_t coset_limit = grouprec::kDefaultCosetLimit;
};

// Order of the isotropy group at an isolated singular point, read off the
// defining germ of the singular locus.
unsigned recover_order(const RatPoly& germ, unsigned degree_cap = localalg::kDefaultDegreeCap);

// The local group of a point class: manifold points are unconstrained,
// mirror points reflect, corner points of order 2k are dihedral, cone
// points of order k rotate.
quotients::IsotropyGroupKind classify_isotropy(const strata::PointClassDescriptor& pc);

// "R^n/G" label for a chart modeled on the quotient of R^n by G.
std::string chart_model_tag(unsigned dimension, const quotients::IsotropyGroupKind& g);

struct Chart {
  std::string stratum_id;
  unsigned dimension = 0;
  quotients::IsotropyGroupKind isotropy = quotients::IsotropyGroupKind::trivial();
  std::string model_tag;
};

struct AtlasDescriptor {
  unsigned dimension = 0;
  std::vector<Chart> charts;  // one per stratum, in input order
};

// Point class of one stratum with the order resolved: the stored order
// and/or the germ's recovered order (both present must agree, mirror strata
// must store 2 when they store anything).
strata::PointClassDescriptor resolve_point_class(const OrbifoldInputModel& m,
                                                 const std::string& stratum_id,
                                                 const PipelineOptions& opts = {});

// The local singularity pattern a point class presents: regular, mirror
// edge, cone point, or corner point.
grouprec::LocalSingularityDescriptor local_descriptor(const strata::PointClassDescriptor& pc);

// The reconstruction pipeline for dimensions 0 to 2: validate the
// stratification, resolve each codimension-2 order from the stored value
// and/or the germ (both present must agree), classify every stratum's
// isotropy group, and cross-check each codimension-2 answer against the
// group enumerated from the local fundamental-group presentation.
AtlasDescriptor reconstruct_atlas(const OrbifoldInputModel& m, const PipelineOptions& opts = {});

// Input model of the standard quotient by g: its stratification plus the
// singular-locus germ of the embedded model.
OrbifoldInputModel quotient_input_model(const quotients::IsotropyGroupKind& g);

// End-to-end check: reconstruct the atlas of the standard quotient by g and
// compare the central chart's group with g itself.
bool round_trip(const quotients::IsotropyGroupKind& g, const PipelineOptions& opts = {});

}  // namespace orbrec::atlas
