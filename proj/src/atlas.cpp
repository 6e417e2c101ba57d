#include "orbrec/atlas.hpp"

#include <sstream>

#include "orbrec/error.hpp"

namespace orbrec::atlas {

unsigned recover_order(const RatPoly& germ, unsigned degree_cap) {
  localalg::MilnorResult r = localalg::milnor_codimension(germ, degree_cap);
  if (!r.is_finite())
    throw domain_error("germ does not define an isolated orbifold singularity");
  return unsigned(*r.codimension) + 1;
}

quotients::IsotropyGroupKind classify_isotropy(const strata::PointClassDescriptor& pc) {
  switch (pc.codim) {
    case 0:
      return quotients::IsotropyGroupKind::trivial();
    case 1:
      return quotients::IsotropyGroupKind::dihedral(1);
    case 2: {
      if (!pc.order) throw domain_error("codimension-2 point class needs an order");
      unsigned n = *pc.order;
      if (pc.mirror_adjacent) {
        if (n % 2 != 0)
          throw domain_error("inconsistent model: a corner point's order must be even");
        return quotients::IsotropyGroupKind::dihedral(n / 2);
      }
      if (n == 0) throw domain_error("point order must be positive");
      return quotients::IsotropyGroupKind::cyclic(n);
    }
    default:
      throw domain_error("no local model for codimension 3 or higher");
  }
}

std::string chart_model_tag(unsigned dimension, const quotients::IsotropyGroupKind& g) {
  std::string group;
  switch (g.family()) {
    case quotients::GroupFamily::Trivial: group = "{1}"; break;
    case quotients::GroupFamily::Cyclic: group = "Z_" + std::to_string(g.k()); break;
    case quotients::GroupFamily::Dihedral: group = "D_" + std::to_string(g.k()); break;
  }
  return "R^" + std::to_string(dimension) + "/" + group;
}

grouprec::LocalSingularityDescriptor local_descriptor(const strata::PointClassDescriptor& pc) {
  switch (pc.codim) {
    case 0: return grouprec::LocalSingularityDescriptor::regular();
    case 1: return grouprec::LocalSingularityDescriptor::mirror_edge();
    case 2:
      if (!pc.order) throw domain_error("codimension-2 point class needs an order");
      return pc.mirror_adjacent
                 ? grouprec::LocalSingularityDescriptor::corner_point(*pc.order)
                 : grouprec::LocalSingularityDescriptor::cone_point(*pc.order);
    default: throw domain_error("no local model for codimension 3 or higher");
  }
}

strata::PointClassDescriptor resolve_point_class(const OrbifoldInputModel& m,
                                                 const std::string& stratum_id,
                                                 const PipelineOptions& opts) {
  const strata::Stratum* s = m.stratified.find(stratum_id);
  if (s == nullptr) throw domain_error("unknown stratum '" + stratum_id + "'");
  strata::PointClassDescriptor pc = strata::point_class(m.stratified, stratum_id);

  if (pc.codim == 1 && s->order && *s->order != 2)
    throw domain_error("mirror stratum '" + stratum_id + "' must have order 2, got " +
                       std::to_string(*s->order));

  if (pc.codim == 2) {
    auto germ_it = m.germs.find(stratum_id);
    std::optional<unsigned> germ_order;
    if (germ_it != m.germs.end()) germ_order = recover_order(germ_it->second, opts.degree_cap);
    if (s->order && germ_order && *s->order != *germ_order)
      throw domain_error("stratum '" + stratum_id + "': stored order " +
                         std::to_string(*s->order) + " disagrees with the germ's order " +
                         std::to_string(*germ_order));
    if (!s->order && !germ_order)
      throw domain_error("codimension-2 stratum '" + stratum_id +
                         "' has neither a stored order nor a germ");
    pc.order = s->order ? s->order : germ_order;
  }
  return pc;
}

AtlasDescriptor reconstruct_atlas(const OrbifoldInputModel& m, const PipelineOptions& opts) {
  if (m.dimension > 2)
    throw domain_error(
        "reconstruction in dimension 3 or higher needs chart data at stratum "
        "links, which this pipeline does not model");

  std::vector<std::string> violations = strata::validate(m.stratified);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid stratified model";
    for (const auto& v : violations) os << "; " << v;
    throw domain_error(os.str());
  }

  for (const auto& s : m.stratified.strata)
    if (s.codim > m.dimension)
      throw domain_error("stratum '" + s.id + "' has codimension " + std::to_string(s.codim) +
                         " in a dimension-" + std::to_string(m.dimension) + " model");

  for (const auto& [id, germ] : m.germs) {
    const strata::Stratum* s = m.stratified.find(id);
    if (s == nullptr) throw domain_error("germ attached to unknown stratum '" + id + "'");
    if (s->codim != 2)
      throw domain_error("germ attached to stratum '" + id + "' of codimension " +
                         std::to_string(s->codim) + "; only codimension-2 strata carry germs");
  }

  AtlasDescriptor out;
  out.dimension = m.dimension;
  for (const auto& s : m.stratified.strata) {
    strata::PointClassDescriptor pc = resolve_point_class(m, s.id, opts);
    quotients::IsotropyGroupKind iso = classify_isotropy(pc);

    if (pc.codim == 2) {
      grouprec::GroupPresentation pres = grouprec::hnd_local_presentation(local_descriptor(pc));
      std::optional<quotients::IsotropyGroupKind> by_group =
          grouprec::classify_finite_group(pres, opts.coset_limit);
      if (!by_group)
        throw domain_error("stratum '" + s.id +
                           "': could not certify the isotropy group within the coset limit");
      if (*by_group != iso)
        throw domain_error("stratum '" + s.id +
                           "': the codimension route and the fundamental-group route disagree (" +
                           iso.to_string() + " vs " + by_group->to_string() + ")");
    }

    out.charts.push_back({s.id, m.dimension, iso, chart_model_tag(m.dimension, iso)});
  }
  return out;
}

OrbifoldInputModel quotient_input_model(const quotients::IsotropyGroupKind& g) {
  OrbifoldInputModel m;
  m.dimension = 2;
  m.stratified = quotients::stratify(g);
  quotients::SemialgebraicModel model = quotients::semialgebraic_model(g);
  if (model.singular_germ) m.germs.emplace("origin", *model.singular_germ);
  return m;
}

bool round_trip(const quotients::IsotropyGroupKind& g, const PipelineOptions& opts) {
  AtlasDescriptor atlas = reconstruct_atlas(quotient_input_model(g), opts);
  if (g.family() == quotients::GroupFamily::Trivial)
    return atlas.charts.size() == 1 &&
           atlas.charts.front().isotropy == quotients::IsotropyGroupKind::trivial();
  for (const auto& c : atlas.charts)
    if (c.stratum_id == "origin") return c.isotropy == g;
  return false;
}

}  // namespace orbrec::atlas
