#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbrec/atlas.hpp"
#include "orbrec/error.hpp"
#include "orbrec/model_io.hpp"
#include "orbrec/poly_text.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw orbrec::domain_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw orbrec::domain_error("cannot write '" + out_path + "'");
  out << text;
}

orbrec::quotients::IsotropyGroupKind make_group(const std::string& family, unsigned k) {
  if (family == "trivial") {
    if (k != 1) throw orbrec::domain_error("the trivial group takes no --k");
    return orbrec::quotients::IsotropyGroupKind::trivial();
  }
  if (family == "cyclic") return orbrec::quotients::IsotropyGroupKind::cyclic(k);
  return orbrec::quotients::IsotropyGroupKind::dihedral(k);
}

orbrec::VarNamesPtr parse_vars_flag(const std::string& vars) {
  if (vars.empty()) return nullptr;
  std::vector<std::string> names;
  std::string cur;
  for (char c : vars + " ") {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw orbrec::domain_error("duplicate variable '" + names[i] + "' in --vars");
  if (names.empty()) throw orbrec::domain_error("--vars names no variables");
  return orbrec::make_vars(names);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reconstruction of low-dimensional orbifold atlases"};
  app.require_subcommand(1);

  std::string germ_text, vars_text, in_path, out_path, stratum_id, group_family;
  unsigned k = 1;
  unsigned nmax = orbrec::localalg::kDefaultDegreeCap;
  std::size_t limit = orbrec::grouprec::kDefaultCosetLimit;

  auto add_group_flags = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_family, "group family")
        ->required()
        ->check(CLI::IsMember({"trivial", "cyclic", "dihedral"}));
    cmd->add_option("--k", k, "rotation count of the family")->check(CLI::PositiveNumber);
  };
  auto add_germ_flags = [&](CLI::App* cmd) {
    cmd->add_option("--germ", germ_text, "polynomial germ")->required();
    cmd->add_option("--vars", vars_text,
                    "ambient variables, space or comma separated (default: inferred)");
    cmd->add_option("--nmax", nmax, "truncation degree cap")
        ->check(CLI::PositiveNumber)
        ->envname("ORBREC_NMAX");
  };

  CLI::App* cmd_model = app.add_subcommand("model", "emit the standard quotient model document");
  add_group_flags(cmd_model);
  cmd_model->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* cmd_codim = app.add_subcommand("codim", "codimension of a germ at the origin");
  add_germ_flags(cmd_codim);

  CLI::App* cmd_order = app.add_subcommand("order", "point order recovered from a germ");
  add_germ_flags(cmd_order);

  CLI::App* cmd_fg =
      app.add_subcommand("fundamental-group", "local fundamental-group presentation at a stratum");
  cmd_fg->add_option("--in", in_path, "model document path")->required();
  cmd_fg->add_option("--stratum", stratum_id, "stratum id")->required();
  cmd_fg->add_option("--nmax", nmax, "truncation degree cap")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_NMAX");

  CLI::App* cmd_go = app.add_subcommand("group-order", "order of a finitely presented group");
  cmd_go->add_option("--in", in_path, "presentation path")->required();
  cmd_go->add_option("--limit", limit, "coset allocation limit")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_TC_LIMIT");

  CLI::App* cmd_rec = app.add_subcommand("reconstruct", "reconstruct the atlas of a model");
  cmd_rec->add_option("--in", in_path, "model document path")->required();
  cmd_rec->add_option("--out", out_path, "output path (default: stdout)");
  cmd_rec->add_option("--nmax", nmax, "truncation degree cap")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_NMAX");
  cmd_rec->add_option("--limit", limit, "coset allocation limit")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_TC_LIMIT");

  CLI::App* cmd_rt = app.add_subcommand("roundtrip", "rebuild a standard quotient and compare");
  add_group_flags(cmd_rt);
  cmd_rt->add_option("--nmax", nmax, "truncation degree cap")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_NMAX");
  cmd_rt->add_option("--limit", limit, "coset allocation limit")
      ->check(CLI::PositiveNumber)
      ->envname("ORBREC_TC_LIMIT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    orbrec::atlas::PipelineOptions opts{nmax, limit};

    if (app.got_subcommand(cmd_model)) {
      emit(orbrec::model_io::serialize_model(
               orbrec::model_io::standard_document(make_group(group_family, k))),
           out_path);
    } else if (app.got_subcommand(cmd_codim)) {
      orbrec::RatPoly germ = orbrec::parse_polynomial(germ_text, parse_vars_flag(vars_text));
      orbrec::localalg::MilnorResult r = orbrec::localalg::milnor_codimension(germ, nmax);
      if (r.is_finite())
        std::cout << *r.codimension << "\n";
      else
        std::cout << "infinite\n";
    } else if (app.got_subcommand(cmd_order)) {
      orbrec::RatPoly germ = orbrec::parse_polynomial(germ_text, parse_vars_flag(vars_text));
      std::cout << orbrec::atlas::recover_order(germ, nmax) << "\n";
    } else if (app.got_subcommand(cmd_fg)) {
      orbrec::model_io::ModelDocument doc = orbrec::model_io::parse_model(read_file(in_path));
      orbrec::strata::PointClassDescriptor pc =
          orbrec::atlas::resolve_point_class(doc.model, stratum_id, opts);
      std::cout << orbrec::grouprec::to_text(
          orbrec::grouprec::hnd_local_presentation(orbrec::atlas::local_descriptor(pc)));
    } else if (app.got_subcommand(cmd_go)) {
      orbrec::grouprec::GroupPresentation pres =
          orbrec::grouprec::parse_presentation(read_file(in_path));
      orbrec::grouprec::CosetTable t = orbrec::grouprec::todd_coxeter(pres, limit);
      if (t.status == orbrec::grouprec::CosetTable::Status::Complete)
        std::cout << t.order << "\n";
      else
        std::cout << "exceeded\n";
    } else if (app.got_subcommand(cmd_rec)) {
      orbrec::model_io::ModelDocument doc = orbrec::model_io::parse_model(read_file(in_path));
      emit(orbrec::model_io::serialize_atlas(orbrec::atlas::reconstruct_atlas(doc.model, opts)),
           out_path);
    } else if (app.got_subcommand(cmd_rt)) {
      bool ok = orbrec::atlas::round_trip(make_group(group_family, k), opts);
      std::cout << (ok ? "ok\n" : "fail\n");
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
