#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "gschur/cli/commands.hpp"
#include "gschur/errors.hpp"

using namespace gschur;

namespace {

const std::map<std::string, Format> kFormats = {{"gap-text", Format::GapText}, {"json", Format::Json}};
const std::map<std::string, Convention> kConventions = {{"v", Convention::V}, {"v-inverse", Convention::VInverse}};
const std::map<std::string, Route> kRoutes = {{"fock", Route::Fock}, {"hecke", Route::Hecke}, {"both", Route::Both}};

int emit(const CommandResult& res, const std::string& out_path) {
  std::cerr << res.warnings;
  if (out_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << res.output;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded decomposition numbers of q-Schur algebras"};
  app.require_subcommand(1);

  Format format = Format::GapText;
  std::string out_path;
  int pad = 0;
  std::string shape;

  DecompArgs decomp;
  auto* d = app.add_subcommand("decomp", "graded decomposition matrix");
  d->add_option("--n", decomp.n)->required();
  d->add_option("--e", decomp.e)->required();
  d->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  d->add_option("--convention", decomp.convention)->transform(CLI::CheckedTransformer(kConventions));
  d->add_option("--route", decomp.route)->transform(CLI::CheckedTransformer(kRoutes));
  d->add_flag("--allow-small-e", decomp.allow_small_e);
  d->add_flag("--classical", decomp.classical, "v = 1 table, (lambda, mu) entry d_{lambda' mu'}");
  d->add_option("--pad", pad, "padding length for non-restricted columns");
  d->add_option("--out", out_path);

  CanonicalArgs canonical;
  auto* c = app.add_subcommand("canonical", "canonical basis b^+_mu");
  c->add_option("--n", canonical.n)->required();
  c->add_option("--e", canonical.e)->required();
  c->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  c->add_flag("--restricted-only", canonical.restricted_only);
  c->add_flag("--allow-small-e", canonical.allow_small_e);
  c->add_option("--pad", pad);
  c->add_option("--out", out_path);

  SpechtArgs specht;
  auto* s = app.add_subcommand("specht", "graded Specht module and its KLR generators");
  s->add_option("--shape", shape)->required();
  s->add_option("--e", specht.e)->required();
  s->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  s->add_option("--out", out_path);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the verification suites");
  v->add_option("--n-max", verify.n_max)->required();
  v->add_option("--e", verify.e_list)->required()->delimiter(',');
  v->add_option("--suites", verify.suites)->delimiter(',');
  v->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  v->add_option("--threads", verify.threads);
  v->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::optional<int> pad_opt = pad > 0 ? std::optional<int>(pad) : std::nullopt;
    if (*d) {
      decomp.format = format;
      decomp.pad = pad_opt;
      return emit(cmd_decomp(decomp), out_path);
    }
    if (*c) {
      canonical.format = format;
      canonical.pad = pad_opt;
      return emit(cmd_canonical(canonical), out_path);
    }
    if (*s) {
      specht.shape = Partition::parse(shape);
      specht.format = format;
      return emit(cmd_specht(specht), out_path);
    }
    verify.format = format;
    return emit(cmd_verify(verify), out_path);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const InvariantError& ex) {
    std::cerr << "invariant violation: " << ex.what() << "\n";
    return 3;
  }
}
