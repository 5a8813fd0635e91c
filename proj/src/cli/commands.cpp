#include "gschur/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "gschur/errors.hpp"
#include "gschur/fock/canonical_basis.hpp"
#include "gschur/fock/decomposition.hpp"
#include "gschur/hecke/graded_specht.hpp"
#include "gschur/hecke/klr.hpp"
#include "gschur/hecke/specht.hpp"

namespace gschur {

namespace {

const char* kSmallEWarning = "warning: e < 4 is outside the range where the graded q-Schur theory is established\n";

void check_n_e(int n, int e, bool allow_small_e) {
  if (n < 1) throw PreconditionViolation("n must be at least 1");
  if (e < 2) throw PreconditionViolation("e must be at least 2");
  if (e < 4 && !allow_small_e) throw PreconditionViolation("e < 4 needs --allow-small-e");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_residues(const ResidueSequence& i) {
  std::string s;
  for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s;
}

Json residues_json(const ResidueSequence& i) { return Json(i); }

// Restricted-column differences between the two routes, as (row, col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> route_diff(const DecompositionMatrix& fock,
                                                            const CharacterDecomposition& hecke) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < fock.labels.size(); ++c) {
    if (!hecke.column_known[c]) continue;
    for (std::size_t r = 0; r < fock.labels.size(); ++r)
      if (fock.entries[r][c] != hecke.matrix.entries[r][c]) out.emplace_back(r, c);
  }
  return out;
}

std::string render_matrix(const DecompositionMatrix& d, const DecompArgs& args, const std::vector<bool>& known = {}) {
  return args.classical ? render_classical(d) : render_gap_text(d, args.convention, known);
}

}  // namespace

CommandResult cmd_decomp(const DecompArgs& args) {
  check_n_e(args.n, args.e, args.allow_small_e);
  if (args.classical && args.route != Route::Fock)
    throw PreconditionViolation("--classical needs the full matrix, which only the fock route provides");
  CommandResult res;
  if (args.e < 4) res.warnings = kSmallEWarning;
  EplusOptions opts;
  opts.pad = args.pad;

  std::optional<DecompositionMatrix> fock;
  std::optional<CharacterDecomposition> hecke;
  if (args.route != Route::Hecke) fock = graded_decomposition_matrix(args.n, args.e, true, opts);
  if (args.route != Route::Fock) hecke = decomposition_from_characters(args.n, args.e);

  if (args.route == Route::Fock) {
    res.output = args.format == Format::Json ? dump(decomposition_to_json(*fock, args.convention))
                                             : render_matrix(*fock, args);
    return res;
  }
  if (args.route == Route::Hecke) {
    res.output = args.format == Format::Json
                     ? dump(decomposition_to_json(hecke->matrix, args.convention, hecke->column_known))
                     : render_matrix(hecke->matrix, args, hecke->column_known);
    return res;
  }

  const auto diff = route_diff(*fock, *hecke);
  res.exit_code = diff.empty() ? 0 : 1;
  if (args.format == Format::Json) {
    Json d = Json::array();
    for (const auto& [r, c] : diff)
      d.push_back({{"lambda", fock->labels[r].to_string()},
                   {"mu", fock->labels[c].to_string()},
                   {"fock", laurent_to_json(fock->entries[r][c])},
                   {"hecke", laurent_to_json(hecke->matrix.entries[r][c])}});
    res.output = dump({{"fock", decomposition_to_json(*fock, args.convention)},
                       {"hecke", decomposition_to_json(hecke->matrix, args.convention, hecke->column_known)},
                       {"diff", d}});
    return res;
  }
  std::string out = "fock route\n" + render_matrix(*fock, args) + "\nhecke route\n" +
                    render_matrix(hecke->matrix, args, hecke->column_known) + "\n";
  if (diff.empty()) out += "diff on restricted columns: none\n";
  for (const auto& [r, c] : diff)
    out += "diff (" + fock->labels[r].to_string() + " | " + fock->labels[c].to_string() +
           "): fock " + fock->entries[r][c].to_string() + ", hecke " + hecke->matrix.entries[r][c].to_string() + "\n";
  res.output = out;
  return res;
}

CommandResult cmd_canonical(const CanonicalArgs& args) {
  check_n_e(args.n, args.e, true);
  CommandResult res;
  CanonicalBasis engine(args.e);
  EplusOptions opts;
  opts.pad = args.pad;
  const std::vector<Partition> shapes = partitions_of(args.n);

  Json elements = Json::array();
  std::string text;
  for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
    const Partition& mu = *it;
    const bool restricted = is_e_restricted(mu, args.e);
    if (!restricted && args.restricted_only) continue;
    FockVector b;
    if (restricted) {
      b = engine.element(mu);
    } else {
      if (args.e < 4 && !args.allow_small_e)
        throw PreconditionViolation("non-restricted columns at e < 4 need --allow-small-e or --restricted-only");
      const std::vector<LaurentPoly> col = eplus_column_hat_tilde(mu, padding_for(mu, opts), engine, opts);
      for (std::size_t r = 0; r < shapes.size(); ++r) b.add_term(shapes[r], col[r]);
    }
    elements.push_back({{"mu", mu.to_string()}, {"restricted", restricted}, {"expansion", fock_to_json(b)}});
    text += "G((" + mu.to_string() + ")) = " + b.to_string() + "\n";
  }
  if (args.e < 4 && args.allow_small_e && !args.restricted_only) res.warnings = kSmallEWarning;
  res.output = args.format == Format::Json ? dump({{"n", args.n}, {"e", args.e}, {"elements", elements}}) : text;
  return res;
}

CommandResult cmd_specht(const SpechtArgs& args) {
  if (args.shape.size() < 1) throw PreconditionViolation("--shape must be a nonempty partition");
  if (args.e < 2) throw PreconditionViolation("e must be at least 2");
  const int e = args.e;
  SpechtModel model(args.shape, e);
  SpechtRep rep = e >= 3 ? specht_klr(model) : specht_matrices(model);
  if (e >= 3) verify_grading(rep);

  const std::vector<CycloMatrix>& T = rep.graded ? rep.hecke_v.T : rep.hecke.T;
  const KlrData& klr = rep.graded ? rep.klr_v : rep.klr;
  CommandResult res;
  if (e < 3) res.warnings = "warning: no KLR generators for e = 2, printing T_k only\n";

  if (args.format == Format::Json) {
    Json basis = Json::array();
    for (std::size_t s = 0; s < rep.tableaux.size(); ++s)
      basis.push_back({{"tableau", rep.tableaux[s].label()},
                       {"residues", residues_json(rep.residues[s])},
                       {"degree", rep.degrees[s]}});
    auto list = [](const std::vector<CycloMatrix>& ms) {
      Json out = Json::array();
      for (const auto& m : ms) out.push_back(matrix_to_json(m));
      return out;
    };
    Json doc = {{"shape", args.shape.to_string()}, {"e", e}, {"dim", rep.tableaux.size()}, {"basis", basis},
                {"T", list(T)}};
    if (e >= 3) {
      Json idem = Json::array();
      for (std::size_t b = 0; b < klr.blocks.size(); ++b)
        idem.push_back({{"residues", residues_json(klr.blocks[b])}, {"matrix", matrix_to_json(klr.E[b])}});
      doc["X"] = list(klr.X);
      doc["idempotents"] = idem;
      doc["t"] = list(klr.t);
      doc["sigma"] = list(klr.sigma);
    }
    res.output = dump(doc);
    return res;
  }

  std::ostringstream out;
  out << "S^(" << args.shape.to_string() << ")  e=" << e << "  dim " << rep.tableaux.size() << "\n";
  out << "basis (tableau  residues  degree)\n";
  for (std::size_t s = 0; s < rep.tableaux.size(); ++s)
    out << "  " << rep.tableaux[s].label() << "  " << residue_label(rep.residues[s]) << "  " << rep.degrees[s]
        << "\n";
  for (std::size_t k = 0; k < T.size(); ++k) out << "T_" << k + 1 << "\n" << matrix_to_text(T[k]);
  if (e >= 3) {
    for (std::size_t a = 0; a < klr.X.size(); ++a) out << "X_" << a + 1 << "\n" << matrix_to_text(klr.X[a]);
    for (std::size_t b = 0; b < klr.blocks.size(); ++b)
      out << "e(" << join_residues(klr.blocks[b]) << ")\n" << matrix_to_text(klr.E[b]);
    for (std::size_t a = 0; a < klr.t.size(); ++a) out << "t_" << a + 1 << "\n" << matrix_to_text(klr.t[a]);
    for (std::size_t k = 0; k < klr.sigma.size(); ++k)
      out << "sigma_" << k + 1 << "\n" << matrix_to_text(klr.sigma[k]);
  }
  res.output = out.str();
  return res;
}

std::vector<std::string> parse_suites(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const std::string& name : names) {
    if (name == "all") return kAllSuites;
    if (std::find(kAllSuites.begin(), kAllSuites.end(), name) == kAllSuites.end())
      throw PreconditionViolation("unknown suite " + name);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (out.empty()) throw PreconditionViolation("no suites selected");
  return out;
}

namespace {

using Records = std::vector<VerifyRecord>;

std::string shape_subject(const Partition& lambda) { return "S^(" + lambda.to_string() + ")"; }

Records relations_job(int n, int e) {
  Records out;
  auto record = [&](const std::string& subject, const KlrReport& report) {
    out.push_back({"relations", n, e, subject, report.ok(), report.failures()});
  };
  for (const Partition& lambda : partitions_of(n)) {
    SpechtModel model(lambda, e);
    SpechtRep rep = specht_klr(model);
    record(shape_subject(lambda), check_klr_relations(rep.hecke, rep.klr));
    verify_grading(rep);
    const bool spans = klr_spans_image(rep);
    out.push_back({"relations", n, e, shape_subject(lambda) + " spanning", spans,
                   spans ? "" : "KLR words do not span the image of H_n"});
  }
  if (n <= 3) {
    const HeckeRep reg = regular_representation(n, e);
    record("regular H_" + std::to_string(n), check_klr_relations(reg, build_klr(reg, residue_candidates(partitions_of(n), e))));
  }
  return out;
}

Records grading_job(int n, int e) {
  Records out;
  for (const Partition& lambda : partitions_of(n)) {
    SpechtModel model(lambda, e);
    SpechtRep small = specht_klr(model);
    verify_grading(small, WordChoice::SmallestDescent);
    SpechtRep large = specht_klr(model);
    verify_grading(large, WordChoice::LargestDescent);
    std::string detail;
    for (std::size_t s = 0; s < small.tableaux.size(); ++s)
      if (small.degrees[s] != large.degrees[s])
        detail += "deg v_" + small.tableaux[s].label() + " depends on the reduced word; ";
    const GradedCharacter ch = graded_character(small);
    if (character_total(ch).at_one() != static_cast<long>(small.tableaux.size()))
      detail += "character does not evaluate to the dimension; ";
    out.push_back({"grading", n, e, shape_subject(lambda), detail.empty(), detail});
  }
  return out;
}

Records characters_job(int n, int e) {
  Records out;
  for (const Partition& lambda : partitions_of(n)) {
    SpechtModel model(lambda, e);
    SpechtRep rep = specht_klr(model);
    verify_grading(rep);
    const GramAnalysis g = gram_form(model, rep);
    std::string detail;
    bool nonzero = false;
    for (const auto& [i, p] : g.simple_character) {
      nonzero = nonzero || !p.is_zero();
      if (!p.is_bar_symmetric()) detail += "ch D at " + residue_label(i) + " is " + p.to_string() + "; ";
    }
    if (nonzero != is_e_restricted(lambda, e))
      detail += nonzero ? "nonzero head for a non-restricted shape; " : "zero head for a restricted shape; ";
    out.push_back({"characters", n, e, "D^(" + lambda.to_string() + ")", detail.empty(), detail});
  }
  return out;
}

Records two_route_job(int n, int e) {
  const DecompositionMatrix fock = graded_decomposition_matrix(n, e, true);
  const CharacterDecomposition hecke = decomposition_from_characters(n, e);
  std::string detail;
  for (const auto& [r, c] : route_diff(fock, hecke))
    detail += "(" + fock.labels[r].to_string() + " | " + fock.labels[c].to_string() + ") fock " +
              fock.entries[r][c].to_string() + " hecke " + hecke.matrix.entries[r][c].to_string() + "; ";
  return {{"two-route", n, e, "restricted columns", detail.empty(), detail}};
}

Records commutator_job(int m, int e) {
  std::string detail;
  for (const Partition& lambda : partitions_of(m)) {
    const FockVector s = FockVector::basis(lambda);
    for (int i = 0; i < e; ++i) {
      const AddableRemovable ar = addable_removable(lambda, i, e);
      const int weight = static_cast<int>(ar.addable.size()) - static_cast<int>(ar.removable.size());
      if (e_apply(i, f_apply(i, s, e), e) - f_apply(i, e_apply(i, s, e), e) != quantum_integer(weight) * s)
        detail += "[e_" + std::to_string(i) + ", f_" + std::to_string(i) + "] on s_(" + lambda.to_string() + "); ";
      for (int j = 0; j < e; ++j)
        if (j != i && e_apply(i, f_apply(j, s, e), e) != f_apply(j, e_apply(i, s, e), e))
          detail += "[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "] on s_(" + lambda.to_string() + "); ";
    }
  }
  return {{"fock-commutators", m, e, "level 1 Fock space", detail.empty(), detail}};
}

bool needs_klr(const std::string& suite) { return suite != "fock-commutators"; }

}  // namespace

std::vector<VerifyRecord> run_verify(const VerifyArgs& args) {
  if (args.n_max < 1) throw PreconditionViolation("--n-max must be at least 1");
  if (args.n_max > kDefaultHeckeBound) throw BoundExceeded("--n-max exceeds the Hecke bound " + std::to_string(kDefaultHeckeBound));
  if (args.e_list.empty()) throw PreconditionViolation("no values of e given");
  const std::vector<std::string> suites = parse_suites(args.suites);
  for (int e : args.e_list) {
    if (e < 2) throw PreconditionViolation("e must be at least 2");
    if (e == 2)
      for (const std::string& s : suites)
        if (needs_klr(s)) throw E2Unsupported("suite " + s + " needs the KLR presentation, which excludes e = 2");
  }

  std::vector<std::function<Records()>> jobs;
  for (const std::string& suite : suites)
    for (int e : args.e_list)
      for (int n = suite == "fock-commutators" ? 0 : 1; n <= args.n_max; ++n) {
        if (suite == "relations") jobs.push_back([n, e] { return relations_job(n, e); });
        if (suite == "grading") jobs.push_back([n, e] { return grading_job(n, e); });
        if (suite == "characters") jobs.push_back([n, e] { return characters_job(n, e); });
        if (suite == "two-route") jobs.push_back([n, e] { return two_route_job(n, e); });
        if (suite == "fock-commutators") jobs.push_back([n, e] { return commutator_job(n, e); });
      }

  auto guarded = [](const std::function<Records()>& job) -> Records {
    try {
      return job();
    } catch (const InvariantError& ex) {
      return {{"invariant", 0, 0, "exception", false, ex.what()}};
    }
  };

  const unsigned threads = std::max(1u, args.threads ? args.threads : std::thread::hardware_concurrency());
  std::vector<Records> results(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += threads) {
    const std::size_t stop = std::min(jobs.size(), start + threads);
    if (threads == 1) {
      results[start] = guarded(jobs[start]);
      continue;
    }
    std::vector<std::future<Records>> wave;
    for (std::size_t j = start; j < stop; ++j) wave.push_back(std::async(std::launch::async, guarded, jobs[j]));
    for (std::size_t j = start; j < stop; ++j) results[j] = wave[j - start].get();
  }

  std::vector<VerifyRecord> out;
  for (const Records& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

CommandResult cmd_verify(const VerifyArgs& args) {
  const std::vector<VerifyRecord> records = run_verify(args);
  std::size_t failed = 0;
  for (const VerifyRecord& r : records) failed += !r.ok;
  CommandResult res;
  res.exit_code = failed ? 1 : 0;
  if (args.format == Format::Json) {
    Json list = Json::array();
    for (const VerifyRecord& r : records)
      list.push_back({{"suite", r.suite}, {"n", r.n}, {"e", r.e}, {"subject", r.subject}, {"ok", r.ok},
                      {"detail", r.detail}});
    res.output = dump({{"passed", records.size() - failed}, {"failed", failed}, {"records", list}});
    return res;
  }
  std::string out;
  for (const VerifyRecord& r : records) {
    out += std::string(r.ok ? "PASS" : "FAIL") + "  " + r.suite + "  n=" + std::to_string(r.n) +
           " e=" + std::to_string(r.e) + "  " + r.subject;
    if (!r.ok) out += "  " + r.detail;
    out += "\n";
  }
  out += std::to_string(records.size() - failed) + " passed, " + std::to_string(failed) + " failed\n";
  res.output = out;
  return res;
}

}  // namespace gschur
