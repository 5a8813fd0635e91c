#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gschur/cli/commands.hpp"
#include "gschur/cli/io.hpp"
#include "gschur/errors.hpp"
#include "gschur/fock/canonical_basis.hpp"
#include "gschur/hecke/graded_specht.hpp"

using namespace gschur;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GSCHUR_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GSCHUR_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

LaurentPoly big_poly() {
  LaurentPoly p;
  p.add_term(-3, mpz_class("123456789012345678901234567890"));
  p.add_term(0, -7);
  p.add_term(2, 1);
  return p;
}

}  // namespace

TEST_CASE("gap text golden for n = 4, e = 4") {
  const DecompositionMatrix d = graded_decomposition_matrix(4, 4);
  CHECK(render_gap_text(d, Convention::VInverse) == fixture("decomp_n4_e4_v_inverse.txt"));
  CHECK(render_classical(d) == fixture("classical_n4_e4.txt"));
  DecompArgs args{.n = 4, .e = 4, .convention = Convention::VInverse};
  CHECK(cmd_decomp(args).output == fixture("decomp_n4_e4_v_inverse.txt"));
  CHECK(cmd_canonical({.n = 4, .e = 4}).output == fixture("canonical_n4_e4.txt"));
}

TEST_CASE("laurent and cyclotomic json") {
  for (const LaurentPoly& p : {LaurentPoly(), LaurentPoly(1), LaurentPoly::v(), big_poly(), big_poly().bar()})
    CHECK(laurent_from_json(Json::parse(laurent_to_json(p).dump())) == p);
  CHECK(laurent_to_json(LaurentPoly::v() + LaurentPoly(1)).dump() == "[[1,1],[0,1]]");
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[1]]")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("{}")), ParseError);

  for (int e : {3, 4, 5, 6}) {
    CycloMatrix m(e, 2, 3);
    m(0, 0) = CycloNum::zeta_power(e, 1);
    m(0, 2) = CycloNum(e, mpq_class(2, 3)) - CycloNum::zeta_power(e, 2);
    m(1, 1) = CycloNum::zeta_power(e, 1).inverse();
    CHECK(matrix_from_json(e, Json::parse(matrix_to_json(m).dump())) == m);
  }
  CHECK_THROWS_AS(matrix_from_json(4, Json::parse(R"([["1","0"],["1"]])")), ParseError);
}

TEST_CASE("decomposition matrices round trip") {
  for (int n = 1; n <= 5; ++n)
    for (Convention conv : {Convention::V, Convention::VInverse}) {
      const DecompositionMatrix d = graded_decomposition_matrix(n, 4);
      const Json j = decomposition_to_json(d, conv);
      CHECK(decomposition_from_json(Json::parse(j.dump())) == d);
    }
  const CharacterDecomposition h = decomposition_from_characters(4, 4);
  std::vector<bool> known;
  const DecompositionMatrix back =
      decomposition_from_json(decomposition_to_json(h.matrix, Convention::VInverse, h.column_known), &known);
  CHECK(known == h.column_known);
  CHECK(back == h.matrix);
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"n": 1})")), ParseError);
}

TEST_CASE("fock vectors round trip") {
  CanonicalBasis engine(3);
  for (int n = 0; n <= 6; ++n)
    for (const Partition& mu : partitions_of(n)) {
      if (!is_e_restricted(mu, 3)) continue;
      const FockVector& b = engine.element(mu);
      CHECK(fock_from_json(Json::parse(fock_to_json(b).dump())) == b);
    }
  const Json doc = Json::parse(cmd_canonical({.n = 4, .e = 4, .format = Format::Json}).output);
  CHECK(doc["elements"].size() == 5);
  for (const Json& el : doc["elements"])
    if (el["restricted"].get<bool>())
      CHECK(fock_from_json(el["expansion"]) == CanonicalBasis(4).element(Partition::parse(el["mu"].get<std::string>())));
}

TEST_CASE("decomp command") {
  const Json two = Json::parse(cmd_decomp({.n = 2, .e = 4, .format = Format::Json}).output);
  CHECK(two["labels"] == Json::array({"2", "1,1"}));
  CHECK(two["entries"] == Json::parse("[[[[0,1]],[]],[[],[[0,1]]]]"));

  const CommandResult both = cmd_decomp({.n = 4, .e = 4, .route = Route::Both});
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("diff on restricted columns: none") != std::string::npos);
  const Json hecke = Json::parse(cmd_decomp({.n = 4, .e = 4, .format = Format::Json, .route = Route::Hecke}).output);
  CHECK(hecke["entries"][0][0].is_null());
  CHECK(hecke["entries"][4][4] == Json::parse("[[0,1]]"));

  CHECK_THROWS_AS(cmd_decomp({.n = 4, .e = 3}), PreconditionViolation);
  const CommandResult small = cmd_decomp({.n = 4, .e = 3, .allow_small_e = true});
  CHECK(!small.warnings.empty());
  CHECK(small.exit_code == 0);
  CHECK_THROWS_AS(cmd_decomp({.n = 0, .e = 4}), PreconditionViolation);
  CHECK_THROWS_AS(cmd_decomp({.n = 13, .e = 4}), BoundExceeded);
}

TEST_CASE("canonical command") {
  for (int e = 2; e <= 6; ++e) CHECK(cmd_canonical({.n = 1, .e = e}).output == "G((1)) = s_(1)\n");
  const std::string five = cmd_canonical({.n = 4, .e = 5}).output;
  for (const Partition& mu : partitions_of(4))
    CHECK(five.find("G((" + mu.to_string() + ")) = s_(" + mu.to_string() + ")\n") != std::string::npos);
  const std::string restricted = cmd_canonical({.n = 4, .e = 4, .restricted_only = true}).output;
  CHECK(restricted.find("G((4))") == std::string::npos);
  CHECK(restricted.find("G((3,1)) = v s_(4) + s_(3,1)") != std::string::npos);
  CHECK_THROWS_AS(cmd_canonical({.n = 3, .e = 3}), PreconditionViolation);
  CHECK_NOTHROW(cmd_canonical({.n = 3, .e = 3, .restricted_only = true}));
}

TEST_CASE("specht command") {
  const Json sign = Json::parse(cmd_specht({.shape = {1, 1}, .e = 5, .format = Format::Json}).output);
  CHECK(sign["T"] == Json::parse(R"([[["-1"]]])"));

  const Json triv = Json::parse(cmd_specht({.shape = {4}, .e = 4, .format = Format::Json}).output);
  CHECK(triv["dim"] == 1);
  CHECK(triv["basis"][0]["degree"] == 1);

  const Json s31 = Json::parse(cmd_specht({.shape = {3, 1}, .e = 4, .format = Format::Json}).output);
  SpechtModel model({3, 1}, 4);
  SpechtRep rep = specht_klr(model);
  verify_grading(rep);
  for (std::size_t k = 0; k < rep.klr_v.sigma.size(); ++k)
    CHECK(matrix_from_json(4, s31["sigma"][k]) == rep.klr_v.sigma[k]);
  for (std::size_t b = 0; b < rep.klr_v.blocks.size(); ++b) {
    CHECK(s31["idempotents"][b]["residues"].get<ResidueSequence>() == rep.klr_v.blocks[b]);
    CHECK(matrix_from_json(4, s31["idempotents"][b]["matrix"]) == rep.klr_v.E[b]);
  }

  const std::string e2 = cmd_specht({.shape = {2, 1}, .e = 2}).output;
  CHECK(e2.find("T_2") != std::string::npos);
  CHECK(e2.find("sigma") == std::string::npos);
}

TEST_CASE("verify command") {
  const CommandResult small = cmd_verify({.n_max = 2, .e_list = {3}});
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("regular H_2") != std::string::npos);
  CHECK(small.output.find("FAIL") == std::string::npos);

  CHECK_THROWS_AS(cmd_verify({.n_max = 4, .e_list = {2}}), E2Unsupported);
  CHECK(cmd_verify({.n_max = 4, .e_list = {2}, .suites = {"fock-commutators"}}).exit_code == 0);
  CHECK_THROWS_AS(parse_suites({"relations", "nonsense"}), PreconditionViolation);
  CHECK(parse_suites({"grading", "all"}) == kAllSuites);

  const VerifyArgs args{.n_max = 4, .e_list = {4, 5}, .suites = {"relations", "two-route"}, .threads = 1};
  VerifyArgs parallel = args;
  parallel.threads = 3;
  const auto serial = run_verify(args);
  const auto threaded = run_verify(parallel);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].subject == threaded[i].subject);
    CHECK(serial[i].ok);
  }
  const Json doc = Json::parse(cmd_verify({.n_max = 3, .e_list = {4}, .format = Format::Json}).output);
  CHECK(doc["failed"] == 0);
  CHECK(doc["records"].size() == doc["passed"]);
}

TEST_CASE("binary exit codes") {
  namespace fs = std::filesystem;
  const fs::path out = fs::temp_directory_path() / "gschur_cli_test_decomp.txt";
  fs::remove(out);
  CHECK(run_binary("decomp --n 4 --e 4 --convention v-inverse --out " + out.string()) == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == fixture("decomp_n4_e4_v_inverse.txt"));
  fs::remove(out);

  CHECK(run_binary("verify --n-max 2 --e 3") == 0);
  CHECK(run_binary("verify --n-max 4 --e 2") == 2);
  CHECK(run_binary("decomp --n 4 --e 3") == 2);
  CHECK(run_binary("decomp --n 4") == 2);
  CHECK(run_binary("decomp --n 4 --e 4 --format yaml") == 2);
  CHECK(run_binary("specht --shape 3,x --e 4") == 2);
  CHECK(run_binary("frobnicate") == 2);
}
