#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "apl/cli.hpp"
#include "support.hpp"

using namespace apl;
using namespace testing_support;
using Json = io::Json;

namespace {

struct Run {
  int status;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "apl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::string sanitize(std::string ref) {
  for (auto& c : ref)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return ref;
}

}  // namespace

TEST(Cli, CheckExample) {
  const auto r = run({"check", "--alg", "A1", "--identity", "anti-pre-lie-1"});
  EXPECT_EQ(r.status, cli::kPass);
  const auto j = r.json();
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["result"]["identity"], "anti-pre-lie-1");
  EXPECT_EQ(run({"check", "--alg", "A1", "--identity", "pre-lie"}).status, cli::kCheckFailed);
}

TEST(Cli, AffinizationFailureCarriesWitness) {
  const auto r = run({"affinize-check", "--alg", "A2?lambda=0", "--mode", "admissible"});
  EXPECT_EQ(r.status, cli::kCheckFailed);
  const auto c = r.json()["result"]["checks"][0];
  EXPECT_FALSE(c["pass"].get<bool>());
  EXPECT_EQ(c["witness"]["indices"].size(), 6u);
}

TEST(Cli, Sl2SolveThenInduceViaRecipe) {
  const Json doc = {
      {"field", "rational"},
      {"recipe",
       Json::array({Json{{"command", "cocycles solve"}, {"args", {{"lie", "SL2_LIE"}, {"symmetric", true}}}},
                    Json{{"command", "cocycles nondegenerate"},
                         {"args", {{"lie", "SL2_LIE"}, {"symmetric", true}}},
                         {"as", "b"}},
                    Json{{"command", "cocycles induce"}, {"args", {{"lie", "SL2_LIE"}, {"form", "b"}}}, {"as", "apl"}},
                    Json{{"command", "check"}, {"args", {{"alg", "apl"}, {"identity", "anti-pre-lie-2"}}}}})}};
  auto d = io::document_from_json(doc);
  const auto out = cli::run_recipe(d);
  EXPECT_EQ(out.status, cli::kPass) << out.report.dump(2);
  ASSERT_TRUE(d.algebras.count("apl"));
  // The induced product is compatible with the sl2 bracket and passes both axioms.
  EXPECT_EQ(commutator_algebra(d.algebras.at("apl")).data(), cat("SL2_LIE").data());
  EXPECT_TRUE(oracle::holds(d.algebras.at("apl"), IdentityId::anti_pre_lie_1));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "--alg", "NOPE", "--identity", "pre-lie"}).status, cli::kUsage);
  EXPECT_EQ(run({"check", "--alg", "A1", "--identity", "no-such-identity"}).status, cli::kUsage);
  EXPECT_EQ(run({"check", "--alg", "A1", "--bogus", "1"}).status, cli::kUsage);
  EXPECT_EQ(run({}).status, cli::kUsage);
  // Precondition failures are structured entries, not crashes.
  EXPECT_EQ(run({"construct", "pair", "--assoc", "A1", "--p", "A1", "--q", "A1", "--mode", "lie"}).status, cli::kUsage);
  const auto r = run({"construct", "pair", "--assoc", "A1", "--p", "TRUNC_POLY?n=2#P", "--q", "TRUNC_POLY?n=2#P", "--mode", "lie"});
  EXPECT_EQ(r.status, cli::kCheckFailed);
  EXPECT_FALSE(r.json()["pass"].get<bool>());
  EXPECT_EQ(r.json()["result"]["status"], "precondition-failed");
}

TEST(Cli, NonCanonicalScalarWarnsOrRejects) {
  const auto path = write_temp("half.json", R"j({"field":"rational","algebras":{"z":{"dim":1,"tensor":[[["2/4"]]]}}})j");
  const auto lax = run({"--doc", path, "profile", "--alg", "z"});
  EXPECT_NE(lax.err.find("'2/4' is not canonical"), std::string::npos);
  EXPECT_NE(lax.status, cli::kUsage);
  const auto strict = run({"--strict", "--doc", path, "profile", "--alg", "z"});
  EXPECT_EQ(strict.status, cli::kUsage);

  std::vector<std::string> warnings;
  io::ParseOptions opts;
  EXPECT_EQ(io::parse_field_scalar("2/4", io::FieldMode{}, opts, warnings, "x"), Scalar(mpq_class(1, 2)));
  EXPECT_EQ(warnings.size(), 1u);
  opts.strict = true;
  EXPECT_THROW(io::parse_field_scalar("2/4", io::FieldMode{}, opts, warnings, "x"), io::ValidationError);
}

TEST(Cli, SyntaxErrorsReportPosition) {
  try {
    io::parse_document("{\"field\":\"rational\",\n \"algebras\": {oops}}");
    FAIL() << "expected a syntax error";
  } catch (const io::SyntaxError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.column, 15u);
  }
  const auto path = write_temp("bad.json", "{\"field\":\"rational\",\n \"algebras\": {oops}}");
  const auto r = run({"--doc", path, "profile", "--alg", "z"});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_EQ(r.json()["error"]["kind"], "syntax");
  EXPECT_EQ(r.json()["error"]["line"], 2);
}

TEST(Cli, ValidationNamesTheObject) {
  try {
    io::parse_document(R"j({"field":"rational","algebras":{"bad":{"dim":2,"tensor":[[["1"]]]}}})j");
    FAIL() << "expected a validation error";
  } catch (const io::ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
  }
  EXPECT_THROW(io::parse_document(R"j({"field":"rational","algebras":{"q":{"dim":1,"tensor":[[["sqrt(2)"]]]}}})j"),
               io::ValidationError);
  EXPECT_NO_THROW(io::parse_document(R"j({"field":{"quadratic":2},"algebras":{"q":{"dim":1,"tensor":[[["sqrt(2)"]]]}}})j"));
  EXPECT_THROW(io::parse_document(R"j({"field":{"mod":4}})j"), io::ValidationError);
}

TEST(Cli, ModularDocumentsReduceEntries) {
  const auto d = io::parse_document(R"j({"field":{"mod":3},"algebras":{"z":{"dim":1,"tensor":[[["4"]]]}}})j");
  EXPECT_EQ(d.algebras.at("z")(0, 0, 0), Scalar(1));
  EXPECT_EQ(d.field.str(), "mod:3");
}

TEST(Cli, SerializationRoundTripForCatalogObjects) {
  io::Document doc;
  std::vector<std::string> refs = sample_refs();
  for (const char* extra : {"POISSON_DIM3", "PAIR_POISSON?n=3", "UNIT_POISSON", "R6?a=1&b=2", "B5?n=3"}) refs.push_back(extra);
  for (const auto& ref : refs) {
    const auto e = catalog(ref);
    const auto key = sanitize(ref);
    if (e.algebra) doc.algebras.emplace(key, *e.algebra);
    if (e.two) doc.two_ops.emplace(key + "_two", *e.two);
    if (e.form) doc.forms.emplace(key + "_form", *e.form);
    if (e.vector) doc.vectors.emplace(key + "_s", *e.vector);
    for (const auto& [name, m] : e.maps) doc.maps.emplace(key + "_" + name, m);
  }
  const auto g = cat("SL2_LIE");
  doc.representations.emplace("coad", dual_representation(adjoint_representation(g)));
  const std::string text = io::print_document(doc).dump(2);
  const auto back = io::parse_document(text);
  EXPECT_TRUE(io::same_document(doc, back));
  for (const auto& [name, a] : doc.algebras) EXPECT_EQ(back.algebras.at(name), a) << name;
  EXPECT_EQ(io::print_document(back).dump(2), text);
}

TEST(Cli, CatalogExportReparses) {
  const auto r = run({"classify", "catalog", "--id", "A5"});
  ASSERT_EQ(r.status, cli::kPass);
  const Json doc = {{"field", "rational"}, {"algebras", {{"a5", r.json()["result"]["algebra"]}}}};
  const auto d = io::document_from_json(doc);
  EXPECT_EQ(d.algebras.at("a5").data(), cat("A5").data());
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"profile", "--alg", "SL2_APL"},
      {"cocycles", "solve", "--lie", "SL2_LIE", "--symmetric"},
      {"classify", "fingerprint", "--alg", "A2?lambda=2"},
      {"operator", "enumerate-ff", "--p", "2", "--identities", "anti-pre-lie-1,anti-pre-lie-2", "--orbits"},
      {"poisson", "tensor", "--a", "POISSON_DIM3", "--b", "POISSON_DIM3"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_EQ(a.status, b.status) << c[0];
    EXPECT_FALSE(a.out.empty()) << c[0];
  }
}

TEST(Cli, FullRecipeThroughTheBinary) {
  const std::string cmd = std::string(APL_CLI_PATH) + " run " + APL_SOURCE_DIR + "/tests/data/full_recipe.json";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  EXPECT_EQ(WEXITSTATUS(status), 0) << out.substr(0, 2000);
  const auto j = Json::parse(out);
  EXPECT_TRUE(j["pass"].get<bool>());
  // Every subcommand appears among the steps.
  std::set<std::string> seen;
  for (const auto& s : j["steps"]) seen.insert(s["request"]["command"].get<std::string>() +
                                               (s["request"].contains("sub") ? " " + s["request"]["sub"].get<std::string>() : ""));
  for (const auto& spec : cli::command_table()) {
    if (spec.command == "run") continue;
    const std::string name = spec.command + (spec.sub.empty() ? "" : " " + spec.sub);
    EXPECT_TRUE(seen.count(name)) << name;
  }
}
