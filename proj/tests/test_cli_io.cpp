#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "isgd/catalog.hpp"
#include "isgd/errors.hpp"
#include "isgd/io.hpp"
#include "json.hpp"

using namespace isgd;
using fixtures::data;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = isgd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string squash(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out += tok + " ";
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("isgd_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ParseStructure, ShippedReferenceFile) {
  auto file = parse_structure(read_file(data("reference_s.isgd")));
  EXPECT_EQ(file.table, reference_structure()->table());
  ASSERT_TRUE(file.declared_inverse);
  EXPECT_EQ(oracle::from_library(file.table).mul, oracle::reference_table().mul);
}

TEST(ParseStructure, EmptyMulOnLoopFreeArrows) {
  auto file = parse_structure("[objects]\nu v w\n[arrows]\nf : u -> v\ng : w -> v\n[mul]\n");
  EXPECT_EQ(file.table.arrow_count(), 2u);
  EXPECT_TRUE(validate_semigroupoid(file.table).ok());
}

TEST(ParseStructure, NonComposablePairIsAPositionedError) {
  const std::string text = "[objects]\nu v\n[arrows]\na : u -> v\nx : u -> v\n[mul]\na a = x\n";
  try {
    parse_structure(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(ParseStructure, MissingProductAndDuplicates) {
  EXPECT_THROW(parse_structure("[objects]\no\n[arrows]\ne : o -> o\n[mul]\n"), ParseError);
  EXPECT_THROW(parse_structure("[objects]\no\n[arrows]\ne : o -> o\n[mul]\ne e = e\ne e = e\n"), ParseError);
  EXPECT_THROW(parse_structure("[objects]\no o\n"), ParseError);
  EXPECT_THROW(parse_structure("[objects]\no\n[arrows]\ne : o -> q\n"), ParseError);
  EXPECT_THROW(parse_structure("e : o -> o\n"), ParseError);
  EXPECT_THROW(parse_structure("[objects]\no\n[bogus]\n"), ParseError);
  EXPECT_THROW(parse_structure("[objects]\no\n[arrows]\ne o -> o\n"), ParseError);
}

TEST(ParseStructure, CommentsAndStarNames) {
  auto file = parse_structure("# c\n[objects]  # trailing\no\n[arrows]\ne* : o -> o\n[mul]\ne* e* = e*\n");
  EXPECT_TRUE(file.table.find_arrow("e*"));
}

TEST(ParseAction, ShippedFiles) {
  auto x = load_action(data("reference_x.pact"));
  EXPECT_EQ(x.structure_ref, "reference_s.isgd");
  EXPECT_EQ(x.action, *reference_partial_action());
  EXPECT_EQ(load_action(data("reference_y.pact")).action, *reference_global_action());
  EXPECT_EQ(load_action(data("reference_x_broken.pact")).action, *reference_partial_action_broken());
}

TEST(ParseAction, Errors) {
  auto isg = reference_structure();
  const std::string head = "structure = s.isgd\n[carrier]\n1 2\n";
  EXPECT_THROW(parse_action("[carrier]\n1\n", isg), ParseError);
  EXPECT_THROW(parse_action(head + "[domain a] = 1\n", isg), ParseError);  // most arrows missing
  EXPECT_THROW(parse_action(head + "[domain zz] = 1\n", isg), ParseError);
  EXPECT_THROW(parse_action(head + "[domain a] = 9\n", isg), ParseError);
  EXPECT_THROW(parse_action(head + "[map a] = 1-2\n", isg), ParseError);
  EXPECT_THROW(parse_action("structure = s\n[carrier]\n1 1\n", isg), ParseError);
  try {
    parse_action(head + "[domain a] = 1 7\n", isg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 16u);
  }
}

TEST(RoundTrip, EveryCatalogEntry) {
  for (const auto& entry : catalog()) {
    const std::string text = print_structure(*entry.structure);
    auto parsed = parse_structure(text);
    EXPECT_EQ(parsed.table, entry.structure->table()) << entry.name;
    EXPECT_EQ(squash(print_structure(parsed.table, parsed.declared_inverse)), squash(text));
    for (const auto& a : entry.actions) {
      const std::string atext = print_action(*a.action, entry.name + ".isgd");
      auto back = parse_action(atext, entry.structure);
      EXPECT_EQ(back.action, *a.action) << a.name;
      EXPECT_EQ(back.structure_ref, entry.name + ".isgd");
      EXPECT_EQ(squash(print_action(back.action, back.structure_ref)), squash(atext));
    }
  }
}

TEST(Cli, ValidateStructure) {
  auto r = run_cli({"validate", data("reference_s.isgd").string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, ValidateBrokenAction) {
  auto r = run_cli({"validate", data("reference_x_broken.pact").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[map] theta_a maps 1 to 4, outside X_a"), std::string::npos) << r.out;
}

TEST(Cli, ValidateAllShippedGoodFiles) {
  auto r = run_cli({"validate", data("reference_s.isgd").string(), data("reference_x.pact").string(),
                data("reference_y.pact").string(), data("reference_restricted.pact").string()});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ParseAndIoErrorsExitTwo) {
  EXPECT_EQ(run_cli({"validate", "/nonexistent/file.isgd"}).code, 2);
  auto dir = scratch("bad");
  std::ofstream(dir / "bad.isgd") << "[objects]\nu v\n[arrows]\na : u -> v\n[mul]\na a = a\n";
  auto r = run_cli({"validate", (dir / "bad.isgd").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("6:1:"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, NotAnInverseSemigroupoidExitsOne) {
  auto dir = scratch("band");
  std::ofstream(dir / "band.isgd") << "[objects]\no\n[arrows]\nx : o -> o\ny : o -> o\n[mul]\nx x = x\nx y = x\ny x = y\ny y = y\n";
  EXPECT_EQ(run_cli({"validate", (dir / "band.isgd").string()}).code, 1);
}

TEST(Cli, GlobalizeRestrictedTable) {
  auto r = run_cli({"globalize", data("reference_restricted.pact").string(), "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("classes: 4"), std::string::npos);
  EXPECT_NE(r.out.find("eta_a: e1 -> e2, e2 -> e3, e4 -> e1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("eta_b: e1 -> e1, e2 -> e2, e4 -> e4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("e3 = {(a,2)}"), std::string::npos);
}

TEST(Cli, GlobalizeJsonSchemaAndStability) {
  auto a = run_cli({"globalize", data("reference_x.pact").string(), "--format", "json"});
  auto b = run_cli({"globalize", data("reference_x.pact").string(), "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["seeds"].size(), 14u);
  EXPECT_EQ(doc["classes"].size(), 5u);
  EXPECT_EQ(doc["classes"][0]["label"], "e1");
  EXPECT_EQ(doc["families"].size(), 8u);
  EXPECT_EQ(doc["eta"][0]["arrow"], "a");
  EXPECT_EQ(doc["embedding"][0], nlohmann::json::array({"1", "e1"}));
}

TEST(Cli, GlobalizeDot) {
  auto r = run_cli({"globalize", data("reference_x.pact").string(), "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph globalization {", 0), 0u);
  EXPECT_NE(r.out.find("\"(a,1)\" -- \"(aa*,4)\""), std::string::npos);
  EXPECT_EQ(r.out.find("\"(a,1)\" -- \"(bb*,4)\""), std::string::npos);
  EXPECT_EQ(run_cli({"globalize", data("reference_x.pact").string(), "--format", "xml"}).code, 2);
}

TEST(Cli, GlobalizeInvalidInputExitsOne) {
  EXPECT_EQ(run_cli({"globalize", data("reference_x_broken.pact").string()}).code, 1);
}

TEST(Cli, RestrictReproducesShippedFile) {
  auto r = run_cli({"restrict", data("reference_y.pact").string(), "--subset", "1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto isg = reference_structure();
  EXPECT_EQ(parse_action(r.out, isg).action, load_action(data("reference_restricted.pact")).action);
  EXPECT_EQ(run_cli({"restrict", data("reference_y.pact").string(), "--subset", "1,9"}).code, 2);
}

TEST(Cli, Mediate) {
  auto r = run_cli({"mediate", data("reference_restricted.pact").string(), "--target", data("reference_y.pact").string(),
                "--embedding", "1->1,2->2", "--strict"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("e1 -> 1\n  e2 -> 2\n  e3 -> 3\n  e4 -> 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("injective: no"), std::string::npos);
  EXPECT_NE(r.out.find("fiber injectivity: OK"), std::string::npos);
  EXPECT_NE(r.out.find("uniqueness confirmed by exhaustive enumeration"), std::string::npos);

  auto skipped = run_cli({"mediate", data("reference_restricted.pact").string(), "--target", data("reference_y.pact").string(),
                      "--embedding", "1->1,2->2", "--bound", "10"});
  EXPECT_EQ(skipped.code, 0);
  EXPECT_NE(skipped.out.find("uniqueness skipped (bound)"), std::string::npos);

  auto wrong = run_cli({"mediate", data("reference_restricted.pact").string(), "--target", data("reference_y.pact").string(),
                    "--embedding", "1->2,2->1"});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_EQ(run_cli({"mediate", data("reference_restricted.pact").string(), "--target", data("reference_y.pact").string(),
                 "--embedding", "1->1"})
                .code,
            2);
}

TEST(Cli, CheckProps) {
  auto r = run_cli({"check", data("reference_x.pact").string(), "--props"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("P/E agreement: yes"), std::string::npos);
  EXPECT_NE(r.out.find("derived propositions: OK"), std::string::npos);
  EXPECT_NE(r.out.find("global: no"), std::string::npos);
  auto bad = run_cli({"check", data("reference_x_broken.pact").string(), "--props"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("P/E agreement: yes"), std::string::npos);
}

TEST(Cli, Draw) {
  auto r = run_cli({"draw", data("reference_s.isgd").string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"u\" -> \"v\" [label=\"a\"]"), std::string::npos) << r.out;
}

TEST(Cli, CatalogExportRoundTrips) {
  auto dir = scratch("catalog");
  auto r = run_cli({"catalog", "--out", dir.string()});
  ASSERT_EQ(r.code, 0);
  for (const auto& entry : catalog())
    for (const auto& a : entry.actions) {
      auto loaded = load_action(dir / (a.name + ".pact"));
      EXPECT_EQ(loaded.action, *a.action) << a.name;
    }
  std::vector<std::string> args{"validate"};
  for (const auto& f : std::filesystem::directory_iterator(dir)) args.push_back(f.path().string());
  EXPECT_EQ(run_cli(args).code, 0);
}

TEST(Cli, SampleUsesSeed) {
  auto r = run_cli({"sample", "reference", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto isg = reference_structure();
  EXPECT_EQ(parse_action(r.out, isg).action, load_action(data("reference_restricted.pact")).action);
  EXPECT_EQ(run_cli({"sample", "reference", "--seed", "3"}).out, r.out);
  EXPECT_EQ(run_cli({"sample", "nope", "--seed", "1"}).code, 2);
  EXPECT_EQ(run_cli({"sample", "reference", "--action", "reference_partial", "--seed", "1"}).code, 2);
}
