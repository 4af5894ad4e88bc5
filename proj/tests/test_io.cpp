#include <gtest/gtest.h>

#include "artin/error.hpp"
#include "artin/io.hpp"
#include "artin/report.hpp"

using namespace artin;

namespace {

const std::string kFixtures = ARTIN_FIXTURE_DIR;

ParsedInput fixture(const std::string& name) { return parse_input(read_file(kFixtures + "/" + name)); }

void expect_parse_error(const std::string& text, int line, int column, const std::string& word) {
  try {
    parse_input(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(word), std::string::npos) << e.what();
  }
}

std::vector<std::string> modules(const Report& r) {
  std::vector<std::string> out;
  for (auto& h : r.body["homology"]) out.push_back(h["module"].get<std::string>());
  return out;
}

}  // namespace

TEST(Parse, SquareFixture) {
  ParsedInput in = fixture("square.txt");
  EXPECT_EQ(in.graph.vertex_count(), 4u);
  EXPECT_EQ(in.graph.edges().size(), 4u);
  EXPECT_EQ(in.character.weights(), (std::vector<long>{1, 2, 1, 2}));
  ASSERT_TRUE(in.field.has_value());
  EXPECT_TRUE(in.field->is_rational());
}

TEST(Parse, Errors) {
  expect_parse_error("vertex a 1\nvertex b 1\nedge a b 3\n", 3, 10, "odd");
  expect_parse_error("# nothing\n", 2, 1, "empty graph");
  expect_parse_error("vertex a 1\nedge a c 2\n", 2, 8, "unknown vertex");
  expect_parse_error("vertex a 1\nvertex a 2\n", 2, 8, "duplicate vertex");
  expect_parse_error("vertex a 1\nvertex b 1\nedge a b 2\nedge b a 4\n", 4, 6, "duplicate edge");
  expect_parse_error("vertex a x\n", 1, 10, "integer");
  expect_parse_error("vertex a 1\nnode b 1\n", 2, 1, "unknown keyword");
  expect_parse_error("field p 4\nvertex a 1\n", 1, 9, "prime");
  expect_parse_error("vertex a 1 2\n", 1, 12, "unexpected");
  expect_parse_error("vertex a 1\nedge a a 2\n", 2, 8, "loop");
  expect_parse_error("vertex a 1\nvertex b 1\nedge a b 0\n", 3, 10, "at least 2");
}

TEST(Parse, CommentsAndWhitespace) {
  ParsedInput in = parse_input("  vertex a 2 # first\n\n\tvertex b -4\nedge a b 6#x\n");
  EXPECT_EQ(in.character.weights(), (std::vector<long>{2, -4}));
  EXPECT_EQ(in.graph.label(0, 1), 6);
  EXPECT_FALSE(in.field.has_value());
}

TEST(Parse, RoundTrip) {
  for (std::string f : {"dihedral4.txt", "square.txt", "square_diagonal.txt", "square_diagonal_prime.txt"}) {
    ParsedInput a = fixture(f);
    std::string text = serialize(a);
    ParsedInput b = parse_input(text);
    EXPECT_EQ(serialize(b), text) << f;
    EXPECT_EQ(a.character.weights(), b.character.weights());
    EXPECT_EQ(a.graph.names(), b.graph.names());
    ASSERT_EQ(a.graph.edges().size(), b.graph.edges().size());
    for (std::size_t i = 0; i < a.graph.edges().size(); ++i) {
      EXPECT_EQ(a.graph.edges()[i].u, b.graph.edges()[i].u);
      EXPECT_EQ(a.graph.edges()[i].v, b.graph.edges()[i].v);
      EXPECT_EQ(a.graph.edges()[i].label, b.graph.edges()[i].label);
    }
    EXPECT_EQ(a.field.has_value(), b.field.has_value());
  }
}

TEST(Run, Examples) {
  JobConfig job;
  job.input_path = kFixtures + "/square.txt";
  Report sq = run(job);
  EXPECT_EQ(modules(sq), (std::vector<std::string>{
                             "(Lambda/(-1 + t))^3 + Lambda/(1 + t) + Lambda/(1 + t)^2 + "
                             "(Lambda/(1 - t + t^2))^2",
                             "Lambda"}));
  EXPECT_FALSE(sq.mismatch());
  int agreements = 0;
  for (auto& c : sq.checks) agreements += c.status == "agree";
  EXPECT_EQ(agreements, static_cast<int>(sq.checks.size()));
  EXPECT_GE(agreements, 6);

  job.input_path = kFixtures + "/square_diagonal.txt";
  Report rs = run(job);
  EXPECT_EQ(modules(rs)[0], "(Lambda/(1 + t))^3");
  EXPECT_EQ(modules(rs)[1], "Lambda + Lambda/(1 + t)");
  EXPECT_FALSE(rs.mismatch());

  job.input_path = kFixtures + "/dihedral4.txt";
  job.field = FieldSpec::prime(2);
  EXPECT_EQ(modules(run(job))[0], "Lambda");
  job.field = FieldSpec::rationals();
  EXPECT_EQ(modules(run(job))[0], "Lambda/(-1 + t)");
}

TEST(Run, Normalization) {
  ParsedInput in = parse_input("vertex a 2\nvertex b -2\nedge a b 4\n");
  Report r = run_input(in, JobConfig{});
  EXPECT_EQ(r.body["input"]["normalization_divisor"].get<long>(), 2);
  EXPECT_EQ(r.body["homology"][0]["module"].get<std::string>(), "Lambda/(-1 + t)");
  EXPECT_THROW(run_input(parse_input("vertex a 0\n"), JobConfig{}), Error);
}

TEST(Run, JsonDeterministic) {
  JobConfig job;
  job.input_path = kFixtures + "/square.txt";
  job.dump_pages = true;
  job.dump_matrices = true;
  Report a = run(job), b = run(job);
  EXPECT_EQ(a.body.dump(), b.body.dump());
  auto parsed = nlohmann::ordered_json::parse(a.json());
  EXPECT_EQ(parsed["schema_version"].get<int>(), kSchemaVersion);
  EXPECT_TRUE(parsed.contains("timing"));
  EXPECT_TRUE(parsed["matrices"].contains("M_1"));
  std::vector<std::string> keys;
  for (auto& [k, v] : parsed.items()) keys.push_back(k);
  EXPECT_EQ(keys.front(), "schema_version");
  EXPECT_EQ(keys.back(), "timing");
}

TEST(Run, MethodSelection) {
  JobConfig job;
  job.input_path = kFixtures + "/square.txt";
  job.methods = {"snf"};
  Report r = run(job);
  EXPECT_FALSE(r.body["methods"]["ss"]["ran"].get<bool>());
  EXPECT_TRUE(r.checks.size() == 2u);  // shape checks only
  job.methods = {};
  EXPECT_THROW(run(job), Error);
  job.methods = {"magic"};
  EXPECT_THROW(run(job), Error);
  job.methods = {"snf", "ss"};
  job.cross_check = false;
  Report off = run(job);
  EXPECT_TRUE(off.checks.empty());
  EXPECT_EQ(off.body["cross_checks"], "disabled");
}

// A reduction disagreement is reported as a mismatch (exit code 3).
TEST(Run, MismatchExitCode) {
  ParsedInput in = parse_input("field p 2\nvertex a 1\nvertex b 0\nvertex c 1\nedge a b 2\nedge b c 2\n");
  Report r = run_input(in, JobConfig{});
  EXPECT_TRUE(r.mismatch());
  EXPECT_EQ(exit_code(r), 3);
}

TEST(Run, DisconnectedInput) {
  ParsedInput in = parse_input(
      "vertex a 1\nvertex b 2\nvertex c 1\nvertex d 3\nvertex e 3\n"
      "edge a b 4\nedge b c 4\nedge d e 6\n");
  Report r = run_input(in, JobConfig{});
  EXPECT_FALSE(r.mismatch()) << r.text();
  EXPECT_EQ(r.body["methods"]["forest"]["components"].size(), 2u);
}
