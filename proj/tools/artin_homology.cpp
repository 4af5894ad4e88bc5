// Homology of even Artin kernels from a graph/character file.

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "artin/error.hpp"
#include "artin/report.hpp"

#ifndef ARTIN_FIXTURE_DIR
#define ARTIN_FIXTURE_DIR "fixtures"
#endif

namespace {

struct Expectation {
  const char* file;
  const char* field;  // empty: from the file
  std::vector<std::string> modules;  // H1, H2, ...
};

// Worked examples; H1 of square_diagonal_prime is the value the complex
// actually produces (three generators split as one free summand and two
// torsion summands).
const std::vector<Expectation> kFixtures = {
    {"dihedral4.txt", "q", {"Lambda/(-1 + t)"}},
    {"dihedral4.txt", "p:2", {"Lambda"}},
    {"square.txt", "",
     {"(Lambda/(-1 + t))^3 + Lambda/(1 + t) + Lambda/(1 + t)^2 + (Lambda/(1 - t + t^2))^2",
      "Lambda"}},
    {"square_diagonal.txt", "", {"(Lambda/(1 + t))^3", "Lambda + Lambda/(1 + t)"}},
    {"square_diagonal_prime.txt", "", {"Lambda + (Lambda/(1 + t))^2", "Lambda^3"}},
};

int self_check(const std::string& dir) {
  int failures = 0;
  for (auto& ex : kFixtures) {
    artin::JobConfig job;
    job.input_path = dir + "/" + ex.file;
    if (*ex.field) job.field = artin::FieldSpec::parse(ex.field);
    std::string label = std::string(ex.file) + (*ex.field ? std::string(" @") + ex.field : "");
    try {
      artin::Report r = artin::run(job);
      std::vector<std::string> got;
      for (auto& h : r.body["homology"]) got.push_back(h["module"].get<std::string>());
      bool ok = got.size() >= ex.modules.size() && !r.mismatch() &&
                std::equal(ex.modules.begin(), ex.modules.end(), got.begin());
      if (!ok) ++failures;
      std::cout << (ok ? "PASS " : "FAIL ") << label << "\n";
      if (!ok)
        for (std::size_t i = 0; i < got.size(); ++i)
          std::cout << "  H" << i + 1 << " = " << got[i] << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << label << ": " << e.what() << "\n";
    }
  }
  return failures == 0 ? 0 : 3;
}

std::set<std::string> split_methods(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of the kernel of a character on an even Artin group"};
  artin::JobConfig job;
  std::string field, methods = "snf,ss,forest,resonant";
  std::string fixtures = ARTIN_FIXTURE_DIR;
  bool no_cross = false, self = false;
  app.add_option("input", job.input_path, "graph/character file");
  app.add_option("--field", field, "q or p:<prime>; overrides the file");
  app.add_option("--kmax", job.kmax, "highest k, reporting H_1..H_{kmax+1}");
  app.add_option("--methods", methods, "comma list of snf, ss, forest, resonant");
  app.add_option("--format", job.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-cross-check", no_cross, "skip the agreement checks");
  app.add_flag("--dump-pages", job.dump_pages, "include spectral sequence pages");
  app.add_flag("--dump-matrices", job.dump_matrices, "include twisted boundary matrices");
  app.add_flag("--self-check", self, "run the shipped fixtures");
  app.add_option("--fixtures", fixtures, "fixture directory for --self-check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (self) return self_check(fixtures);
  if (job.input_path.empty()) {
    std::cerr << "error: no input file\n";
    return 1;
  }
  job.cross_check = !no_cross;
  job.methods = split_methods(methods);
  try {
    if (!field.empty()) job.field = artin::FieldSpec::parse(field);
    job.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    artin::Report r = artin::run(job);
    std::cout << (job.format == "json" ? r.json() : r.text());
    return artin::exit_code(r);
  } catch (const artin::ParseError& e) {
    std::cerr << job.input_path << ": " << e.what() << "\n";
    return 2;
  } catch (const artin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == artin::ErrorCode::Internal ? 3 : 2;
  }
}
