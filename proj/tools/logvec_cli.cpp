// logvec command line: analyze, find-curve, add, corpus.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logvec/logvec.h"

#ifndef LOGVEC_CORPUS_DIR
#define LOGVEC_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;

namespace {

struct ArrangementDeleter {
  void operator()(logvec_arrangement* a) const { logvec_arrangement_free(a); }
};
struct ReportDeleter {
  void operator()(logvec_report* r) const { logvec_report_free(r); }
};
using ArrangementPtr = std::unique_ptr<logvec_arrangement, ArrangementDeleter>;
using ReportPtr = std::unique_ptr<logvec_report, ReportDeleter>;

/// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  logvec_string_free(s);
  return out;
}

int exit_code(logvec_status s) {
  switch (s) {
    case LOGVEC_OK:
    case LOGVEC_PARSE_ERROR:
    case LOGVEC_HYPOTHESIS_FAILED:
    case LOGVEC_CHECK_FAILED:
      return static_cast<int>(s);
    default:
      return 1;
  }
}

int report_error(const std::string& where, logvec_status s) {
  std::size_t line = 0, col = 0;
  logvec_last_error_position(&line, &col);
  std::cerr << where;
  if (s == LOGVEC_PARSE_ERROR && line > 0) std::cerr << ':' << line << ':' << col;
  std::cerr << ": " << logvec_status_name(s) << ": " << logvec_last_error() << '\n';
  return exit_code(s);
}

bool write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string file;
  std::uint32_t prime = LOGVEC_PRIME_FROM_FILE;
  std::int64_t seed = LOGVEC_SEED_FROM_FILE;
  std::string json;
  bool timings = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_json = true) {
  cmd->add_option("file", c.file, "arrangement file")->required();
  cmd->add_option("--prime", c.prime, "work over Z/p (advisory cross-check)");
  cmd->add_option("--seed", c.seed, "seed for charts and random draws")->check(CLI::NonNegativeNumber);
  if (with_json) {
    cmd->add_option("--json", c.json, "write the machine-readable report here ('-' for stdout)");
    cmd->add_flag("--timings", c.timings, "include stage timings in the JSON report");
    cmd->add_flag("-q,--quiet", c.quiet, "no text report");
  }
}

ArrangementPtr load(const std::string& path, int& code) {
  logvec_arrangement* a = nullptr;
  auto s = logvec_arrangement_load(path.c_str(), &a);
  if (s != LOGVEC_OK) code = report_error(path, s);
  return ArrangementPtr(a);
}

/// Prints the text report and writes JSON if asked; returns the exit code.
int emit(const Common& c, logvec_report* r, logvec_status s) {
  if (!r) return report_error(c.file, s);
  const std::string error = logvec_last_error();
  if (!c.quiet && c.json != "-") {
    char* text = nullptr;
    logvec_report_text(r, &text);
    std::cout << take(text);
  }
  if (!c.json.empty()) {
    char* json = nullptr;
    logvec_report_json(r, c.timings ? 1 : 0, &json);
    if (!write_file(c.json, take(json))) return 1;
  }
  if (s != LOGVEC_OK) std::cerr << c.file << ": " << logvec_status_name(s) << ": " << error << '\n';
  return exit_code(s);
}

int run_analyze(const Common& c, const std::string& curve) {
  int code = 0;
  auto a = load(c.file, code);
  if (!a) return code;
  if (!curve.empty()) {
    auto s = logvec_arrangement_set_curve(a.get(), curve.c_str());
    if (s != LOGVEC_OK) return report_error("--curve", s);
  }
  logvec_report* r = nullptr;
  auto s = logvec_analyze(a.get(), c.prime, c.seed, &r);
  ReportPtr guard(r);
  return emit(c, r, s);
}

int run_find_curve(const Common& c, int degree, std::string out) {
  int code = 0;
  auto a = load(c.file, code);
  if (!a) return code;
  logvec_report* r = nullptr;
  auto s = logvec_find_curve(a.get(), degree, c.prime, c.seed, &r);
  ReportPtr guard(r);
  int rc = emit(c, r, s);
  if (s != LOGVEC_OK || !r) return rc;
  char* text = nullptr;
  if (logvec_report_augmented_file(r, &text) != LOGVEC_OK) return report_error(c.file, LOGVEC_ERROR);
  if (out.empty()) {
    fs::path p(c.file);
    out = (p.parent_path() / (p.stem().string() + ".with-curve.arr")).string();
  }
  if (!write_file(out, take(text))) return 1;
  if (!c.quiet) std::cout << "augmented arrangement written to " << out << '\n';
  return rc;
}

int run_corpus(const std::string& dir, bool update, bool timings) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.path().extension() == ".arr") files.push_back(e.path());
  if (ec) {
    std::cerr << "cannot read corpus directory " << dir << ": " << ec.message() << '\n';
    return 1;
  }
  std::sort(files.begin(), files.end());
  int failures = 0;
  for (const auto& f : files) {
    fs::path golden = fs::path(dir) / "golden" / (f.stem().string() + ".json");
    int code = 0;
    auto a = load(f.string(), code);
    if (!a) {
      ++failures;
      continue;
    }
    logvec_report* r = nullptr;
    auto s = logvec_analyze(a.get(), LOGVEC_PRIME_FROM_FILE, LOGVEC_SEED_FROM_FILE, &r);
    ReportPtr guard(r);
    if (!r) {
      std::cout << "FAIL " << f.filename().string() << "  (" << logvec_last_error() << ")\n";
      ++failures;
      continue;
    }
    if (update) {
      char* json = nullptr;
      logvec_report_json(r, timings ? 1 : 0, &json);
      fs::create_directories(golden.parent_path());
      if (!write_file(golden.string(), take(json))) return 1;
      std::cout << "UPDATED " << f.filename().string() << "  (exit " << exit_code(s) << ")\n";
      continue;
    }
    if (!fs::exists(golden)) {
      std::cout << "FAIL " << f.filename().string() << "  (no golden report)\n";
      ++failures;
      continue;
    }
    char* diffs = nullptr;
    auto cmp = logvec_report_compare(r, read_file(golden).c_str(), &diffs);
    std::string d = take(diffs);
    if (cmp == LOGVEC_OK) {
      std::cout << "PASS " << f.filename().string() << "  (exit " << exit_code(s) << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL " << f.filename().string() << '\n';
      if (cmp != LOGVEC_CHECK_FAILED) std::cout << "  " << logvec_last_error() << '\n';
      std::istringstream lines(d);
      for (std::string l; std::getline(lines, l);) std::cout << "  " << l << '\n';
    }
  }
  std::cout << files.size() - static_cast<std::size_t>(failures) << "/" << files.size() << " corpus reports match\n";
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logvec: logarithmic vector fields of plane curve arrangements"};
  app.set_version_flag("--version", std::string(logvec_version()));
  app.require_subcommand(1);

  Common an;
  auto* analyze = app.add_subcommand("analyze", "singularities, D0, freeness and the addition pipeline");
  add_common(analyze, an);

  Common fc;
  int degree = 0;
  std::string out;
  auto* find = app.add_subcommand("find-curve", "smooth curve through all singular points");
  add_common(find, fc);
  find->add_option("--degree", degree, "degree of the curve")->required()->check(CLI::PositiveNumber);
  find->add_option("--out", out, "augmented arrangement file (default <file>.with-curve.arr)");

  Common ad;
  std::string curve;
  auto* add = app.add_subcommand("add", "analyze the arrangement with an added curve");
  add_common(add, ad);
  add->add_option("--curve", curve, "equation of the added curve")->required();

  std::string dir = LOGVEC_CORPUS_DIR;
  bool update = false, corpus_timings = false;
  auto* corpus = app.add_subcommand("corpus", "run the bundled corpus and diff against golden reports");
  corpus->add_option("--dir", dir, "corpus directory");
  corpus->add_flag("--update", update, "rewrite the golden reports");
  corpus->add_flag("--timings", corpus_timings, "keep timings when rewriting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*analyze) return run_analyze(an, "");
  if (*find) return run_find_curve(fc, degree, out);
  if (*add) return run_analyze(ad, curve);
  if (*corpus) return run_corpus(dir, update, corpus_timings);
  return 1;
}
