#include "logvec/logvec.h"

#include <cstring>
#include <new>

#include "logtangent/logtangent.hpp"
#include "pipeline/pipeline.hpp"
#include "polycore/format.hpp"

struct logvec_poly {
  logvec::Polynomial p;
};

struct logvec_arrangement {
  logvec::ArrangementFile file;
};

struct logvec_report {
  logvec::Json tree;
  int exit_code = 0;
  std::optional<std::string> curve;
  std::optional<std::string> augmented;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

logvec_status fail(logvec_status s, const std::string& msg, std::size_t line = 0, std::size_t column = 0) {
  last_error = {msg, line, column};
  return s;
}

logvec_status ok() {
  last_error = {};
  return LOGVEC_OK;
}

/// Runs f and maps exceptions onto status codes.
template <class F>
logvec_status guarded(F&& f) {
  try {
    return f();
  } catch (const logvec::ParseError& e) {
    return fail(LOGVEC_PARSE_ERROR, e.what(), e.line(), e.column());
  } catch (const logvec::HypothesisError& e) {
    return fail(LOGVEC_HYPOTHESIS_FAILED, e.what());
  } catch (const logvec::InconsistencyError& e) {
    return fail(LOGVEC_CHECK_FAILED, e.what());
  } catch (const logvec::ResourceLimitError& e) {
    return fail(LOGVEC_RESOURCE_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LOGVEC_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LOGVEC_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(LOGVEC_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

logvec_status null_argument(const char* name) {
  return fail(LOGVEC_INVALID_ARGUMENT, std::string(name) + " is null");
}

logvec::RunOptions options(std::uint32_t prime, std::int64_t seed) {
  logvec::RunOptions o;
  if (prime != LOGVEC_PRIME_FROM_FILE) {
    if (prime < 3) throw std::invalid_argument("prime must be at least 3");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= prime; ++d)
      if (prime % d == 0) throw std::invalid_argument(std::to_string(prime) + " is not prime");
    o.prime = prime;
  }
  if (seed != LOGVEC_SEED_FROM_FILE) {
    if (seed < 0) throw std::invalid_argument("seed must be nonnegative");
    o.seed = static_cast<std::uint64_t>(seed);
  }
  return o;
}

logvec_status status_of(int exit_code) {
  switch (exit_code) {
    case logvec::kExitOk: return LOGVEC_OK;
    case logvec::kExitParse: return LOGVEC_PARSE_ERROR;
    case logvec::kExitHypothesis: return LOGVEC_HYPOTHESIS_FAILED;
    case logvec::kExitInconsistent: return LOGVEC_CHECK_FAILED;
    default: return LOGVEC_ERROR;
  }
}

/// Failure summary from a report's status block.
std::string failure_text(const logvec::Json& tree) {
  const auto& st = tree.at("status");
  const auto& f = st.at("failure");
  if (f.is_object()) {
    if (f.contains("detail")) return f.at("hypothesis").get<std::string>() + ": " + f.at("detail").get<std::string>();
    if (!f.empty()) return f.begin().value().get<std::string>();
  }
  std::string s = "failed checks:";
  if (tree.contains("checks"))
    for (const auto& c : tree.at("checks"))
      if (!c.at("pass").get<bool>()) s += " " + c.at("name").get<std::string>();
  return s;
}

}  // namespace

extern "C" {

const char* logvec_version(void) {
  static const std::string v = logvec::library_version();
  return v.c_str();
}

const char* logvec_status_name(logvec_status status) {
  switch (status) {
    case LOGVEC_OK: return "ok";
    case LOGVEC_ERROR: return "error";
    case LOGVEC_PARSE_ERROR: return "parse error";
    case LOGVEC_HYPOTHESIS_FAILED: return "hypothesis failed";
    case LOGVEC_CHECK_FAILED: return "check failed";
    case LOGVEC_INVALID_ARGUMENT: return "invalid argument";
    case LOGVEC_RESOURCE_LIMIT: return "resource limit";
  }
  return "unknown";
}

const char* logvec_last_error(void) { return last_error.message.c_str(); }

void logvec_last_error_position(size_t* line, size_t* column) {
  if (line) *line = last_error.line;
  if (column) *column = last_error.column;
}

void logvec_string_free(char* s) { std::free(s); }

logvec_status logvec_poly_parse(const char* text, logvec_poly** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new logvec_poly{logvec::parse_polynomial(text)};
    return ok();
  });
}

void logvec_poly_free(logvec_poly* p) { delete p; }

logvec_status logvec_poly_to_string(const logvec_poly* p, char** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(logvec::to_string(p->p));
    return ok();
  });
}

logvec_status logvec_poly_degree(const logvec_poly* p, int* out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  if (p->p.is_zero()) return fail(LOGVEC_INVALID_ARGUMENT, "the zero polynomial has no degree");
  *out = p->p.total_degree();
  return ok();
}

logvec_status logvec_poly_multiply(const logvec_poly* a, const logvec_poly* b, logvec_poly** out) {
  if (!a || !b) return null_argument("operand");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new logvec_poly{a->p * b->p};
    return ok();
  });
}

logvec_status logvec_poly_d0_degrees(const logvec_poly* p, int* degrees, size_t capacity, size_t* count) {
  if (!p) return null_argument("p");
  if (!count) return null_argument("count");
  if (capacity > 0 && !degrees) return null_argument("degrees");
  return guarded([&] {
    auto D = logvec::d0_module(p->p);
    *count = D.degrees.size();
    for (std::size_t i = 0; i < D.degrees.size() && i < capacity; ++i) degrees[i] = D.degrees[i];
    return ok();
  });
}

logvec_status logvec_poly_singularities(const logvec_poly* p, uint64_t seed, long long* mu_total,
                                        long long* tau_total, long long* points) {
  if (!p) return null_argument("p");
  return guarded([&] {
    auto g = logvec::grading(p->p);
    if (g.is_zero || !g.is_homogeneous || g.degree < 1)
      throw logvec::HypothesisError("homogeneous", "expected a nonconstant form");
    if (!logvec::is_reduced(p->p)) throw logvec::HypothesisError("reduced", "the form has a repeated factor");
    auto prof = logvec::singularity_profile(p->p, logvec::ChartOptions{seed});
    if (mu_total) *mu_total = prof.mu_total;
    if (tau_total) *tau_total = prof.tau_total;
    if (points) *points = prof.sing_point_count;
    return ok();
  });
}

logvec_status logvec_arrangement_load(const char* path, logvec_arrangement** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new logvec_arrangement{logvec::load_arrangement_file(path)};
    return ok();
  });
}

logvec_status logvec_arrangement_parse(const char* text, logvec_arrangement** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new logvec_arrangement{logvec::parse_arrangement_file(text)};
    return ok();
  });
}

void logvec_arrangement_free(logvec_arrangement* a) { delete a; }

logvec_status logvec_arrangement_set_curve(logvec_arrangement* a, const char* expr) {
  if (!a) return null_argument("a");
  if (!expr) return null_argument("expr");
  return guarded([&] {
    logvec::SourceExpr e{expr, 1, 1};
    a->file.parse_expr(e);
    a->file.curve = e;
    return ok();
  });
}

logvec_status logvec_arrangement_render(const logvec_arrangement* a, char** out) {
  if (!a) return null_argument("a");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(a->file.render());
    return ok();
  });
}

logvec_status logvec_analyze(const logvec_arrangement* a, uint32_t prime, int64_t seed, logvec_report** out) {
  if (!a) return null_argument("a");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto res = logvec::analyze(a->file, options(prime, seed));
    *out = new logvec_report{std::move(res.report), res.exit_code, std::nullopt, std::nullopt};
    if (res.exit_code == logvec::kExitOk) return ok();
    return fail(status_of(res.exit_code), failure_text((*out)->tree));
  });
}

logvec_status logvec_find_curve(const logvec_arrangement* a, int degree, uint32_t prime, int64_t seed,
                                logvec_report** out) {
  if (!a) return null_argument("a");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto res = logvec::find_curve(a->file, degree, options(prime, seed));
    *out = new logvec_report{std::move(res.report), res.exit_code, res.curve, res.augmented_file};
    if (res.exit_code == logvec::kExitOk) return ok();
    return fail(status_of(res.exit_code), failure_text((*out)->tree));
  });
}

void logvec_report_free(logvec_report* r) { delete r; }

int logvec_report_exit_code(const logvec_report* r) { return r ? r->exit_code : logvec::kExitError; }

logvec_status logvec_report_json(const logvec_report* r, int include_timings, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(logvec::to_json_text(r->tree, include_timings != 0));
    return ok();
  });
}

logvec_status logvec_report_text(const logvec_report* r, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(logvec::render_text(r->tree));
    return ok();
  });
}

logvec_status logvec_report_curve(const logvec_report* r, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  if (!r->curve) return fail(LOGVEC_INVALID_ARGUMENT, "report has no curve");
  return guarded([&] {
    *out = copy_string(*r->curve);
    return ok();
  });
}

logvec_status logvec_report_augmented_file(const logvec_report* r, char** out) {
  if (!r) return null_argument("r");
  if (!out) return null_argument("out");
  if (!r->augmented) return fail(LOGVEC_INVALID_ARGUMENT, "report has no augmented file");
  return guarded([&] {
    *out = copy_string(*r->augmented);
    return ok();
  });
}

logvec_status logvec_report_compare(const logvec_report* r, const char* expected_json, char** differences) {
  if (!r) return null_argument("r");
  if (!expected_json) return null_argument("expected_json");
  return guarded([&] {
    logvec::Json expected;
    try {
      expected = logvec::Json::parse(expected_json);
    } catch (const logvec::Json::parse_error& e) {
      return fail(LOGVEC_PARSE_ERROR, std::string("golden report: ") + e.what());
    }
    auto diffs = logvec::report_differences(expected, r->tree);
    if (differences) {
      std::string s;
      for (const auto& d : diffs) s += d + "\n";
      *differences = copy_string(s);
    }
    if (diffs.empty()) return ok();
    return fail(LOGVEC_CHECK_FAILED, std::to_string(diffs.size()) + " differences from the golden report");
  });
}

}  // extern "C"
