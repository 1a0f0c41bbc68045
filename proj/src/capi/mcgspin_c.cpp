#include "mcgspin/mcgspin.h"

#include <cstring>
#include <new>

#include "mcgspin/commands.hpp"
#include "mcgspin/errors.hpp"
#include "mcgspin/script.hpp"

struct mcg_factorization {
  mcgspin::PositiveFactorization value;
};
struct mcg_form {
  mcgspin::QuadraticForm value;
};
struct mcg_script {
  mcgspin::script::Script value;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

mcg_status status_of(mcgspin::ErrorKind kind) {
  using mcgspin::ErrorKind;
  switch (kind) {
    case ErrorKind::DimensionMismatch: return MCG_E_DIMENSION;
    case ErrorKind::Precondition: return MCG_E_PRECONDITION;
    case ErrorKind::NotFound: return MCG_E_NOT_FOUND;
    case ErrorKind::Unavailable: return MCG_E_UNAVAILABLE;
    case ErrorKind::Overflow: return MCG_E_OVERFLOW;
    case ErrorKind::Parse: return MCG_E_PARSE;
    case ErrorKind::Guard: return MCG_E_GUARD;
  }
  return MCG_E_INTERNAL;
}

mcg_status fail(mcg_status s, std::string message, std::size_t line = 0, std::size_t column = 0) {
  last_error = {std::move(message), line, column};
  return s;
}

// Runs f, translating every exception into a status and the last error.
template <class F>
mcg_status guarded(F&& f) {
  try {
    last_error = {};
    f();
    return MCG_OK;
  } catch (const mcgspin::ParseError& e) {
    return fail(status_of(e.kind()), e.message(), e.line(), e.column());
  } catch (const mcgspin::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(MCG_E_PARSE, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(MCG_E_GUARD, "out of memory");
  } catch (const std::exception& e) {
    return fail(MCG_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MCG_E_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool any_null() { return false; }
template <class T, class... Rest>
bool any_null(const T* p, const Rest*... rest) {
  return p == nullptr || any_null(rest...);
}

mcg_status null_argument() { return fail(MCG_E_INVALID_ARGUMENT, "null pointer argument"); }

mcg_status emit(const mcgspin::Json& cert, char** json, int* verdict) {
  return guarded([&] {
    *json = dup(mcgspin::canonical_dump(cert));
    *verdict = cert.at("results").at("verdict").get<bool>() ? 1 : 0;
  });
}

template <class F>
mcg_status certify(char** json, int* verdict, F&& produce) {
  if (any_null(json, verdict)) return null_argument();
  mcgspin::Json cert;
  const mcg_status s = guarded([&] { cert = produce(); });
  return s == MCG_OK ? emit(cert, json, verdict) : s;
}

}  // namespace

extern "C" {

const char* mcg_version(void) { return mcgspin::kToolVersion; }

const char* mcg_status_name(mcg_status status) {
  switch (status) {
    case MCG_OK: return "ok";
    case MCG_E_INVALID_ARGUMENT: return "invalid argument";
    case MCG_E_PARSE: return "parse error";
    case MCG_E_DIMENSION: return "dimension mismatch";
    case MCG_E_PRECONDITION: return "precondition violated";
    case MCG_E_NOT_FOUND: return "not found";
    case MCG_E_UNAVAILABLE: return "unavailable";
    case MCG_E_OVERFLOW: return "overflow";
    case MCG_E_GUARD: return "size guard";
    case MCG_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mcg_last_error_message(void) { return last_error.message.c_str(); }
size_t mcg_last_error_line(void) { return last_error.line; }
size_t mcg_last_error_column(void) { return last_error.column; }

void mcg_string_free(char* s) { std::free(s); }

mcg_status mcg_factorization_builtin(const char* name, int genus, int k, mcg_factorization** out) {
  if (any_null(name, out)) return null_argument();
  return guarded([&] { *out = new mcg_factorization{mcgspin::commands::builtin_factorization(name, genus, k)}; });
}

mcg_status mcg_factorization_from_json(const char* json, mcg_factorization** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] {
    *out = new mcg_factorization{mcgspin::factorization_from_json(mcgspin::Json::parse(json))};
  });
}

mcg_status mcg_factorization_to_json(const mcg_factorization* p, char** out) {
  if (any_null(p, out)) return null_argument();
  return guarded([&] { *out = dup(mcgspin::canonical_dump(mcgspin::to_json(p->value))); });
}

mcg_status mcg_factorization_genus(const mcg_factorization* p, int* out) {
  if (any_null(p, out)) return null_argument();
  *out = p->value.genus();
  return guarded([] {});
}

mcg_status mcg_factorization_length(const mcg_factorization* p, size_t* out) {
  if (any_null(p, out)) return null_argument();
  *out = p->value.length();
  return guarded([] {});
}

mcg_status mcg_factorization_boundary_power(const mcg_factorization* p, int* out) {
  if (any_null(p, out)) return null_argument();
  *out = p->value.boundary_power();
  return guarded([] {});
}

mcg_status mcg_factorization_fiber_sum(const mcg_factorization* p1, const mcg_factorization* p2,
                                       mcg_factorization** out) {
  if (any_null(p1, p2, out)) return null_argument();
  return guarded([&] {
    *out = new mcg_factorization{
        mcgspin::fiber_sum(p1->value, p2->value, mcgspin::TwistWord::identity(p1->value.genus()))};
  });
}

void mcg_factorization_free(mcg_factorization* p) { delete p; }

mcg_status mcg_form_parse(int genus, const char* text, mcg_form** out) {
  if (any_null(text, out)) return null_argument();
  if (genus < 1) return fail(MCG_E_INVALID_ARGUMENT, "genus must be positive");
  return guarded([&] { *out = new mcg_form{mcgspin::parse_form_text(genus, text)}; });
}

mcg_status mcg_form_to_text(const mcg_form* q, char** out) {
  if (any_null(q, out)) return null_argument();
  return guarded([&] { *out = dup(mcgspin::form_text(q->value)); });
}

mcg_status mcg_form_arf(const mcg_form* q, int* out) {
  if (any_null(q, out)) return null_argument();
  return guarded([&] { *out = mcgspin::arf_invariant(q->value); });
}

mcg_status mcg_form_evaluate(const mcg_form* q, const char* sparse_class, int* out) {
  if (any_null(q, sparse_class, out)) return null_argument();
  return guarded([&] {
    *out = mcgspin::eval_quadratic(q->value, mcgspin::parse_class_text(q->value.genus(), sparse_class));
  });
}

void mcg_form_free(mcg_form* q) { delete q; }

mcg_status mcg_certify_spin(const mcg_factorization* p, const mcg_form* q, char** json, int* verdict) {
  if (!p) return null_argument();
  return certify(json, verdict, [&] {
    return mcgspin::commands::check_spin(p->value, q ? std::optional(q->value) : std::nullopt);
  });
}

mcg_status mcg_certify_relation(const mcg_factorization* p, char** json, int* verdict) {
  if (!p) return null_argument();
  return certify(json, verdict, [&] { return mcgspin::commands::check_relation(p->value); });
}

mcg_status mcg_certify_invariants(const mcg_factorization* p, const char* signature, char** json, int* verdict) {
  if (!p) return null_argument();
  return certify(json, verdict,
                 [&] { return mcgspin::commands::invariants(p->value, signature ? signature : ""); });
}

mcg_status mcg_certify_h1(const mcg_factorization* p, char** json, int* verdict) {
  if (!p) return null_argument();
  return certify(json, verdict, [&] { return mcgspin::commands::h1(p->value); });
}

mcg_status mcg_certify_geography(int64_t max_m, char** json, int* verdict) {
  return certify(json, verdict, [&] { return mcgspin::commands::geography(max_m); });
}

mcg_status mcg_geography_tsv(int64_t max_m, char** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = dup(mcgspin::commands::geography_tsv(max_m)); });
}

mcg_status mcg_geography_plot_data(int64_t max_m, char** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = dup(mcgspin::commands::geography_plot_data(max_m)); });
}

mcg_status mcg_certify_theorem_a(const char* presentation, char** json, int* verdict) {
  if (!presentation) return null_argument();
  return certify(json, verdict, [&] { return mcgspin::commands::theorem_a(presentation); });
}

mcg_status mcg_certify_theorem_b(int genus, int k, char** json, int* verdict) {
  return certify(json, verdict, [&] { return mcgspin::commands::theorem_b(genus, k); });
}

mcg_status mcg_verify_paper(char** json, int* verdict) {
  if (any_null(json, verdict)) return null_argument();
  return guarded([&] {
    const mcgspin::Json suite = mcgspin::commands::verify_paper();
    bool ok = true;
    for (const auto& c : suite) ok = ok && c.at("results").at("verdict").get<bool>();
    *json = dup(mcgspin::canonical_dump(suite));
    *verdict = ok ? 1 : 0;
  });
}

mcg_status mcg_compare_certificates(const char* actual, const char* expected, int* same) {
  if (any_null(actual, expected, same)) return null_argument();
  return guarded([&] {
    *same = mcgspin::commands::same_certificates(mcgspin::Json::parse(actual), mcgspin::Json::parse(expected)) ? 1 : 0;
  });
}

mcg_status mcg_script_parse(const char* text, mcg_script** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = new mcg_script{mcgspin::script::parse_script(text)}; });
}

mcg_status mcg_script_to_text(const mcg_script* s, char** out) {
  if (any_null(s, out)) return null_argument();
  return guarded([&] { *out = dup(mcgspin::script::to_text(s->value)); });
}

mcg_status mcg_script_statement_count(const mcg_script* s, size_t* out) {
  if (any_null(s, out)) return null_argument();
  *out = s->value.statements.size();
  return guarded([] {});
}

mcg_status mcg_script_run(const mcg_script* s, char** json, int* verdict) {
  if (any_null(s, json, verdict)) return null_argument();
  return guarded([&] {
    const auto r = mcgspin::script::run(s->value);
    *json = dup(mcgspin::canonical_dump(mcgspin::Json(r.certificates)));
    *verdict = r.all_verdicts_pass ? 1 : 0;
  });
}

void mcg_script_free(mcg_script* s) { delete s; }

}  // extern "C"
