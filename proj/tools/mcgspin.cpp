// Command-line front end. Talks to the library only through mcgspin.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mcgspin/mcgspin.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3, kVerdict = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(mcg_status s) {
  switch (s) {
    case MCG_OK: return kOk;
    case MCG_E_PARSE:
    case MCG_E_DIMENSION:
    case MCG_E_NOT_FOUND: return kParse;
    case MCG_E_INTERNAL: return kInternal;
    default: return kPrecondition;
  }
}

void check(mcg_status s) {
  if (s == MCG_OK) return;
  std::string msg = mcg_last_error_message();
  if (mcg_last_error_line() > 0)
    msg = std::to_string(mcg_last_error_line()) + ":" + std::to_string(mcg_last_error_column()) + ": " + msg;
  throw Failure{exit_code(s), std::string(mcg_status_name(s)) + ": " + msg};
}

// Owns a malloc'd string returned by the library.
struct CString {
  char* p = nullptr;
  ~CString() { mcg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct FactorizationHandle {
  mcg_factorization* p = nullptr;
  ~FactorizationHandle() { mcg_factorization_free(p); }
};
struct FormHandle {
  mcg_form* p = nullptr;
  ~FormHandle() { mcg_form_free(p); }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kPrecondition, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  bool json = false;
  std::string expect;
  // factorization input
  std::string file;
  std::string builtin;
  int g = 5;
  int k = 0;
  std::string form;
  std::string signature;
  // geography
  std::int64_t max_m = 60;
  bool tsv = false;
  std::string plot_data;
  // thm-a / scripts
  std::string presentation;
  std::string script;
};

void load_factorization(const Options& o, FactorizationHandle& h) {
  if (!o.builtin.empty() == !o.file.empty())
    throw Failure{kParse, "give exactly one of FILE or --builtin NAME"};
  if (!o.builtin.empty())
    check(mcg_factorization_builtin(o.builtin.c_str(), o.g, o.k, &h.p));
  else
    check(mcg_factorization_from_json(read_file(o.file).c_str(), &h.p));
}

void print_scalars(const nlohmann::json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_scalars(value, name);
    } else if (value.is_array()) {
      std::cout << "  " << name << ": [" << value.size() << " entries]\n";
    } else {
      std::cout << "  " << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void print_human(const nlohmann::json& doc) {
  auto one = [](const nlohmann::json& cert) {
    const bool ok = cert["results"].value("verdict", false);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cert["command"].get<std::string>() << '\n';
    nlohmann::json rest = cert["results"];
    rest.erase("verdict");
    print_scalars(rest, "");
  };
  if (doc.is_array())
    for (const auto& c : doc) one(c);
  else
    one(doc);
}

// Prints a certificate document and turns verdict/expectation into an exit code.
int finish(const Options& o, const std::string& text, int verdict) {
  if (o.json)
    std::cout << text;
  else
    print_human(nlohmann::json::parse(text));
  if (!o.expect.empty()) {
    int same = 0;
    check(mcg_compare_certificates(text.c_str(), read_file(o.expect).c_str(), &same));
    if (!same) {
      std::cerr << "mcgspin: output differs from " << o.expect << '\n';
      return kVerdict;
    }
    return kOk;
  }
  return verdict ? kOk : kVerdict;
}

int finish_text(const Options& o, const std::string& text) {
  std::cout << text;
  if (!o.expect.empty() && read_file(o.expect) != text) {
    std::cerr << "mcgspin: output differs from " << o.expect << '\n';
    return kVerdict;
  }
  return kOk;
}

void add_factorization_options(CLI::App* cmd, Options& o) {
  cmd->add_option("FILE", o.file, "factorization in canonical JSON ('-' for stdin)");
  cmd->add_option("--builtin", o.builtin, "builtin factorization: P, U, V, VU or Z")
      ->check(CLI::IsMember({"P", "U", "V", "VU", "Z"}));
  cmd->add_option("--g", o.g, "genus for --builtin")->check(CLI::Range(1, 512));
  cmd->add_option("--k", o.k, "breeding count for --builtin Z")->check(CLI::Range(0, 1026));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin mapping class group factorizations and their certificates"};
  app.set_version_flag("--version", std::string(mcg_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "print canonical JSON certificates");
  app.add_option("--expect", o.expect, "compare output with a golden file; exit 4 on mismatch");

  auto* spin = app.add_subcommand("check-spin", "q-values of every twist and boundary parity");
  add_factorization_options(spin, o);
  spin->add_option("--form", o.form, "form assignments, e.g. \"x*:1 y1:1 y3:1\"");
  auto* relation = app.add_subcommand("check-relation", "product of the twists is the identity");
  add_factorization_options(relation, o);
  auto* inv = app.add_subcommand("invariants", "Euler characteristic, signature, chi_h, c1^2");
  add_factorization_options(inv, o);
  inv->add_option("--signature", o.signature, "meyer, endo or paper")
      ->check(CLI::IsMember({"meyer", "endo", "paper"}));
  auto* h1 = app.add_subcommand("h1", "first homology of the total space");
  add_factorization_options(h1, o);

  auto* geo = app.add_subcommand("geography", "realized (chi_h, c1^2) points");
  geo->add_option("--max-m", o.max_m, "largest chi_h")->check(CLI::Range(std::int64_t{1}, std::int64_t{10000}));
  geo->add_flag("--tsv", o.tsv, "emit m<TAB>n<TAB>g<TAB>k rows");
  geo->add_option("--plot-data", o.plot_data, "also write points and boundary lines to this file");

  auto* thm_a = app.add_subcommand("thm-a", "spin fibration with prescribed fundamental group abelianization");
  thm_a->add_option("--presentation", o.presentation, "presentation file ('-' for stdin)")->required();
  auto* thm_b = app.add_subcommand("thm-b", "build and certify Z_{g,k}");
  thm_b->add_option("--g", o.g, "odd genus >= 5")->required();
  thm_b->add_option("--k", o.k, "breeding count 0..2g+2")->required();

  auto* paper = app.add_subcommand("verify-paper", "run the full reproduction suite");
  auto* run = app.add_subcommand("run", "execute a script");
  run->add_option("SCRIPT", o.script, "script file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    CString out;
    int verdict = 0;
    FactorizationHandle fact;
    if (*spin || *relation || *inv || *h1) {
      load_factorization(o, fact);
      if (*spin) {
        FormHandle form;
        if (!o.form.empty()) {
          int g = 0;
          check(mcg_factorization_genus(fact.p, &g));
          check(mcg_form_parse(g, o.form.c_str(), &form.p));
        }
        check(mcg_certify_spin(fact.p, form.p, &out.p, &verdict));
      } else if (*relation) {
        check(mcg_certify_relation(fact.p, &out.p, &verdict));
      } else if (*inv) {
        check(mcg_certify_invariants(fact.p, o.signature.empty() ? nullptr : o.signature.c_str(), &out.p, &verdict));
      } else {
        check(mcg_certify_h1(fact.p, &out.p, &verdict));
      }
    } else if (*geo) {
      if (!o.plot_data.empty()) {
        CString plot;
        check(mcg_geography_plot_data(o.max_m, &plot.p));
        std::ofstream f(o.plot_data, std::ios::binary);
        if (!(f << plot.str())) throw Failure{kPrecondition, "cannot write '" + o.plot_data + "'"};
      }
      if (o.tsv) {
        check(mcg_geography_tsv(o.max_m, &out.p));
        return finish_text(o, out.str());
      }
      check(mcg_certify_geography(o.max_m, &out.p, &verdict));
    } else if (*thm_a) {
      check(mcg_certify_theorem_a(read_file(o.presentation).c_str(), &out.p, &verdict));
    } else if (*thm_b) {
      check(mcg_certify_theorem_b(o.g, o.k, &out.p, &verdict));
    } else if (*paper) {
      check(mcg_verify_paper(&out.p, &verdict));
    } else if (*run) {
      mcg_script* script = nullptr;
      check(mcg_script_parse(read_file(o.script).c_str(), &script));
      std::unique_ptr<mcg_script, void (*)(mcg_script*)> owner(script, mcg_script_free);
      check(mcg_script_run(script, &out.p, &verdict));
    }
    return finish(o, out.str(), verdict);
  } catch (const Failure& f) {
    std::cerr << "mcgspin: error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "mcgspin: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
