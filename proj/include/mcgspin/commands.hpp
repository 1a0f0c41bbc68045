#pragma once

// Certificate producers behind the command-line subcommands. Each returns a
// complete certificate whose results carry a boolean "verdict".

#include <cstdint>
#include <optional>
#include <string>

#include "mcgspin/serialize.hpp"

namespace mcgspin::commands {

/// Factorizations known by name: P (odd g), U, V, VU (odd g >= 5) and Z (with k).
PositiveFactorization builtin_factorization(const std::string& name, int g, int k = 0);

/// All-ones form for the building block P_g, the alternating form otherwise.
QuadraticForm default_form(const PositiveFactorization& p);

Json check_spin(const PositiveFactorization& p, const std::optional<QuadraticForm>& q);
Json check_relation(const PositiveFactorization& p);
/// `signature` is "meyer", "endo", "paper" or empty for automatic choice.
Json invariants(const PositiveFactorization& p, const std::string& signature);
Json h1(const PositiveFactorization& p);

Json geography(std::int64_t max_m);
/// m<TAB>n<TAB>g<TAB>k rows with a header line.
std::string geography_tsv(std::int64_t max_m);
/// Points followed by samples of the two boundary lines n = 8(m-6) and 3n = 16m.
std::string geography_plot_data(std::int64_t max_m);

Json theorem_a(const std::string& presentation_text);
Json theorem_b(int g, int k);

/// The full reproduction suite: an array of certificates, one per check.
Json verify_paper();

/// Compares two certificate documents, ignoring every "tool_version" field.
bool same_certificates(const Json& actual, const Json& expected);

}  // namespace mcgspin::commands
