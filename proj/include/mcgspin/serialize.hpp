#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mcgspin/constructions.hpp"

namespace mcgspin {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "mcgspin 1.0.0";

/// Sparse coordinate text, e.g. "x1+y3+y4"; "0" for the zero class.
std::string class_text(const ClassMod2& v, LabelScheme scheme = LabelScheme::XY);
ClassMod2 parse_class_text(int genus, std::string_view text, LabelScheme scheme = LabelScheme::XY);

/// Basis-value assignments such as "x*:1 y1:1 y3:1"; later items override
/// earlier ones, unspecified values are 0.
QuadraticForm parse_form_text(int genus, std::string_view text, LabelScheme scheme = LabelScheme::XY);
std::string form_text(const QuadraticForm& q, LabelScheme scheme = LabelScheme::XY);

Json to_json(const Curve& c);
Json to_json(const PositiveFactorization& p);
PositiveFactorization factorization_from_json(const Json& j);

Json to_json(const RelationCheck& r);
Json to_json(const SpinCertificate& s);
Json to_json(const FibrationInvariants& inv);
Json to_json(const AbelianGroup& g);
Json to_json(const H1Certificate& h);
Json to_json(const B2Replay& r);
Json to_json(const ZCertificate& z);
Json to_json(const TheoremACertificate& t);

std::string sha256_hex(std::string_view data);

/// {command, inputs_digest, results, tool_version}; keys sort canonically.
Json make_certificate(std::string_view command, std::string_view inputs, Json results);
/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace mcgspin
