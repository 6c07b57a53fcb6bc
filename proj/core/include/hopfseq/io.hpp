#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "hopfseq/hopf.hpp"

namespace hopfseq {

using Json = nlohmann::ordered_json;

/// Malformed input: syntax, missing keys, bad indices, unparsable scalars.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that fails the Hopf axiom suite.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the structure-constant JSON schema (see docs/file-format.md).
/// Throws ParseError on malformed input; with verify set, runs the axiom
/// suite and throws VerificationError naming the failed axiom.
HopfPtr parse_algebra_json(const Json& j, bool verify = true);
HopfPtr parse_algebra_file(const std::string& path, bool verify = true);

/// Canonical serialization: sparse triples in sorted order, scalars in the
/// literal syntax. parse(serialize(h)) reproduces the structure constants.
Json serialize_algebra(const HopfAlgebra& h);

std::string field_to_name(const Field* f);

}  // namespace hopfseq
