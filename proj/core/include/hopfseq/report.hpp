#pragma once

#include "hopfseq/cocenter.hpp"
#include "hopfseq/io.hpp"

namespace hopfseq {

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

Json cert_to_json(const Certificate& c);
Json subspace_to_json(const Subspace& s);
Json matrix_to_json(const Matrix& m);
Json vec_to_json(std::span<const Scalar> v);

/// Common report head: analysis kind, tool version, input digest (FNV-1a of
/// the canonical serialization), field and dimension, seed.
Json report_head(const std::string& analysis, const std::string& source, const HopfAlgebra& h,
                 std::uint64_t seed);

Json axioms_to_json(const AxiomReport& rep);
Json freeness_to_json(const FreenessOutcome& f);
Json central_report_to_json(const CentralReport& rep);
Json cocentral_report_to_json(const CocenterReport& rep);
Json group_check_to_json(const GroupAlgebraCheck& g);

/// Human-readable rendering of a report produced by the builders above.
std::string render_text(const Json& report);

/// True when every certificate list in the report passes.
bool report_all_pass(const Json& report);

}  // namespace hopfseq
