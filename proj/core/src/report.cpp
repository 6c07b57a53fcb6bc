#include "hopfseq/report.hpp"

#include <sstream>

namespace hopfseq {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

Json cert_to_json(const Certificate& c) {
  Json arr = Json::array();
  for (const auto& item : c.items) {
    Json j;
    j["name"] = item.name;
    j["pass"] = item.pass;
    if (!item.witness.empty()) j["witness"] = item.witness;
    arr.push_back(j);
  }
  return arr;
}

Json vec_to_json(std::span<const Scalar> v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

Json subspace_to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient();
  j["dim"] = s.dim();
  Json rows = Json::array();
  for (std::size_t t = 0; t < s.dim(); ++t) rows.push_back(vec_to_json(s.basis().row(t)));
  j["basis"] = rows;
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

Json report_head(const std::string& analysis, const std::string& source, const HopfAlgebra& h,
                 std::uint64_t seed) {
  Json j;
  j["analysis"] = analysis;
  j["tool"] = {{"name", "hopfseq"}, {"version", "0.1.0"}};
  Json input;
  input["source"] = source;
  input["digest"] = "fnv1a:" + hex64(fnv1a64(serialize_algebra(h).dump()));
  input["field"] = field_to_name(h.field());
  input["dim"] = h.dim();
  j["input"] = input;
  j["seed"] = seed;
  return j;
}

Json axioms_to_json(const AxiomReport& rep) { return cert_to_json(rep.cert); }

Json freeness_to_json(const FreenessOutcome& f) {
  Json j;
  j["found"] = f.found();
  if (f.found()) {
    j["rank"] = f.certificate->rank();
    j["subalgebra_dim"] = f.certificate->subalgebra.dim();
    Json cof = Json::array();
    for (const auto& a : f.certificate->cofactors) cof.push_back(vec_to_json(a));
    j["cofactor_basis"] = cof;
  } else {
    j["reason"] = f.failure;
  }
  return j;
}

Json central_report_to_json(const CentralReport& rep) {
  Json j;
  j["convention"] = "sequences are written k -> C -> A -> B -> k with A the analyzed algebra";
  j["dims"] = {{"algebra", rep.algebra->dim()},
               {"center", rep.center.dim()},
               {"hopf_center", rep.hz.subspace.dim()},
               {"quotient", rep.quotient.algebra->dim()}};
  j["center"] = subspace_to_json(rep.center);
  j["hopf_center"] = subspace_to_json(rep.hz.subspace);
  j["hopf_center_certificate"] = cert_to_json(rep.hz.cert);
  j["hz_subalgebra_certificate"] = cert_to_json(rep.hz_sub.cert);
  j["ideal_certificate"] = cert_to_json(rep.quotient.ideal_cert);
  j["quotient_labels"] = rep.quotient.algebra->labels();
  j["exactness"] = cert_to_json(rep.exactness);
  j["pi_normal"] = rep.pi_normal;
  j["consistency"] = cert_to_json(rep.consistency);
  j["freeness"] = freeness_to_json(rep.freeness);
  return j;
}

Json group_check_to_json(const GroupAlgebraCheck& g) {
  Json j;
  switch (g.status) {
    case GroupAlgebraStatus::yes: j["status"] = "group-algebra"; break;
    case GroupAlgebraStatus::no: j["status"] = "not-group-algebra"; break;
    case GroupAlgebraStatus::extension_required: j["status"] = "field-extension-required"; break;
  }
  j["grouplike_count"] = g.grouplikes.size();
  j["independent"] = g.independent;
  j["span"] = g.span;
  j["note"] = g.note;
  Json gl = Json::array();
  for (const auto& v : g.grouplikes) gl.push_back(vec_to_json(v));
  j["grouplikes"] = gl;
  return j;
}

Json cocentral_report_to_json(const CocenterReport& rep) {
  Json j;
  j["convention"] = "sequences are written k -> C -> A -> B -> k with A the analyzed algebra";
  j["dims"] = {{"algebra", rep.algebra->dim()},
               {"coefficient_coalgebra", rep.coeff.c.dim()},
               {"generated_subalgebra", rep.gen.d.dim()},
               {"cocentral_subspace", rep.w.dim()},
               {"cocenter", rep.cocenter.hc->dim()},
               {"hopf_kernel", rep.kernels.left.dim()}};
  j["ad_laws"] = cert_to_json(rep.ad.laws);
  j["coefficient_coalgebra"] = subspace_to_json(rep.coeff.c);
  j["coefficient_certificate"] = cert_to_json(rep.coeff.cert);
  j["generated_subalgebra"] = subspace_to_json(rep.gen.d);
  j["generated_flags"] = {{"bialgebra", rep.gen.bialgebra},
                          {"antipode_stable", rep.gen.antipode_stable}};
  j["generated_certificate"] = cert_to_json(rep.gen.cert);
  j["cocentral_subspace"] = subspace_to_json(rep.w);
  j["cocenter_certificate"] = cert_to_json(rep.cocenter.cert);
  j["cocenter_labels"] = rep.cocenter.hc->labels();
  j["projection"] = matrix_to_json(rep.cocenter.pi.matrix);
  j["hopf_kernel_left"] = subspace_to_json(rep.kernels.left);
  j["hopf_kernel_right_dim"] = rep.kernels.right.dim();
  j["pi_normal"] = rep.normal;
  j["d_equals_hopf_kernel"] = rep.d_equals_hopf_kernel;
  j["kernel_subalgebra_certificate"] = cert_to_json(rep.kernel_sub.cert);
  j["exactness"] = cert_to_json(rep.exactness);
  j["consistency"] = cert_to_json(rep.consistency);
  j["freeness"] = freeness_to_json(rep.freeness);
  return j;
}

namespace {

void collect_passes(const Json& j, bool& all) {
  if (j.is_array()) {
    for (const auto& item : j) collect_passes(item, all);
    return;
  }
  if (!j.is_object()) return;
  if (j.contains("name") && j.contains("pass") && j.at("pass").is_boolean()) {
    if (!j.at("pass").get<bool>()) all = false;
    return;
  }
  for (const auto& [key, value] : j.items()) {
    (void)key;
    collect_passes(value, all);
  }
}

void render_node(std::ostringstream& out, const std::string& key, const Json& j, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("name") &&
      j[0].contains("pass")) {
    out << pad << key << ":\n";
    for (const auto& item : j) {
      out << pad << "  [" << (item.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
          << item.at("name").get<std::string>();
      if (item.contains("witness")) out << "  (" << item.at("witness").get<std::string>() << ")";
      out << "\n";
    }
    return;
  }
  if (j.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render_node(out, k, v, depth + 1);
    return;
  }
  if (j.is_array()) {
    out << pad << key << ": " << j.dump() << "\n";
    return;
  }
  out << pad << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

bool report_all_pass(const Json& report) {
  bool all = true;
  collect_passes(report, all);
  return all;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) render_node(out, k, v, 0);
  out << (report_all_pass(report) ? "RESULT: all certificates pass\n"
                                  : "RESULT: certificate FAILURES present\n");
  return out.str();
}

}  // namespace hopfseq
