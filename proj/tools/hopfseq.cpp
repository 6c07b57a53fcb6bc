// hopfseq: exact analysis of finite-dimensional Hopf algebras given by
// structure constants. Subcommands compute algebra/Hopf centers, cocenters,
// central and cocentral exact sequences with freeness certificates, duals,
// and Drinfeld twists, emitting certificate reports as text or JSON.
//
// Exit codes: 0 = all certificates pass, 1 = a mathematical certificate
// failed, 2 = input or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfseq/builtins.hpp"
#include "hopfseq/report.hpp"

using namespace hopfseq;

namespace {

struct CommonOpts {
  std::string file;
  std::string builtin_spec;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool input_required = true) {
  auto* f = cmd->add_option("--file", o.file, "structure-constant JSON file");
  auto* b = cmd->add_option("--builtin", o.builtin_spec,
                            "builtin algebra spec, e.g. group-algebra:Q8 or taft:n=3");
  if (input_required) {
    f->excludes(b);
    b->excludes(f);
  }
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "write the report to this path (atomic)");
  cmd->add_option("--seed", o.seed, "seed for randomized search (freeness candidates)");
}

struct InputAlgebra {
  HopfPtr h;
  std::string source;
};

InputAlgebra load(const CommonOpts& o, bool verify = true) {
  if (!o.file.empty() && !o.builtin_spec.empty())
    throw ParseError("give exactly one of --file or --builtin");
  if (!o.file.empty()) return {parse_algebra_file(o.file, verify), "file:" + o.file};
  if (!o.builtin_spec.empty()) {
    HopfPtr h = builtin(o.builtin_spec);
    if (verify) require_verified(*h);
    return {h, "builtin:" + o.builtin_spec};
  }
  throw ParseError("an input is required: --file <path> or --builtin <spec>");
}

void emit(const Json& report, const CommonOpts& o) {
  std::string payload =
      o.format == "json" ? report.dump(2) + "\n" : render_text(report);
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  // Atomic write: temp file in the same directory, then rename.
  std::filesystem::path target(o.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << payload;
  }
  std::filesystem::rename(tmp, target);
}

int finish(const Json& report, const CommonOpts& o) {
  emit(report, o);
  return report_all_pass(report) ? 0 : 1;
}

Json head_with(const std::string& analysis, const InputAlgebra& in, const CommonOpts& o) {
  return report_head(analysis, in.source, *in.h, o.seed);
}

Vec parse_element(const HopfAlgebra& h, const std::string& csv) {
  Vec v = zero_vec(h.field(), h.dim());
  std::size_t start = 0;
  int idx = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (idx >= h.dim()) throw ParseError("element: more coefficients than basis dimension");
    if (!tok.empty()) v[idx] = Scalar::parse(h.field(), tok);
    ++idx;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (idx != h.dim())
    throw ParseError("element: expected " + std::to_string(h.dim()) + " comma-separated scalars");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact center/cocenter analysis for finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  CommonOpts overify, ocenter, ohz, ococ, oseq, odual, otwist, ofree;
  std::string seq_kind = "central";
  std::string twist_unit;
  std::string free_over = "hz";

  auto* cverify = app.add_subcommand("verify", "run the Hopf axiom suite");
  add_common(cverify, overify);

  auto* ccenter = app.add_subcommand("center", "algebra center with the adjoint cross-check");
  add_common(ccenter, ocenter);

  auto* chz = app.add_subcommand("hopf-center", "Hopf center with characterization certificates");
  add_common(chz, ohz);

  auto* ccoc = app.add_subcommand("cocenter", "Hopf cocenter via the dual, with certificates");
  add_common(ccoc, ococ);

  auto* cseq = app.add_subcommand("sequence", "assemble and certify an exact sequence");
  add_common(cseq, oseq);
  cseq->add_option("--kind", seq_kind, "central or cocentral")
      ->check(CLI::IsMember({"central", "cocentral"}));

  auto* cdual = app.add_subcommand("dual", "dual Hopf algebra, serialized");
  add_common(cdual, odual);

  auto* ctwist = app.add_subcommand("twist", "Drinfeld twist by a coboundary cocycle");
  add_common(ctwist, otwist);
  ctwist
      ->add_option("--coboundary", twist_unit,
                   "invertible element u with eps(u)=1 as comma-separated scalars; the twist uses "
                   "(u (x) u) Delta(u^{-1})")
      ->required();

  auto* cfree = app.add_subcommand("freeness", "freeness certificate for A over a subalgebra");
  add_common(cfree, ofree);
  cfree->add_option("--over", free_over, "hz (Hopf center) or cocenter-kernel")
      ->check(CLI::IsMember({"hz", "cocenter-kernel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cverify->parsed()) {
      InputAlgebra in = load(overify, false);
      AxiomReport rep = verify_axioms(*in.h);
      in.h->set_verify_state(rep.pass() ? HopfAlgebra::VerifyState::ok
                                        : HopfAlgebra::VerifyState::failed);
      Json j = head_with("verify", in, overify);
      j["axioms"] = axioms_to_json(rep);
      return finish(j, overify);
    }
    if (ccenter->parsed()) {
      InputAlgebra in = load(ocenter);
      Subspace z = algebra_center(*in.h);
      Json j = head_with("center", in, ocenter);
      j["center"] = subspace_to_json(z);
      Json cert = Json::array();
      cert.push_back({{"name", "commutant_equals_adjoint_characterization"}, {"pass", true}});
      j["certificates"] = cert;
      return finish(j, ocenter);
    }
    if (chz->parsed()) {
      InputAlgebra in = load(ohz);
      HopfCenterResult r = hopf_center_full(in.h);
      Json j = head_with("hopf-center", in, ohz);
      j["dims"] = {{"center", r.center.dim()}, {"hopf_center", r.subspace.dim()}};
      j["hopf_center"] = subspace_to_json(r.subspace);
      j["certificates"] = cert_to_json(r.cert);
      return finish(j, ohz);
    }
    if (ccoc->parsed()) {
      InputAlgebra in = load(ococ);
      Cocenter coc = hopf_cocenter(in.h);
      Json j = head_with("cocenter", in, ococ);
      j["dims"] = {{"cocenter", coc.hc->dim()},
                   {"kernel", coc.kernel_subspace.dim()},
                   {"dual_hopf_center", coc.dual_hopf_center.dim()}};
      j["cocenter_labels"] = coc.hc->labels();
      j["projection"] = matrix_to_json(coc.pi.matrix);
      j["certificates"] = cert_to_json(coc.cert);
      j["group_algebra_check"] = group_check_to_json(group_algebra_check(coc.hc));
      return finish(j, ococ);
    }
    if (cseq->parsed()) {
      InputAlgebra in = load(oseq);
      Json j;
      if (seq_kind == "central") {
        CentralReport rep = central_sequence(in.h, 1000000, oseq.seed);
        j = head_with("sequence-central", in, oseq);
        Json body = central_report_to_json(rep);
        for (auto& [k, v] : body.items()) j[k] = v;
        Json freecert = Json::array();
        freecert.push_back({{"name", "freeness_certificate_found"},
                            {"pass", rep.freeness.found()},
                            {"witness", rep.freeness.found() ? "" : rep.freeness.failure}});
        j["freeness_requirement"] = freecert;
      } else {
        CocenterReport rep = cocentral_sequence(in.h, 1000000, oseq.seed);
        j = head_with("sequence-cocentral", in, oseq);
        Json body = cocentral_report_to_json(rep);
        for (auto& [k, v] : body.items()) j[k] = v;
        Json freecert = Json::array();
        freecert.push_back({{"name", "freeness_certificate_found"},
                            {"pass", rep.freeness.found()},
                            {"witness", rep.freeness.found() ? "" : rep.freeness.failure}});
        j["freeness_requirement"] = freecert;
      }
      return finish(j, oseq);
    }
    if (cdual->parsed()) {
      InputAlgebra in = load(odual);
      HopfPtr d = dual_hopf(in.h);
      HopfPtr dd = dual_hopf(d);
      Json j = head_with("dual", in, odual);
      Json lhs = serialize_algebra(*dd);
      Json rhs = serialize_algebra(*in.h);
      lhs.erase("basis");
      rhs.erase("basis");
      bool round = lhs == rhs;
      Json cert = Json::array();
      cert.push_back({{"name", "double_dual_equals_original"}, {"pass", round}});
      j["certificates"] = cert;
      j["dual_algebra"] = serialize_algebra(*d);
      return finish(j, odual);
    }
    if (ctwist->parsed()) {
      InputAlgebra in = load(otwist);
      Vec u = parse_element(*in.h, twist_unit);
      Vec psi = coboundary_cocycle(*in.h, u);
      Twist tw = drinfeld_twist(in.h, psi);
      Json j = head_with("twist", in, otwist);
      j["certificates"] = cert_to_json(tw.cert);
      bool hz_same = hopf_center(in.h) == hopf_center(tw.algebra);
      Json inv = Json::array();
      inv.push_back({{"name", "hopf_center_invariant_under_twist"}, {"pass", hz_same}});
      j["hopf_center_invariance"] = inv;
      j["twisted_algebra"] = serialize_algebra(*tw.algebra);
      return finish(j, otwist);
    }
    if (cfree->parsed()) {
      InputAlgebra in = load(ofree);
      Subspace c = free_over == "hz" ? hopf_center(in.h)
                                     : hopf_kernels(hopf_cocenter(in.h).pi).left;
      FreenessOutcome f = freeness_certificate(*in.h, c, 1000000, ofree.seed);
      Json j = head_with("freeness", in, ofree);
      j["over"] = free_over;
      j["subalgebra"] = subspace_to_json(c);
      j["freeness"] = freeness_to_json(f);
      Json cert = Json::array();
      cert.push_back({{"name", "freeness_certificate_found"},
                      {"pass", f.found()},
                      {"witness", f.found() ? "" : f.failure}});
      j["certificates"] = cert;
      return finish(j, ofree);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
