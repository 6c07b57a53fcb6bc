#include "hopfseq/io.hpp"

#include <algorithm>
#include <fstream>

namespace hopfseq {

std::string field_to_name(const Field* f) {
  switch (f->kind()) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "F" + std::to_string(f->prime_modulus());
    case FieldKind::cyclotomic: return "Qz" + std::to_string(f->conductor());
  }
  return "?";
}

namespace {

const Field* field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("field: expected an object with a 'kind' key");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) throw ParseError("field: prime kind requires 'p'");
    return Field::prime(j.at("p").get<std::uint32_t>());
  }
  if (kind == "cyclotomic") {
    if (!j.contains("n")) throw ParseError("field: cyclotomic kind requires 'n'");
    return Field::cyclotomic(j.at("n").get<std::uint32_t>());
  }
  throw ParseError("field: unknown kind '" + kind + "'");
}

Json field_to_json(const Field* f) {
  Json j;
  switch (f->kind()) {
    case FieldKind::rationals: j["kind"] = "rationals"; break;
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = f->prime_modulus();
      break;
    case FieldKind::cyclotomic:
      j["kind"] = "cyclotomic";
      j["n"] = f->conductor();
      break;
  }
  return j;
}

Scalar scalar_at(const Field* f, const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a scalar literal string");
}

Vec vec_at(const Field* f, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected an array of " + std::to_string(n) + " scalars");
  Vec out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(scalar_at(f, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

int index_at(const Json& j, int dim, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer index");
  long v = j.get<long>();
  if (v < 0 || v >= dim)
    throw ParseError(where + ": index out of range: " + std::to_string(v) + " (dim " +
                     std::to_string(dim) + ")");
  return static_cast<int>(v);
}

}  // namespace

HopfPtr parse_algebra_json(const Json& j, bool verify) {
  if (!j.is_object()) throw ParseError("top level: expected a JSON object");
  if (j.value("format", "") != "hopf-algebra")
    throw ParseError("top level: missing or wrong 'format' (expected \"hopf-algebra\")");
  if (!j.contains("field") || !j.contains("dim"))
    throw ParseError("top level: 'field' and 'dim' are required");
  const Field* f = field_from_json(j.at("field"));
  int n = j.at("dim").get<int>();
  if (n <= 0) throw ParseError("dim: must be positive");

  HopfAlgebra::Data d;
  d.field = f;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array() || j.at("basis").size() != static_cast<std::size_t>(n))
      throw ParseError("basis: expected " + std::to_string(n) + " labels");
    for (const auto& s : j.at("basis")) d.labels.push_back(s.get<std::string>());
  }
  d.unit = vec_at(f, j.at("unit"), n, "unit");
  d.counit = vec_at(f, j.at("counit"), n, "counit");

  auto read_triples = [&](const char* key, int arity, auto&& push) {
    if (!j.contains(key)) throw ParseError(std::string(key) + ": required");
    const Json& arr = j.at(key);
    if (!arr.is_array()) throw ParseError(std::string(key) + ": expected an array");
    std::size_t row = 0;
    for (const auto& t : arr) {
      std::string where = std::string(key) + "[" + std::to_string(row) + "]";
      if (!t.is_array() || t.size() != static_cast<std::size_t>(arity + 1))
        throw ParseError(where + ": expected [indices..., coeff] with " + std::to_string(arity) +
                         " indices");
      push(t, where);
      ++row;
    }
  };
  read_triples("mult", 3, [&](const Json& t, const std::string& w) {
    d.mult.emplace_back(index_at(t[0], n, w), index_at(t[1], n, w), index_at(t[2], n, w),
                        scalar_at(f, t[3], w));
  });
  read_triples("comult", 3, [&](const Json& t, const std::string& w) {
    d.comult.emplace_back(index_at(t[0], n, w), index_at(t[1], n, w), index_at(t[2], n, w),
                          scalar_at(f, t[3], w));
  });
  read_triples("antipode", 2, [&](const Json& t, const std::string& w) {
    d.antipode.emplace_back(index_at(t[0], n, w), index_at(t[1], n, w), scalar_at(f, t[2], w));
  });

  HopfPtr h;
  try {
    h = HopfAlgebra::make(std::move(d));
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  if (verify) {
    AxiomReport rep = verify_axioms(*h);
    h->set_verify_state(rep.pass() ? HopfAlgebra::VerifyState::ok
                                   : HopfAlgebra::VerifyState::failed);
    if (!rep.pass()) throw VerificationError("axiom verification failed: " + rep.cert.first_failure());
  }
  return h;
}

HopfPtr parse_algebra_file(const std::string& path, bool verify) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what());
  }
  return parse_algebra_json(j, verify);
}

Json serialize_algebra(const HopfAlgebra& h) {
  const int n = h.dim();
  Json j;
  j["format"] = "hopf-algebra";
  j["version"] = 1;
  j["field"] = field_to_json(h.field());
  j["dim"] = n;
  j["basis"] = h.labels();
  Json unit = Json::array(), counit = Json::array();
  for (int i = 0; i < n; ++i) {
    unit.push_back(h.unit_vec()[i].str());
    counit.push_back(h.counit_vec()[i].str());
  }
  j["unit"] = unit;
  j["counit"] = counit;

  Json mult = Json::array();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (const auto& [t, c] : h.mult_sparse(i, k)) mult.push_back(Json::array({i, k, t, c.str()}));
  j["mult"] = mult;

  Json comult = Json::array();
  for (int i = 0; i < n; ++i)
    for (const auto& [jk, c] : h.comult_sparse(i)) {
      auto [a, b] = unflatten(jk, n);
      comult.push_back(Json::array({i, static_cast<int>(a), static_cast<int>(b), c.str()}));
    }
  j["comult"] = comult;

  Json antipode = Json::array();
  const Matrix& s = h.antipode_matrix();
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      if (!s.at(r, i).is_zero()) antipode.push_back(Json::array({i, r, s.at(r, i).str()}));
  j["antipode"] = antipode;
  return j;
}

}  // namespace hopfseq
