#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfseq/builtins.hpp"
#include "hopfseq/grouplikes.hpp"
#include "hopfseq/io.hpp"
#include "iso_search.hpp"
#include "oracle_groups.hpp"

using namespace hopfseq;

namespace {

int label_index(const HopfAlgebra& h, const std::string& name) {
  for (int i = 0; i < h.dim(); ++i)
    if (h.label(i) == name) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("axiom suite passes for representative builtins") {
  for (const char* spec : {"trivial", "sweedler", "group-algebra:Z4", "group-algebra:D4",
                           "function-algebra:D4", "taft:3"}) {
    CAPTURE(spec);
    CHECK(verify_axioms(*builtin(spec)).pass());
  }
}

TEST_CASE("antipode axiom failure carries a witness") {
  // Sweedler algebra with the antipode replaced by the identity.
  Json j = serialize_algebra(*builtin("sweedler"));
  Json s = Json::array();
  for (int i = 0; i < 4; ++i) s.push_back(Json::array({i, i, "1"}));
  j["antipode"] = s;
  HopfPtr broken = parse_algebra_json(j, false);
  AxiomReport rep = verify_axioms(*broken);
  CHECK_FALSE(rep.pass());
  bool antipode_failed = false;
  std::string witness;
  for (const auto& item : rep.cert.items)
    if (item.name == "antipode_axiom" && !item.pass) {
      antipode_failed = true;
      witness = item.witness;
    }
  CHECK(antipode_failed);
  CHECK(witness == "x");  // m(S (x) id) Delta(x) = x != 0 = eps(x) 1
}

TEST_CASE("group algebra evaluation: antipode and grouplikes") {
  Group s3 = Group::symmetric3();
  HopfPtr h = builtin("group-algebra:S3");
  for (int g = 0; g < s3.order(); ++g) {
    CHECK(h->antipode_of(h->basis_vec(g)) == h->basis_vec(s3.inverse(g)));
    // cocommutativity on basis elements
    Vec d = h->comult_of(h->basis_vec(g));
    CHECK(d == h->t2_flip(d));
  }
}

TEST_CASE("small quantum sl2 relations") {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  REQUIRE(u->dim() == 27);
  const Field* f = u->field();
  Scalar q = primitive_root_of_unity(f, 3);
  int E = label_index(*u, "E"), K = label_index(*u, "K"), F = label_index(*u, "F");
  int K2 = label_index(*u, "K^2");

  // K^3 = 1, E^3 = 0, F^3 = 0
  Vec k3 = u->mul(u->mul(u->basis_vec(K), u->basis_vec(K)), u->basis_vec(K));
  CHECK(k3 == u->unit_vec());
  Vec e3 = u->mul(u->mul(u->basis_vec(E), u->basis_vec(E)), u->basis_vec(E));
  CHECK(is_zero_vec(e3));
  Vec f3 = u->mul(u->mul(u->basis_vec(F), u->basis_vec(F)), u->basis_vec(F));
  CHECK(is_zero_vec(f3));

  // K E K^{-1} = q^2 E
  Vec kek = u->mul(u->mul(u->basis_vec(K), u->basis_vec(E)), u->basis_vec(K2));
  CHECK(kek == scaled(u->basis_vec(E), q * q));

  // [E, F] = (K - K^{-1})/(q - q^{-1})
  Vec comm = u->mul(u->basis_vec(E), u->basis_vec(F));
  Vec fe = u->mul(u->basis_vec(F), u->basis_vec(E));
  for (int i = 0; i < 27; ++i) comm[i] -= fe[i];
  Vec expect = zero_vec(f, 27);
  Scalar dq = (q - q.inverse()).inverse();
  expect[K] = dq;
  expect[K2] = -dq;
  CHECK(comm == expect);

  // Delta(E) = E (x) K + 1 (x) E
  Vec de = u->comult_of(u->basis_vec(E));
  Vec expected_de = zero_vec(f, 27 * 27);
  expected_de[flatten(E, K, 27)] = Scalar::one(f);
  expected_de[flatten(0, E, 27)] = Scalar::one(f);
  CHECK(de == expected_de);
}

TEST_CASE("taft algebras") {
  HopfPtr t3 = builtin("taft:3");
  CHECK(t3->dim() == 9);
  CHECK(verify_axioms(*t3).pass());
  // x g = q g x with q = z_3
  int g = label_index(*t3, "g"), x = label_index(*t3, "x"), gx = label_index(*t3, "gx");
  Scalar q = primitive_root_of_unity(t3->field(), 3);
  CHECK(t3->mul(t3->basis_vec(x), t3->basis_vec(g)) == scaled(t3->basis_vec(gx), q));
  CHECK_THROWS(taft(4, 2));  // qpow must be coprime to n
}

TEST_CASE("sweedler algebra relations match the catalog") {
  HopfPtr h = builtin("sweedler");
  int g = label_index(*h, "g"), x = label_index(*h, "x"), gx = label_index(*h, "gx");
  CHECK(h->mul(h->basis_vec(g), h->basis_vec(g)) == h->unit_vec());
  CHECK(is_zero_vec(h->mul(h->basis_vec(x), h->basis_vec(x))));
  CHECK(h->mul(h->basis_vec(x), h->basis_vec(g)) == scaled(h->basis_vec(gx), -Scalar::one(h->field())));
  Vec dx = h->comult_of(h->basis_vec(x));
  Vec expect = zero_vec(h->field(), 16);
  expect[flatten(x, 0, 4)] = Scalar::one(h->field());
  expect[flatten(g, x, 4)] = Scalar::one(h->field());
  CHECK(dx == expect);
}

TEST_CASE("convolution: id * S = unit eps and inverse solving") {
  for (const char* spec : {"sweedler", "group-algebra:S3"}) {
    CAPTURE(spec);
    HopfPtr h = builtin(spec);
    const int n = h->dim();
    Matrix id = Matrix::identity(h->field(), n);
    Matrix conv = convolution(*h, id, h->antipode_matrix());
    Matrix expect(h->field(), n, n);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r) expect.at(r, i) = h->counit_vec()[i] * h->unit_vec()[r];
    CHECK(conv == expect);

    auto inv = convolution_inverse(*h, id);
    REQUIRE(inv.has_value());
    CHECK(*inv == h->antipode_matrix());

    // S^2 is an algebra endomorphism; its convolution inverse is S^3.
    Matrix s2 = h->antipode_matrix() * h->antipode_matrix();
    auto inv2 = convolution_inverse(*h, s2);
    REQUIRE(inv2.has_value());
    CHECK(*inv2 == s2 * h->antipode_matrix());
  }
}

TEST_CASE("convolution-singular map reported as not invertible") {
  HopfPtr h = builtin("group-algebra:Z2");
  Matrix zero(h->field(), 2, 2);
  CHECK_FALSE(convolution_inverse(*h, zero).has_value());
}

TEST_CASE("w operator on a group algebra and its certificates") {
  Group q8 = Group::quaternion8();
  HopfPtr h = builtin("group-algebra:Q8");
  WOperator w = w_operator(h);
  CHECK(w.cert.all_pass());
  const int n = h->dim();
  // W(e_g (x) e_h) = e_g (x) e_{gh}
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < n; ++k) {
      const SparseVec& col = w.columns[flatten(g, k, n)];
      REQUIRE(col.size() == 1);
      CHECK(col[0].first == static_cast<int>(flatten(g, q8.mul(g, k), n)));
      CHECK(col[0].second.is_one());
    }
}

TEST_CASE("w operator braid identity for H4 and k[S3]") {
  for (const char* spec : {"sweedler", "group-algebra:S3"}) {
    CAPTURE(spec);
    WOperator w = w_operator(builtin(spec));
    CHECK(w.cert.all_pass());
  }
}

TEST_CASE("w inverse on random tensors") {
  HopfPtr h = builtin("taft:3");
  WOperator w = w_operator(h);
  REQUIRE(w.cert.all_pass());
  Matrix wd = w.dense();
  Matrix wi = w.dense_inverse();
  std::mt19937 rng(4);
  Vec x;
  for (std::size_t i = 0; i < wd.cols(); ++i)
    x.push_back(Scalar::of(h->field(), static_cast<long>(rng() % 7) - 3));
  CHECK(wi.apply(wd.apply(x)) == x);
  CHECK(wd.apply(wi.apply(x)) == x);
}

TEST_CASE("dual algebra constructions") {
  // dual of k[Z2] has matching dimension and passes the axiom suite
  HopfPtr z2 = builtin("group-algebra:Z2");
  HopfPtr dz2 = dual_hopf(z2);
  CHECK(dz2->dim() == 2);
  CHECK(verify_axioms(*dz2).pass());

  // dual of k[S3] is commutative but not cocommutative
  HopfPtr ds3 = dual_hopf(builtin("group-algebra:S3"));
  bool commutative = true;
  for (int i = 0; i < 6 && commutative; ++i)
    for (int j = 0; j < 6; ++j)
      if (ds3->mul(ds3->basis_vec(i), ds3->basis_vec(j)) !=
          ds3->mul(ds3->basis_vec(j), ds3->basis_vec(i))) {
        commutative = false;
        break;
      }
  CHECK(commutative);
  bool cocommutative = true;
  for (int i = 0; i < 6 && cocommutative; ++i) {
    Vec d = ds3->comult_of(ds3->basis_vec(i));
    if (d != ds3->t2_flip(d)) cocommutative = false;
  }
  CHECK_FALSE(cocommutative);

  // double dual reproduces the original structure constants
  for (const char* spec : {"sweedler", "group-algebra:D4", "taft:3"}) {
    CAPTURE(spec);
    HopfPtr h = builtin(spec);
    Json a = serialize_algebra(*dual_hopf(dual_hopf(h)));
    Json b = serialize_algebra(*h);
    a.erase("basis");
    b.erase("basis");
    CHECK(a == b);
  }
}

TEST_CASE("sweedler algebra is self-dual via an explicit pairing search") {
  HopfPtr h4 = builtin("sweedler");
  HopfPtr dual = dual_hopf(h4);
  CHECK(verify_axioms(*dual).pass());
  auto iso = testutil::find_taft2_iso(h4, dual, label_index(*h4, "g"), label_index(*h4, "x"),
                                      -Scalar::one(h4->field()));
  REQUIRE(iso.has_value());
  CHECK(verify_morphism(*iso).all_pass());
  CHECK(inverse(iso->matrix).has_value());
}

TEST_CASE("quotient by the zero ideal reproduces the algebra") {
  HopfPtr h = builtin("sweedler");
  Quotient q = quotient_hopf(h, Subspace::zero(h->field(), h->dim()));
  CHECK(q.algebra->dim() == 4);
  Json a = serialize_algebra(*q.algebra);
  Json b = serialize_algebra(*h);
  a.erase("basis");
  b.erase("basis");
  CHECK(a == b);
}

TEST_CASE("H4 quotient by span{x, gx} is the group algebra of Z2") {
  HopfPtr h = builtin("sweedler");
  int x = label_index(*h, "x"), gx = label_index(*h, "gx");
  Subspace ideal = Subspace::span(h->field(), 4, {h->basis_vec(x), h->basis_vec(gx)});
  Quotient q = quotient_hopf(h, ideal);
  REQUIRE(q.algebra->dim() == 2);
  CHECK(q.ideal_cert.all_pass());
  GroupAlgebraCheck chk = group_algebra_check(q.algebra);
  CHECK(chk.status == GroupAlgebraStatus::yes);
  CHECK(chk.grouplikes.size() == 2);
}

TEST_CASE("k[Q8] quotient by the central augmentation ideal matches the group oracle") {
  Group q8 = Group::quaternion8();
  HopfPtr h = builtin("group-algebra:Q8");
  auto z = oracle::group_center(q8);
  REQUIRE(z.size() == 2);

  // ideal = k[Q8] * (augmentation ideal of k[Z]) inside k[Q8]
  std::vector<Vec> gens;
  for (int s : z) {
    if (s == q8.identity) continue;
    Vec v = h->basis_vec(s);
    for (int i = 0; i < 8; ++i) v[i] -= h->basis_vec(q8.identity)[i];
    gens.push_back(v);
  }
  Subspace seed = Subspace::span(h->field(), 8, gens);
  Subspace ideal = two_sided_ideal(*h, seed);
  Quotient q = quotient_hopf(h, ideal);
  REQUIRE(q.algebra->dim() == 4);

  // Explicit comparison map k[Q8/Z] -> B: e_{coset(g)} -> pi(e_g).
  auto quo = oracle::quotient_by_central(q8, z);
  HopfPtr kq = group_algebra(quo.group, h->field());
  Matrix m(h->field(), 4, 4);
  std::vector<bool> filled(4, false);
  for (int g = 0; g < 8; ++g) {
    int c = quo.coset_of[g];
    Vec img = q.projection.apply(h->basis_vec(g));
    if (!filled[c]) {
      for (int r = 0; r < 4; ++r) m.at(r, c) = img[r];
      filled[c] = true;
    } else {
      // well-definedness: both representatives must project equally
      for (int r = 0; r < 4; ++r) CHECK(m.at(r, c) == img[r]);
    }
  }
  HopfMorphism cmp{kq, q.algebra, m};
  CHECK(verify_morphism(cmp).all_pass());
  CHECK(inverse(cmp.matrix).has_value());
  // Q8 / {±1} is the Klein four group
  CHECK(quo.group.is_abelian());
  CHECK(quo.group.exponent() == 2);
}

TEST_CASE("two-cocycle verification") {
  HopfPtr h = builtin("sweedler");
  const Field* f = h->field();
  const int n = 4;

  Vec trivial = h->t2_unit();
  CHECK(verify_two_cocycle(*h, trivial).all_pass());

  Vec u = h->unit_vec();
  u[label_index(*h, "x")] = Scalar::one(f);
  Vec psi = coboundary_cocycle(*h, u);
  CHECK(verify_two_cocycle(*h, psi).all_pass());

  // 1 (x) 1 + x (x) x: invertible, counit-normalized, fails the cocycle identity
  Vec bad = h->t2_unit();
  bad[flatten(label_index(*h, "x"), label_index(*h, "x"), n)] = Scalar::one(f);
  Certificate cert = verify_two_cocycle(*h, bad);
  CHECK_FALSE(cert.all_pass());
  bool counit_ok = true, cocycle_ok = true;
  std::string witness;
  for (const auto& item : cert.items) {
    if (item.name == "counit_left" || item.name == "counit_right") counit_ok &= item.pass;
    if (item.name == "cocycle_identity") {
      cocycle_ok = item.pass;
      witness = item.witness;
    }
  }
  CHECK(counit_ok);
  CHECK_FALSE(cocycle_ok);
  CHECK_FALSE(witness.empty());
}

TEST_CASE("coboundary preconditions") {
  HopfPtr h = builtin("sweedler");
  Vec not_counital = h->basis_vec(label_index(*h, "x"));  // eps = 0
  CHECK_THROWS(coboundary_cocycle(*h, not_counital));
}

TEST_CASE("drinfeld twist changes only the coalgebra side") {
  Twist tw = sweedler_coboundary_twist();
  HopfPtr h4 = builtin("sweedler");
  CHECK(verify_axioms(*tw.algebra).pass());
  // multiplication tensor unchanged
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(tw.algebra->mult_sparse(i, j) == h4->mult_sparse(i, j));
  // comultiplication genuinely conjugated
  bool changed = false;
  for (int i = 0; i < 4 && !changed; ++i)
    if (tw.algebra->comult_sparse(i) != h4->comult_sparse(i)) changed = true;
  CHECK(changed);
}

TEST_CASE("twisting a commutative cocommutative algebra is trivial") {
  HopfPtr v4 = builtin("group-algebra:V4");
  const Field* f = v4->field();
  Vec u = zero_vec(f, 4);
  u[0] = Scalar::of(f, make_rat(1, 3));
  u[1] = Scalar::of(f, make_rat(2, 3));  // u = (e + 2a)/3, eps(u) = 1
  Vec psi = coboundary_cocycle(*v4, u);
  Twist tw = drinfeld_twist(v4, psi);
  for (int i = 0; i < 4; ++i) CHECK(tw.algebra->comult_sparse(i) == v4->comult_sparse(i));
}

TEST_CASE("element and tensor wrappers enforce algebra identity") {
  HopfPtr a = builtin("group-algebra:Z2");
  HopfPtr b = builtin("group-algebra:Z3");
  Element ea = Element::basis(a, 1);
  Element eb = Element::basis(b, 1);
  CHECK_THROWS(ea * eb);
  Element unit = Element::unit(a);
  CHECK(unit * ea == ea);
  Tensor2 t = Tensor2::of(ea, ea);
  CHECK(t * t == Tensor2::of(ea * ea, ea * ea));
}

TEST_CASE("every builtin group algebra is cocommutative") {
  for (const char* spec : {"group-algebra:Z6", "group-algebra:S3", "group-algebra:Q8",
                           "group-algebra:V4"}) {
    CAPTURE(spec);
    HopfPtr h = builtin(spec);
    for (int i = 0; i < h->dim(); ++i) {
      Vec d = h->comult_of(h->basis_vec(i));
      CHECK(d == h->t2_flip(d));
    }
  }
}
