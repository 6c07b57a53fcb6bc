#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfseq/builtins.hpp"
#include "hopfseq/cocenter.hpp"
#include "oracle_groups.hpp"

using namespace hopfseq;

namespace {

int label_index(const HopfAlgebra& h, const std::string& name) {
  for (int i = 0; i < h.dim(); ++i)
    if (h.label(i) == name) return i;
  REQUIRE(false);
  return -1;
}

// k(G) -> k(Z(G)) restriction of functions, an independently built cocentral
// quotient for universality tests.
HopfMorphism function_restriction_to_center(const HopfPtr& kg, const Group& g) {
  auto z = hopfseq::oracle::group_center(g);
  Group zg;
  zg.name = "Z";
  zg.table.assign(z.size(), std::vector<int>(z.size()));
  for (std::size_t a = 0; a < z.size(); ++a) {
    zg.element_names.push_back(g.element_names[z[a]]);
    for (std::size_t b = 0; b < z.size(); ++b) {
      int prod = g.mul(z[a], z[b]);
      for (std::size_t c = 0; c < z.size(); ++c)
        if (z[c] == prod) zg.table[a][b] = static_cast<int>(c);
    }
  }
  zg.identity = 0;
  for (std::size_t c = 0; c < z.size(); ++c)
    if (z[c] == g.identity) zg.identity = static_cast<int>(c);
  HopfPtr target = function_algebra(zg, kg->field());
  Matrix m(kg->field(), target->dim(), kg->dim());
  for (std::size_t a = 0; a < z.size(); ++a) m.at(a, z[a]) = Scalar::one(kg->field());
  return {kg, target, std::move(m)};
}

}  // namespace

TEST_CASE("adjoint coaction on group algebras: ad(e_g) = e_g (x) 1") {
  HopfPtr h = builtin("group-algebra:D4");
  const int n = h->dim();
  AdCoaction ad = adjoint_coaction(h);
  CHECK(ad.laws.all_pass());
  for (int g = 0; g < n; ++g) {
    Vec col = ad_apply(*h, h->basis_vec(g));
    Vec expect = zero_vec(h->field(), static_cast<std::size_t>(n) * n);
    expect[flatten(g, 0, n)] = Scalar::one(h->field());  // identity is basis 0
    CHECK(col == expect);
  }
  CHECK(ad_apply(*h, h->unit_vec())[flatten(0, 0, n)].is_one());
}

TEST_CASE("adjoint coaction laws hold for every small builtin") {
  for (const char* spec : {"sweedler", "taft:3", "function-algebra:Q8", "sweedler-twist"}) {
    CAPTURE(spec);
    CHECK(adjoint_coaction(builtin(spec)).laws.all_pass());
  }
}

TEST_CASE("ad invariants coincide with the twisted-flip characterization") {
  SUBCASE("group algebras are entirely ad-invariant") {
    HopfPtr h = builtin("group-algebra:S3");
    AdInvariants inv = ad_invariants(h);
    CHECK(inv.cert.all_pass());
    CHECK(inv.ad_fixed == Subspace::full(h->field(), h->dim()));
  }
  SUBCASE("H4 and taft(3): solver values agree between both characterizations") {
    for (const char* spec : {"sweedler", "taft:3"}) {
      CAPTURE(spec);
      HopfPtr h = builtin(spec);
      AdInvariants inv = ad_invariants(h);
      CHECK(inv.cert.all_pass());
      CHECK(inv.ad_fixed == inv.twisted_flip_fixed);
      CHECK(inv.ad_fixed.contains_vector(h->unit_vec()));
    }
  }
}

TEST_CASE("ad-homomorphism criterion") {
  SUBCASE("commutative: both sides true") {
    AdHomomorphism r = ad_is_homomorphism(builtin("function-algebra:S3"));
    CHECK(r.cert.all_pass());
    CHECK(r.multiplicative);
    CHECK(r.lands_in_center);
  }
  SUBCASE("group algebras: ad lands in the scalars leg, criterion true") {
    AdHomomorphism r = ad_is_homomorphism(builtin("group-algebra:S3"));
    CHECK(r.cert.all_pass());
    CHECK(r.multiplicative == r.lands_in_center);
  }
  SUBCASE("H4: both sides false but agreeing") {
    AdHomomorphism r = ad_is_homomorphism(builtin("sweedler"));
    CHECK(r.cert.all_pass());
    CHECK_FALSE(r.multiplicative);
    CHECK_FALSE(r.lands_in_center);
  }
}

TEST_CASE("coefficient coalgebra and generated subalgebra of H4 (golden values)") {
  HopfPtr h4 = builtin("sweedler");
  int g = label_index(*h4, "g"), gx = label_index(*h4, "gx");
  CoefficientCoalgebra c = coefficient_coalgebra(h4);
  CHECK(c.cert.all_pass());
  // Slicing ad on the basis yields span{1, g, gx}.
  Subspace expect = Subspace::span(h4->field(), 4,
                                   {h4->unit_vec(), h4->basis_vec(g), h4->basis_vec(gx)});
  CHECK(c.c == expect);

  GeneratedSubalgebra d = generated_subalgebra(h4, c.c);
  CHECK(d.cert.all_pass());
  CHECK(d.d.dim() == 4);  // g * gx = x recovers the last basis direction
  CHECK(d.bialgebra);
  CHECK(d.antipode_stable);
}

TEST_CASE("coefficient data of group algebras is trivial") {
  HopfPtr h = builtin("group-algebra:Q8");
  CoefficientCoalgebra c = coefficient_coalgebra(h);
  CHECK(c.c.dim() == 1);
  CHECK(c.c.contains_vector(h->unit_vec()));
  GeneratedSubalgebra d = generated_subalgebra(h, c.c);
  CHECK(d.d.dim() == 1);
}

TEST_CASE("generated subalgebra of the small quantum group is everything") {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  CoefficientCoalgebra c = coefficient_coalgebra(u);
  CHECK(c.cert.all_pass());
  GeneratedSubalgebra d = generated_subalgebra(u, c.c);
  CHECK(d.d.dim() == 27);
  CHECK(d.cert.all_pass());
}

TEST_CASE("cocentral subspace golden values") {
  SUBCASE("cocommutative algebras have W = 0") {
    CHECK(cocentral_subspace(builtin("group-algebra:S3")).dim() == 0);
    CHECK(cocentral_subspace(builtin("group-algebra:Z6")).dim() == 0);
  }
  SUBCASE("W(H4) = span{1 - g, x, gx}") {
    HopfPtr h4 = builtin("sweedler");
    int g = label_index(*h4, "g"), x = label_index(*h4, "x"), gx = label_index(*h4, "gx");
    Vec one_minus_g = h4->unit_vec();
    one_minus_g[g] -= Scalar::one(h4->field());
    Subspace expect = Subspace::span(h4->field(), 4,
                                     {one_minus_g, h4->basis_vec(x), h4->basis_vec(gx)});
    CHECK(cocentral_subspace(h4) == expect);
  }
  SUBCASE("W of the small quantum group contains K - 1, E, F") {
    HopfPtr u = builtin("small-quantum-sl2:p=3");
    Subspace w = cocentral_subspace(u);
    Vec km1 = u->basis_vec(label_index(*u, "K"));
    for (int i = 0; i < 27; ++i) km1[i] -= u->unit_vec()[i];
    CHECK(w.contains_vector(km1));
    CHECK(w.contains_vector(u->basis_vec(label_index(*u, "E"))));
    CHECK(w.contains_vector(u->basis_vec(label_index(*u, "F"))));
  }
}

TEST_CASE("hopf cocenter of a cocommutative algebra is the identity quotient") {
  HopfPtr h = builtin("group-algebra:D4");
  Cocenter coc = hopf_cocenter(h);
  CHECK(coc.cert.all_pass());
  CHECK(coc.hc->dim() == 8);
  CHECK(coc.kernel_subspace.dim() == 0);
  CHECK(coc.pi.matrix == Matrix::identity(h->field(), 8));
}

TEST_CASE("hopf cocenter of k(Q8) is two-dimensional") {
  Cocenter coc = hopf_cocenter(builtin("function-algebra:Q8"));
  CHECK(coc.cert.all_pass());
  CHECK(coc.hc->dim() == 2);
  GroupAlgebraCheck chk = group_algebra_check(coc.hc);
  CHECK(chk.status == GroupAlgebraStatus::yes);
  CHECK(chk.grouplikes.size() == 2);
}

TEST_CASE("hopf cocenter of H4 with the golden kernel") {
  HopfPtr h4 = builtin("sweedler");
  Cocenter coc = hopf_cocenter(h4);
  CHECK(coc.cert.all_pass());
  CHECK(coc.hc->dim() == 1);
  int g = label_index(*h4, "g"), x = label_index(*h4, "x"), gx = label_index(*h4, "gx");
  Vec one_minus_g = h4->unit_vec();
  one_minus_g[g] -= Scalar::one(h4->field());
  Subspace expect = Subspace::span(h4->field(), 4,
                                   {one_minus_g, h4->basis_vec(x), h4->basis_vec(gx)});
  CHECK(coc.kernel_subspace == expect);
  // Self-duality cross-check: the Hopf center of the dual is also a line.
  CHECK(coc.dual_hopf_center.dim() == 1);
}

TEST_CASE("factor through the cocenter") {
  HopfPtr h = builtin("function-algebra:Q8");
  Cocenter coc = hopf_cocenter(h);

  SUBCASE("pi factors through itself via the identity") {
    Certificate cert;
    HopfMorphism f = factor_through_cocenter(coc, coc.pi, &cert);
    CHECK(cert.all_pass());
    CHECK(f.matrix == Matrix::identity(h->field(), coc.hc->dim()));
  }
  SUBCASE("the counit quotient factors through the cocenter") {
    HopfPtr triv = trivial_algebra(h->field());
    Matrix eps(h->field(), 1, h->dim());
    for (int i = 0; i < h->dim(); ++i) eps.at(0, i) = h->counit_vec()[i];
    HopfMorphism counit{h, triv, std::move(eps)};
    REQUIRE(verify_morphism(counit).all_pass());
    Certificate cert;
    HopfMorphism f = factor_through_cocenter(coc, counit, &cert);
    CHECK(cert.all_pass());
    // f must be the counit of HC
    for (int i = 0; i < coc.hc->dim(); ++i)
      CHECK(f.matrix.at(0, i) == coc.hc->counit_vec()[i]);
  }
  SUBCASE("the independently built restriction k(Q8) -> k(Z(Q8)) factors") {
    HopfMorphism q = function_restriction_to_center(h, Group::quaternion8());
    REQUIRE(verify_morphism(q).all_pass());
    REQUIRE(is_cocentral(q));
    Certificate cert;
    HopfMorphism f = factor_through_cocenter(coc, q, &cert);
    CHECK(cert.all_pass());
    CHECK(is_surjective(f));
  }
  SUBCASE("a non-cocentral map is rejected") {
    // the identity of a non-cocommutative algebra is not cocentral
    CHECK_FALSE(is_cocentral(identity_morphism(h)));
    HopfPtr h4 = builtin("sweedler");
    CHECK_FALSE(is_cocentral(identity_morphism(h4)));
    Cocenter c4 = hopf_cocenter(h4);
    CHECK_THROWS_AS(factor_through_cocenter(c4, identity_morphism(h4), nullptr),
                    std::invalid_argument);
  }
}

TEST_CASE("cocentral sequence of k(Q8): dims 4 / 8 / 2") {
  CocenterReport rep = cocentral_sequence(builtin("function-algebra:Q8"));
  CHECK(rep.kernels.left.dim() == 4);
  CHECK(rep.cocenter.hc->dim() == 2);
  CHECK(rep.normal);
  CHECK(rep.exactness.all_pass());
  CHECK(rep.consistency.all_pass());
  REQUIRE(rep.freeness.found());
  CHECK(rep.freeness.certificate->rank() == 2);
}

TEST_CASE("cocentral sequence of a group algebra is the identity sequence") {
  CocenterReport rep = cocentral_sequence(builtin("group-algebra:Z6"));
  CHECK(rep.cocenter.hc->dim() == 6);
  CHECK(rep.kernels.left.dim() == 1);  // {x : Delta x = 1 (x) x} = scalars
  CHECK(rep.exactness.all_pass());
  CHECK(rep.d_equals_hopf_kernel);     // D = span{1} = hopf kernel
}

TEST_CASE("cocentral sequence of H4") {
  CocenterReport rep = cocentral_sequence(builtin("sweedler"));
  CHECK(rep.cocenter.hc->dim() == 1);
  CHECK(rep.kernels.left.dim() == 4);
  CHECK(rep.d_equals_hopf_kernel);  // D = H4 = the hopf kernel
  CHECK(rep.exactness.all_pass());
  CHECK(rep.normal);
}

TEST_CASE("coalgebra cocenter") {
  SUBCASE("grouplike span of a group algebra has trivial kernel") {
    HopfPtr h = builtin("group-algebra:S3");
    CoalgebraCocenter cz = coalgebra_cocenter(h, Subspace::full(h->field(), 6));
    CHECK(cz.kernel_in_ambient.dim() == 0);
    CHECK(cz.cz_dim == 6);
  }
  SUBCASE("H4 as its own generating subcoalgebra") {
    HopfPtr h4 = builtin("sweedler");
    CoalgebraCocenter cz = coalgebra_cocenter(h4, Subspace::full(h4->field(), 4));
    CHECK(cz.kernel_in_ambient.dim() == 3);
    Subspace closed = hopf_ideal_closure(*h4, cz.kernel_in_ambient);
    Cocenter coc = hopf_cocenter(h4);
    CHECK(closed == coc.kernel_subspace);
  }
  SUBCASE("non-subcoalgebra input is rejected") {
    HopfPtr h4 = builtin("sweedler");
    Subspace bad = Subspace::span(h4->field(), 4, {h4->basis_vec(1)});  // span{x}
    CHECK_THROWS_AS(coalgebra_cocenter(h4, bad), std::invalid_argument);
  }
}

TEST_CASE("generating subcoalgebra of the small quantum group identifies the cocenter kernel") {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  int e = label_index(*u, "E"), f = label_index(*u, "F");
  int k = label_index(*u, "K"), k2 = label_index(*u, "K^2");
  Subspace c = Subspace::span(u->field(), 27,
                              {u->unit_vec(), u->basis_vec(k), u->basis_vec(k2),
                               u->basis_vec(e), u->basis_vec(f)});
  CoalgebraCocenter cz = coalgebra_cocenter(u, c);
  Subspace closed = hopf_ideal_closure(*u, cz.kernel_in_ambient);
  Cocenter coc = hopf_cocenter(u);
  CHECK(closed == coc.kernel_subspace);
}

TEST_CASE("duality consistency of center and cocenter dimensions") {
  for (const char* spec : {"sweedler", "taft:3", "group-algebra:D4", "function-algebra:D4",
                           "group-algebra:Z5"}) {
    CAPTURE(spec);
    HopfPtr h = builtin(spec);
    HopfPtr d = dual_hopf(h);
    CHECK(hopf_cocenter(h).hc->dim() == static_cast<int>(hopf_center(d).dim()));
    CHECK(static_cast<int>(hopf_center(h).dim()) == hopf_cocenter(d).hc->dim());
  }
}

TEST_CASE("cocentrality triple equivalence for emitted projections") {
  // direct definition <-> (id (x) q) ad(x) = x (x) 1 <-> W inside ker q
  auto triple_check = [](const HopfPtr& a, const HopfMorphism& q) {
    bool direct = is_cocentral(q);
    const int n = a->dim();
    bool via_ad = true;
    for (int i = 0; i < n && via_ad; ++i) {
      Vec adv = ad_apply(*a, a->basis_vec(i));
      // (id (x) q) ad(e_i) compared against e_i (x) 1_B
      Vec img = zero_vec(a->field(), static_cast<std::size_t>(n) * q.target->dim());
      for (std::size_t p = 0; p < adv.size(); ++p) {
        if (adv[p].is_zero()) continue;
        auto [u, v] = unflatten(p, n);
        Vec qv = q.apply(a->basis_vec(static_cast<int>(v)));
        for (int r = 0; r < q.target->dim(); ++r)
          if (!qv[r].is_zero()) img[u * q.target->dim() + r] += adv[p] * qv[r];
      }
      Vec expect = zero_vec(a->field(), static_cast<std::size_t>(n) * q.target->dim());
      for (int r = 0; r < q.target->dim(); ++r)
        if (!q.target->unit_vec()[r].is_zero())
          expect[static_cast<std::size_t>(i) * q.target->dim() + r] = q.target->unit_vec()[r];
      if (img != expect) via_ad = false;
    }
    bool via_w = morphism_kernel(q).contains(cocentral_subspace(a));
    CHECK(direct == via_ad);
    CHECK(direct == via_w);
    return direct;
  };

  for (const char* spec : {"sweedler", "group-algebra:Q8", "function-algebra:Q8", "taft:3"}) {
    CAPTURE(spec);
    HopfPtr h = builtin(spec);
    CHECK(triple_check(h, hopf_cocenter(h).pi));           // cocenter projection: cocentral
    CentralReport rep = central_sequence(h);
    triple_check(h, rep.quotient.projection);             // central projection: agreement only
  }
}
