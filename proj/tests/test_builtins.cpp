#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfseq/builtins.hpp"

using namespace hopfseq;

TEST_CASE("group catalog tables are groups") {
  for (const Group& g : {Group::cyclic(6), Group::symmetric3(), Group::dihedral4(),
                         Group::quaternion8(), Group::klein4()}) {
    CAPTURE(g.name);
    const int n = g.order();
    // identity, inverses, associativity
    for (int a = 0; a < n; ++a) {
      CHECK(g.mul(g.identity, a) == a);
      CHECK(g.mul(a, g.identity) == a);
      CHECK(g.mul(a, g.inverse(a)) == g.identity);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("group invariants") {
  CHECK(Group::symmetric3().order() == 6);
  CHECK_FALSE(Group::symmetric3().is_abelian());
  CHECK(Group::symmetric3().exponent() == 6);
  CHECK(Group::dihedral4().order() == 8);
  CHECK(Group::dihedral4().exponent() == 4);
  CHECK(Group::quaternion8().exponent() == 4);
  CHECK(Group::klein4().is_abelian());
  CHECK(Group::klein4().exponent() == 2);
  CHECK(named_group("Z5").order() == 5);
  CHECK(named_group("Z2xZ2").order() == 4);
  CHECK_THROWS(named_group("Z0"));
  CHECK_THROWS(named_group("M11"));
}

TEST_CASE("default fields contain the needed roots of unity") {
  CHECK(builtin("group-algebra:V4")->field() == Field::rationals());
  CHECK(builtin("group-algebra:Z2")->field() == Field::rationals());
  CHECK(builtin("group-algebra:Z3")->field() == Field::cyclotomic(3));
  CHECK(builtin("group-algebra:S3")->field() == Field::cyclotomic(6));
  CHECK(builtin("group-algebra:Q8")->field() == Field::cyclotomic(4));
  CHECK(builtin("function-algebra:D4")->field() == Field::cyclotomic(4));
  CHECK(builtin("small-quantum-sl2:p=3")->field() == Field::cyclotomic(3));
  CHECK(builtin("sweedler")->field() == Field::rationals());
}

TEST_CASE("builtin spec parsing") {
  CHECK(builtin("taft:n=3")->dim() == 9);
  CHECK(builtin("taft:3")->dim() == 9);  // bare positional parameter
  CHECK(builtin("group-algebra:group=Q8")->dim() == 8);
  CHECK(builtin("group-algebra:Z4,field=Qz12")->field() == Field::cyclotomic(12));
  CHECK(builtin("trivial")->dim() == 1);
  CHECK_THROWS(builtin("group-algebra"));
  CHECK_THROWS(builtin("no-such-algebra"));
  CHECK_THROWS(builtin("small-quantum-sl2:p=4"));  // p must be odd
  CHECK_THROWS(builtin("taft:n=1"));
}

TEST_CASE("builtin instances are cached per spec") {
  CHECK(builtin("group-algebra:Q8").get() == builtin("group-algebra:Q8").get());
}

TEST_CASE("field name parsing") {
  CHECK(parse_field_name("Q") == Field::rationals());
  CHECK(parse_field_name("F7") == Field::prime(7));
  CHECK(parse_field_name("Qz5") == Field::cyclotomic(5));
  CHECK(parse_field_name("Q(z5)") == Field::cyclotomic(5));
  CHECK_THROWS(parse_field_name("R"));
  CHECK_THROWS(parse_field_name("F8"));
}

TEST_CASE("labels of the quantum algebras") {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  CHECK(u->label(0) == "1");
  bool has_fke = false;
  for (int i = 0; i < u->dim(); ++i)
    if (u->label(i) == "F K E") has_fke = true;
  CHECK(has_fke);
  HopfPtr t = builtin("sweedler");
  CHECK(t->labels() == std::vector<std::string>{"1", "x", "g", "gx"});
}
