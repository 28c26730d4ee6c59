#include <doctest.h>

#include <algorithm>
#include <set>

#include "artin/coxeter.hpp"
#include "artin/errors.hpp"

using namespace artin;
using namespace artin::coxeter;

namespace {

  CoxeterMatrix named(char family, int index) { return named_matrix(TypeName{family, index}); }

  GroupTable table_of(CoxeterMatrix const& m) { return enumerate_group(m); }

  //! Applies a diagram symmetry letterwise to a word.
  std::vector<int> relabel(Permutation const& p, std::vector<int> word) {
    for (auto& x : word) {
      x = p(x);
    }
    return word;
  }

  std::uint32_t evaluate_word(GroupTable const& t, std::vector<int> const& word) {
    std::uint32_t w = t.identity();
    for (int i : word) {
      w = t.rmul(w, i);
    }
    return w;
  }

}  // namespace

TEST_CASE("parse matrices and named shorthand") {
  CHECK(parse_coxeter("rank 2\n1 3\n3 1") == named('A', 2));
  CHECK(parse_coxeter("# comment\nrank 2 # trailing\n1 3\n3 1\n") == named('A', 2));
  auto a3 = parse_coxeter("type A 3");
  CHECK(a3.rank() == 3);
  CHECK(a3(0, 1) == 3);
  CHECK(a3(1, 2) == 3);
  CHECK(a3(0, 2) == 2);
  CHECK(parse_coxeter("type D 4") == named('D', 4));
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_coxeter("rank 2\n1 2\n3 1");
    FAIL("asymmetric matrix accepted");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_coxeter("rank 2\n2 3\n3 1"), ParseError);
  CHECK_THROWS_AS(parse_coxeter("rank 2\n1 1\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_coxeter("rank 2\n1 3"), ParseError);
  CHECK_THROWS_AS(parse_coxeter("rank 2\n1 x\n3 1"), ParseError);
  CHECK_THROWS_AS(parse_coxeter(""), ParseError);
  CHECK_THROWS_AS(parse_coxeter("type Q 3"), ParseError);
}

TEST_CASE("classification") {
  auto a2 = classify_spherical(named('A', 2));
  REQUIRE(a2.spherical);
  CHECK(a2.components == std::vector<TypeName>{{'A', 2}});

  CHECK_FALSE(classify_spherical(parse_coxeter("rank 3\n1 3 3\n3 1 3\n3 3 1")).spherical);

  auto sum = classify_spherical(parse_coxeter("rank 4\n1 3 2 2\n3 1 2 2\n2 2 1 5\n2 2 5 1"));
  REQUIRE(sum.spherical);
  CHECK(sum.components == std::vector<TypeName>{{'A', 2}, {'I', 5}});

  // Relabelled inputs still classify.
  auto shuffled = classify_spherical(parse_coxeter("rank 3\n1 2 3\n2 1 4\n3 4 1"));
  REQUIRE(shuffled.spherical);
  CHECK(shuffled.components == std::vector<TypeName>{{'B', 3}});
}

TEST_CASE("diagram symmetry groups") {
  auto a3 = diagram_symmetries(named('A', 3));
  REQUIRE(a3.size() == 2);
  CHECK(a3[0].is_identity());
  CHECK(a3[1] == Permutation::parse_cycles("(1 3)", 3));

  auto d4 = diagram_symmetries(named('D', 4));
  CHECK(d4.size() == 6);
  for (auto const& p : d4) {
    CHECK(p(3) == 3);
  }

  auto f4 = diagram_symmetries(named('F', 4));
  REQUIRE(f4.size() == 2);
  CHECK(f4[1] == Permutation::parse_cycles("(1 4)(2 3)", 4));

  CHECK(diagram_symmetries(named('E', 6)).size() == 2);
  CHECK(diagram_symmetries(named('B', 4)).size() == 1);
  CHECK(diagram_symmetries(named('H', 3)).size() == 1);
  CHECK(diagram_symmetries(named('I', 7)).size() == 2);
}

TEST_CASE("diagram symmetries form a group of label-preserving maps") {
  for (auto type : {TypeName{'A', 5}, TypeName{'D', 4}, TypeName{'D', 5}, TypeName{'E', 6}, TypeName{'F', 4}}) {
    auto m = named_matrix(type);
    auto syms = diagram_symmetries(m);
    std::set<Permutation> all(syms.begin(), syms.end());
    for (auto const& p : syms) {
      CHECK(is_diagram_symmetry(m, p));
      CHECK(all.contains(p.inverse()));
      for (auto const& q : syms) {
        CHECK(all.contains(p * q));
      }
    }
  }
}

TEST_CASE("geometric generators") {
  auto a1 = named('A', 1);
  auto ctx1 = exact::FieldContext::make(a1.lcm());
  auto g1 = geometric_generators(a1, ctx1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].matrix.at(0, 0) == exact::ExactReal::from_rational(ctx1, -1));

  for (auto type : {TypeName{'A', 3}, TypeName{'B', 3}, TypeName{'H', 3}, TypeName{'I', 8}}) {
    auto m = named_matrix(type);
    auto ctx = exact::FieldContext::make(m.lcm());
    auto gens = geometric_generators(m, ctx);
    auto form = bilinear_form(m, ctx);
    auto id = ExactMatrix::identity(ctx, m.rank());
    for (auto const& g : gens) {
      CHECK(g.matrix * g.matrix == id);
      CHECK(preserves_form(g.matrix, form));
    }
  }

  // s1 s2 s1 = s2 s1 s2 in A_2.
  auto a2 = named('A', 2);
  auto ctx = exact::FieldContext::make(a2.lcm());
  auto g = geometric_generators(a2, ctx);
  CHECK(g[0].matrix * g[1].matrix * g[0].matrix == g[1].matrix * g[0].matrix * g[1].matrix);
}

TEST_CASE("group enumeration orders") {
  auto a2 = table_of(named('A', 2));
  CHECK(a2.size() == 6);
  CHECK(a2.length(a2.longest()) == 3);
  auto i5 = table_of(named('I', 5));
  CHECK(i5.size() == 10);
  CHECK(i5.length(i5.longest()) == 5);
  CHECK(table_of(named('D', 4)).size() == 192);

  for (auto type : {TypeName{'A', 4}, TypeName{'B', 4}, TypeName{'D', 5}, TypeName{'F', 4},
                    TypeName{'H', 3}, TypeName{'I', 9}, TypeName{'E', 6}}) {
    CAPTURE(type.str());
    CHECK(table_of(named_matrix(type)).size() == classical_order(type));
  }
  CHECK(classical_order({'A', 3}) == 24);
  CHECK(classical_order({'D', 6}) == 32 * 720);
  CHECK(classical_order({'E', 6}) == 51840);
  CHECK(classical_order({'F', 4}) == 1152);

  CHECK_THROWS_AS(enumerate_group(named('E', 6), 1000), NotFiniteError);
}

TEST_CASE("descent queries") {
  auto t = table_of(named('A', 2));
  auto id = group_queries(t, t.identity());
  CHECK(id.left == 0);
  CHECK(id.right == 0);
  CHECK(id.length == 0);
  auto top = group_queries(t, t.longest());
  CHECK(top.left == 3);
  CHECK(top.right == 3);
  auto w = group_queries(t, evaluate_word(t, {0, 1}));
  CHECK(w.left == 1);
  CHECK(w.right == 2);
  CHECK(w.length == 2);
  CHECK(group_queries(t, t.element(t.longest())).length == 3);
}

TEST_CASE("length complements to the longest element") {
  for (auto type : {TypeName{'A', 4}, TypeName{'B', 3}, TypeName{'D', 4}, TypeName{'H', 3}, TypeName{'F', 4}}) {
    auto t = table_of(named_matrix(type));
    auto top = t.length(t.longest());
    for (std::uint32_t w = 0; w < t.size(); ++w) {
      REQUIRE(t.length(w) + t.length(t.multiply(t.inverse(w), t.longest())) == top);
    }
  }
}

TEST_CASE("diagram symmetries preserve length") {
  for (auto type : {TypeName{'A', 4}, TypeName{'D', 4}, TypeName{'E', 6}, TypeName{'F', 4}, TypeName{'I', 6}}) {
    auto m = named_matrix(type);
    auto t = table_of(m);
    for (auto const& p : diagram_symmetries(m)) {
      for (std::uint32_t w = 0; w < t.size(); w += 7) {
        auto image = evaluate_word(t, relabel(p, t.reduced_word(w)));
        REQUIRE(t.length(image) == t.length(w));
      }
    }
  }
}

TEST_CASE("reduced words evaluate back to their element") {
  auto t = table_of(named('B', 4));
  for (std::uint32_t w = 0; w < t.size(); ++w) {
    auto word = t.reduced_word(w);
    REQUIRE(word.size() == t.length(w));
    REQUIRE(evaluate_word(t, word) == w);
  }
}
