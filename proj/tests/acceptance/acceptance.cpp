// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "artin/brace.hpp"
#include "artin/coxeter.hpp"
#include "artin/exact_arith.hpp"
#include "artin/finite_brace.hpp"
#include "artin/garside.hpp"
#include "artin/order_lab.hpp"
#include "../oracle/word_oracle.hpp"
#include "../support/generators.hpp"

using namespace artin;

namespace {

  // Numeric tolerance for the minimal-polynomial root check.
  constexpr double kRootTolerance = 1e-9;

  struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        if (pass) {
          detail = what;
        }
        pass = false;
      }
    }
  };

  coxeter::TypeName T(char f, int k) { return {f, k}; }

  std::vector<coxeter::TypeName> lattice_types() {
    return {T('A', 2), T('A', 3), T('B', 3), T('D', 4), T('F', 4), T('I', 5), T('I', 7)};
  }

  Outcome ac1_group_orders() {
    Outcome o;
    std::vector<std::pair<coxeter::TypeName, std::size_t>> cases{
        {T('A', 2), 6}, {T('A', 3), 24}, {T('B', 3), 48}, {T('D', 4), 192}, {T('F', 4), 1152}, {T('E', 6), 51840}};
    for (int n = 4; n <= 8; ++n) {
      cases.push_back({T('I', n), 2 * static_cast<std::size_t>(n)});
    }
    for (auto const& [type, expected] : cases) {
      auto table = coxeter::enumerate_group(coxeter::named_matrix(type));
      o.require(table.size() == expected, type.str() + " has order " + std::to_string(table.size()));
    }
    o.detail = o.pass ? std::to_string(cases.size()) + " types" : o.detail;
    return o;
  }

  Outcome ac2_interval_law() {
    Outcome o;
    std::size_t pairs = 0;
    for (auto const& type : lattice_types()) {
      garside::ArtinGroup G(type);
      for (std::size_t i = 0; i < G.rank(); ++i) {
        for (std::size_t j = i + 1; j < G.rank(); ++j) {
          auto top = G.join(G.atom(static_cast<int>(i)), G.atom(static_cast<int>(j)));
          auto size = order::interval(G, G.monoid_identity(), top).size();
          o.require(size == 2 * static_cast<std::size_t>(G.matrix()(i, j)),
                    type.str() + " pair " + std::to_string(i + 1) + "," + std::to_string(j + 1));
          ++pairs;
        }
      }
    }
    if (o.pass) {
      o.detail = std::to_string(pairs) + " atom pairs";
    }
    return o;
  }

  Outcome ac3_rigidity() {
    Outcome o;
    for (auto const& type : lattice_types()) {
      garside::ArtinGroup G(type);
      o.require(order::check_rigidity(G, false).pass(), type.str() + " not rigid");
      o.require(order::check_rigidity(G, true).pass(), type.str() + " not dually rigid");
    }
    if (o.pass) {
      o.detail = "rigid and dually rigid on 7 types";
    }
    return o;
  }

  Outcome ac4_oracle() {
    Outcome o;
    std::size_t checked = 0;
    for (auto [type, h] : {std::pair{T('A', 2), 6}, {T('A', 3), 6}, {T('I', 5), 8}}) {
      auto const hs = static_cast<std::size_t>(h);
      garside::ArtinGroup G(type);
      oracle::WordOracle words(G.matrix());
      auto ball = oracle::build_hasse_ball(words, 2 * hs);
      std::size_t small = 0;
      while (small < ball.size() && ball.heights[small] <= hs) {
        ++small;
      }
      std::vector<garside::MonoidElement> engine_of;
      std::unordered_set<garside::MonoidElement, garside::MonoidElementHash> distinct;
      for (auto const& rep : ball.reps) {
        engine_of.push_back(G.monoid_from_word(oracle::to_letters(rep)));
        distinct.insert(engine_of.back());
      }
      o.require(distinct.size() == ball.size(), type.str() + " normal forms merge distinct classes");
      o.require(order::build_ball(G, hs).size() == small, type.str() + " ball size differs");
      auto downs = oracle::down_sets(ball, small);
      for (std::size_t a = 0; a < small && o.pass; ++a) {
        for (std::size_t b = 0; b < small && o.pass; ++b) {
          auto const& x = engine_of[a];
          auto const& y = engine_of[b];
          std::string pair = type.str() + " x=" + G.to_normal_form(x) + " y=" + G.to_normal_form(y);
          auto prod = ball.walk(a, ball.reps[b]);
          o.require(prod < ball.size() && G.multiply(x, y) == engine_of[prod], "multiply " + pair);
          auto g = oracle::gcd_node(ball, downs, a, b);
          o.require(g < ball.size() && G.gcd(x, y) == engine_of[g], "gcd " + pair);
          auto lcm = words.lcm(ball.reps[a], ball.reps[b]);
          o.require(words.equal_by_reversing(oracle::to_word(G.word(G.join(x, y))), lcm), "join " + pair);
          ++checked;
        }
      }
    }
    if (o.pass) {
      o.detail = std::to_string(checked) + " pairs";
    }
    return o;
  }

  Outcome ac5_ball_automorphisms() {
    Outcome o;
    for (auto [type, h, expected] : {std::tuple{T('A', 2), 5, 2}, {T('A', 3), 5, 2}, {T('D', 4), 5, 6}, {T('I', 5), 7, 2}}) {
      garside::ArtinGroup G(type);
      auto ball = order::build_ball(G, static_cast<std::size_t>(h));
      auto auts = order::poset_automorphisms(ball, true);
      o.require(auts.size() == static_cast<std::size_t>(expected),
                type.str() + " has " + std::to_string(auts.size()) + " automorphisms");
      o.require(G.symmetries().size() == static_cast<std::size_t>(expected), type.str() + " symmetry count");
      for (auto const& a : auts) {
        o.require(a[0] == 0, type.str() + " moves e");
        o.require(coxeter::is_diagram_symmetry(G.matrix(), order::atom_action(ball, G, a)),
                  type.str() + " atom action is not a diagram symmetry");
      }
    }
    if (o.pass) {
      o.detail = "A_2:2 A_3:2 D_4:6 I_5:2";
    }
    return o;
  }

  std::vector<coxeter::TypeName> brace_types() {
    std::vector<coxeter::TypeName> types{T('A', 2), T('A', 3), T('A', 4), T('D', 4), T('D', 5), T('F', 4), T('E', 6)};
    for (int n = 4; n <= 8; ++n) {
      types.push_back(T('I', n));
    }
    return types;
  }

  Outcome ac6_brace_verification() {
    Outcome o;
    std::size_t specs = 0;
    for (auto const& type : brace_types()) {
      garside::ArtinGroup G(type);
      for (auto const& spec : brace::catalog(type)) {
        auto r = brace::verify_brace_identity(G, spec, 1000, 20240601 + specs);
        for (auto const& c : r.checks) {
          o.require(c.failures == 0, spec.to_string() + " " + c.name + " " + c.witness);
        }
        o.require(r.nontrivial_pairs > 0, spec.to_string() + " looks trivial");
        ++specs;
      }
    }
    o.require(specs == 22, "expected 22 catalog specs, got " + std::to_string(specs));
    if (o.pass) {
      o.detail = std::to_string(specs) + " specs x 1000 triples";
    }
    return o;
  }

  Outcome ac7_classification() {
    Outcome o;
    std::vector<std::pair<coxeter::TypeName, std::size_t>> cases{
        {T('A', 3), 1}, {T('A', 4), 1}, {T('A', 5), 1}, {T('D', 5), 1}, {T('E', 6), 1}, {T('F', 4), 1}, {T('D', 4), 11}};
    for (int n = 4; n <= 8; ++n) {
      cases.push_back({T('I', n), 1});
    }
    for (auto const& [type, expected] : cases) {
      auto found = brace::enumerate_brace_specs(type);
      o.require(found.size() == expected, type.str() + " enumerates " + std::to_string(found.size()));
      o.require(found == brace::catalog(type), type.str() + " differs from the catalog");
    }
    if (o.pass) {
      o.detail = "A_3..A_5 (braid groups on 4..6 strands), D_5, E_6, F_4, I_4..I_8: 1; D_4: 11";
    }
    return o;
  }

  Outcome ac8_torus() {
    Outcome o;
    for (std::size_t n = 4; n <= 8; ++n) {
      auto r = brace::torus_relation_check(n);
      o.require(r.pass(), "n=" + std::to_string(n));
    }
    if (o.pass) {
      o.detail = "n=4..8";
    }
    return o;
  }

  Outcome ac9_center() {
    Outcome o;
    for (auto [type, k] : {std::pair{T('I', 6), 1u}, {T('I', 5), 2u}, {T('A', 2), 2u}}) {
      garside::ArtinGroup G(type);
      auto r = brace::delta_center_check(G, brace::catalog(type).front(), 6, 7, 100);
      o.require(r.k && *r.k == k, type.str() + " k mismatch");
      o.require(r.samples == 100 && r.circ_failures == 0, type.str() + " not o-central " + r.witness);
    }
    if (o.pass) {
      o.detail = "I_6:1 I_5:2 A_2:2";
    }
    return o;
  }

  Outcome ac10_holomorph() {
    Outcome o;
    std::vector<std::pair<std::string, finite::FiniteGroup>> groups{
        {"Z4", finite::FiniteGroup::cyclic(4)}, {"Z2xZ2", finite::FiniteGroup::klein()},
        {"Z5", finite::FiniteGroup::cyclic(5)}, {"Z6", finite::FiniteGroup::cyclic(6)},
        {"S3", finite::FiniteGroup::symmetric3()}};
    std::ostringstream counts;
    for (auto const& [name, G] : groups) {
      auto r = finite::finite_holomorph_roundtrip(G);
      o.require(r.pass(), name + " round trip");
      counts << name << ":" << r.braces.size() << " ";
      if (name == "Z4") {
        o.require(r.braces.size() == 2, "Z4 has " + std::to_string(r.braces.size()) + " braces");
      }
    }
    if (o.pass) {
      o.detail = counts.str() + "braces";
    }
    return o;
  }

  Outcome ac11_exact() {
    Outcome o;
    double worst = 0;
    for (unsigned L = 1; L <= 30; ++L) {
      double r = std::abs(exact::evaluate(exact::minpoly_two_cos(L), 2 * std::cos(std::numbers::pi / L)));
      worst = std::max(worst, r);
      o.require(r < kRootTolerance, "L=" + std::to_string(L));
    }
    testgen::Rng rng(11);
    std::size_t triples = 0;
    for (unsigned L : {4u, 5u, 7u, 9u, 12u}) {
      auto ctx = exact::FieldContext::make(L);
      auto one = exact::ExactReal::from_rational(ctx, 1);
      for (int k = 0; k < 2000; ++k, ++triples) {
        auto a = testgen::random_real(rng, ctx);
        auto b = testgen::random_real(rng, ctx);
        auto c = testgen::random_real(rng, ctx);
        o.require((a + b) + c == a + (b + c), "additive associativity");
        o.require((a * b) * c == a * (b * c), "multiplicative associativity");
        o.require(a * (b + c) == a * b + a * c, "distributivity");
        o.require(a * b == b * a && a + b == b + a, "commutativity");
        if (!a.is_zero()) {
          o.require(a * a.inverse() == one, "inverse");
        }
      }
    }
    if (o.pass) {
      std::ostringstream d;
      d << "max root residual " << std::scientific << std::setprecision(2) << worst << ", " << triples
        << " triples";
      o.detail = d.str();
    }
    return o;
  }

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "group orders", 120, ac1_group_orders},
      {2, "interval-size law", 30, ac2_interval_law},
      {3, "rigidity and dual rigidity", 60, ac3_rigidity},
      {4, "oracle equivalence", 180, ac4_oracle},
      {5, "ball automorphisms", 120, ac5_ball_automorphisms},
      {6, "skew-brace verification", 180, ac6_brace_verification},
      {7, "classification counts", 60, ac7_classification},
      {8, "torus relation", 10, ac8_torus},
      {9, "central Garside element", 30, ac9_center},
      {10, "holomorph correspondence", 60, ac10_holomorph},
      {11, "exact arithmetic", 30, ac11_exact},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "over time limit; " + o.detail;
    }
    failures += o.pass ? 0 : 1;
    std::cout << "AC" << std::setw(2) << std::left << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  "
              << c.name << "  [" << std::fixed << std::setprecision(2) << secs << "s / " << std::setprecision(0)
              << c.limit_seconds << "s]  " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
