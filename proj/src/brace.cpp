#include "artin/brace.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <regex>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::brace {

  using coxeter::TypeName;

  bool BraceSpec::is_trivial() const {
    return std::all_of(assign.begin(), assign.end(), [](auto const& p) { return p.is_identity(); });
  }

  std::string BraceSpec::to_string() const {
    std::ostringstream out;
    out << "type " << type.family << ' ' << type.index << " / alpha";
    for (std::size_t i = 0; i < assign.size(); ++i) {
      out << ' ' << i + 1 << ':' << assign[i].cycles();
    }
    return out.str();
  }

  BraceSpec parse_brace_spec(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      throw ParseError("expected 'type X n / alpha ...'", 1, 1);
    }
    std::string head(text.substr(0, slash));
    std::string tail(text.substr(slash + 1));
    std::istringstream hs(head);
    std::string kw;
    hs >> kw;
    if (kw != "type") {
      throw ParseError("expected 'type'", 1, 1);
    }
    std::string rest;
    std::getline(hs, rest);
    BraceSpec spec;
    spec.type = coxeter::parse_type_name(rest);
    std::size_t const n = static_cast<std::size_t>(spec.type.rank());
    spec.assign.assign(n, Permutation::identity(n));

    std::size_t const base = slash + 1;
    auto first = tail.find_first_not_of(" \t");
    if (first == std::string::npos || tail.compare(first, 5, "alpha") != 0) {
      throw ParseError("expected 'alpha'", 1, base + (first == std::string::npos ? 0 : first) + 1);
    }
    std::size_t pos = first + 5;
    static std::regex const entry(R"(\s*(\d+)\s*:\s*((?:\([^()]*\))+|id))");
    std::vector<bool> seen(n, false);
    while (tail.find_first_not_of(" \t", pos) != std::string::npos) {
      std::smatch m;
      auto begin = tail.cbegin() + static_cast<std::ptrdiff_t>(pos);
      if (!std::regex_search(begin, tail.cend(), m, entry, std::regex_constants::match_continuous)) {
        throw ParseError("expected 'i:(cycles)'", 1, base + pos + 1);
      }
      std::size_t i = std::stoul(m[1].str());
      if (i < 1 || i > n) {
        throw ParseError("generator index out of range", 1, base + pos + 1);
      }
      if (seen[i - 1]) {
        throw ParseError("generator assigned twice", 1, base + pos + 1);
      }
      seen[i - 1] = true;
      spec.assign[i - 1] = Permutation::parse_cycles(m[2].str(), n);
      pos += static_cast<std::size_t>(m.length(0));
    }
    return spec;
  }

  BraceSpec constant_spec(TypeName const& type, Permutation const& p) {
    return {type, std::vector<Permutation>(static_cast<std::size_t>(type.rank()), p)};
  }

  namespace {

    Permutation braid_term(Permutation const& x, Permutation const& y, int k) {
      Permutation r = Permutation::identity(x.size());
      for (int i = 0; i < k; ++i) {
        r = r * (i % 2 == 0 ? x : y);
      }
      return r;
    }

    bool commutative(std::vector<Permutation> const& group) {
      for (auto const& a : group) {
        for (auto const& b : group) {
          if (a * b != b * a) {
            return false;
          }
        }
      }
      return true;
    }

    Permutation cycles(std::size_t n, std::string_view text) {
      return Permutation::parse_cycles(text, n);
    }

  }  // namespace

  SpecReport validate_brace_spec(BraceSpec const& spec) {
    SpecReport report;
    auto m = coxeter::named_matrix(spec.type);
    std::size_t const n = m.rank();
    if (spec.assign.size() != n) {
      report.violations.push_back({"symmetry", "expected " + std::to_string(n) + " assignments"});
      return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.assign[i].size() != n || !coxeter::is_diagram_symmetry(m, spec.assign[i])) {
        report.violations.push_back({"symmetry", "i=" + std::to_string(i + 1)});
      }
    }
    if (!report.valid()) {
      return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        int k = m(i, j);
        if (braid_term(spec.assign[i], spec.assign[j], k)
            != braid_term(spec.assign[j], spec.assign[i], k)) {
          report.violations.push_back(
              {"homomorphism", "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1)});
        }
      }
    }
    auto image = generated_subgroup(spec.assign, n);
    for (auto const& phi : image) {
      for (std::size_t i = 0; i < n; ++i) {
        if (spec.assign[static_cast<std::size_t>(phi(static_cast<int>(i)))] != spec.assign[i]) {
          report.violations.push_back({"invariance", "phi=" + phi.cycles() + " i=" + std::to_string(i + 1)});
        }
      }
    }
    if (m.oddly_laced() && commutative(image)) {
      for (auto const& comp : m.components()) {
        for (std::size_t k = 1; k < comp.size(); ++k) {
          auto i = static_cast<std::size_t>(comp[0]), j = static_cast<std::size_t>(comp[k]);
          if (spec.assign[i] != spec.assign[j]) {
            report.violations.push_back(
                {"oddly-laced", "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1)});
          }
        }
      }
    }
    return report;
  }

  std::vector<BraceSpec> catalog(TypeName const& type) {
    auto m = coxeter::named_matrix(type);
    if (m.components().size() != 1) {
      throw DomainError("catalog: type " + type.str() + " is reducible");
    }
    std::size_t const n = m.rank();
    std::vector<BraceSpec> specs;
    switch (type.family) {
      case 'A': {
        if (n < 2) {
          break;
        }
        std::vector<int> images(n);
        for (std::size_t i = 0; i < n; ++i) {
          images[i] = static_cast<int>(n - 1 - i);
        }
        specs.push_back(constant_spec(type, Permutation(images)));
        break;
      }
      case 'D':
        specs.push_back(constant_spec(type, cycles(n, "(1 2)")));
        if (n == 4) {
          for (auto c : {"(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"}) {
            specs.push_back(constant_spec(type, cycles(n, c)));
          }
          std::vector<int> abc{1, 2, 3};
          do {
            auto ab = Permutation::transposition(n, abc[0] - 1, abc[1] - 1);
            auto bc = Permutation::transposition(n, abc[1] - 1, abc[2] - 1);
            specs.push_back({type, {ab, ab, ab, bc}});
          } while (std::next_permutation(abc.begin(), abc.end()));
        }
        break;
      case 'E':
        if (n == 6) {
          specs.push_back(constant_spec(type, cycles(n, "(1 5)(2 4)")));
        }
        break;
      case 'F':
        specs.push_back(constant_spec(type, cycles(n, "(1 4)(2 3)")));
        break;
      case 'G':
      case 'I':
        specs.push_back(constant_spec(type, cycles(n, "(1 2)")));
        break;
      default:
        break;
    }
    std::sort(specs.begin(), specs.end());
    return specs;
  }

  bool catalog_row_flagged(TypeName const& type) {
    return (type.family == 'A' && type.index == 2) || (type.family == 'I' && type.index == 3);
  }

  std::vector<BraceSpec> enumerate_brace_specs(TypeName const& type) {
    auto m = coxeter::named_matrix(type);
    auto symmetries = coxeter::diagram_symmetries(m);
    if (symmetries.size() > 6) {
      throw DomainError("enumerate_brace_specs: diagram symmetry group too large");
    }
    std::size_t const n = m.rank();
    std::vector<BraceSpec> result;
    std::vector<std::size_t> choice(n, 0);
    for (;;) {
      BraceSpec spec{type, {}};
      for (auto c : choice) {
        spec.assign.push_back(symmetries[c]);
      }
      if (!spec.is_trivial() && validate_brace_spec(spec).valid()) {
        result.push_back(std::move(spec));
      }
      std::size_t k = 0;
      while (k < n && ++choice[k] == symmetries.size()) {
        choice[k++] = 0;
      }
      if (k == n) {
        break;
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // SkewBrace
  ////////////////////////////////////////////////////////////////////////

  SkewBrace::SkewBrace(ArtinGroup const& G, BraceSpec spec, bool force)
      : _G(G), _spec(std::move(spec)) {
    if (_spec.assign.size() != G.rank()) {
      throw DomainError("brace spec rank does not match the group");
    }
    for (auto const& p : _spec.assign) {
      if (!coxeter::is_diagram_symmetry(G.matrix(), p)) {
        throw DomainError("assigned permutation " + p.cycles() + " is not a diagram symmetry");
      }
    }
    if (!force) {
      auto report = validate_brace_spec(_spec);
      if (!report.valid()) {
        auto const& v = report.violations.front();
        throw DomainError("invalid brace spec: " + v.check + " " + v.witness);
      }
    }
    _alpha_delta = Permutation::identity(G.rank());
    for (int i : G.word(G.delta_power(1))) {
      _alpha_delta = _alpha_delta * _spec.assign[static_cast<std::size_t>(i)];
    }
  }

  Permutation SkewBrace::alpha(GroupElement const& g) const {
    std::size_t const n = _G.rank();
    Permutation d = g.dpow >= 0 ? _alpha_delta : _alpha_delta.inverse();
    Permutation r = Permutation::identity(n);
    for (std::int64_t k = 0; k < (g.dpow >= 0 ? g.dpow : -g.dpow); ++k) {
      r = r * d;
    }
    for (int i : _G.word(g.pos)) {
      r = r * _spec.assign[static_cast<std::size_t>(i)];
    }
    return r;
  }

  GroupElement SkewBrace::act(Permutation const& p, GroupElement const& g) const {
    return p.is_identity() ? g : _G.apply_symmetry(p, g);
  }

  GroupElement SkewBrace::circ(GroupElement const& g, GroupElement const& h) const {
    return _G.multiply(g, act(alpha(g), h));
  }

  GroupElement SkewBrace::circ_inv(GroupElement const& g) const {
    return act(alpha(g).inverse(), _G.inverse(g));
  }

  GroupElement SkewBrace::lambda(GroupElement const& g, GroupElement const& h) const {
    return _G.multiply(_G.inverse(g), circ(g, h));
  }

  GroupElement SkewBrace::circ_power(GroupElement const& g, std::size_t k) const {
    if (k == 0) {
      return _G.identity();
    }
    GroupElement r = g;
    for (std::size_t i = 1; i < k; ++i) {
      r = circ(r, g);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  bool BraceVerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.failures == 0; });
  }

  BraceVerifyReport verify_brace_identity(ArtinGroup const& G, BraceSpec const& spec,
                                          std::size_t samples, std::uint64_t seed, bool force) {
    SkewBrace B(G, spec, force);
    std::mt19937_64 rng(seed);
    BraceVerifyReport report;
    report.samples = samples;
    report.seed = seed;
    report.checks = {{"skew_brace_identity", 0, {}}, {"lambda_equals_alpha", 0, {}},
                     {"lambda_invariance", 0, {}},   {"circ_associative", 0, {}},
                     {"socle_membership", 0, {}}};
    auto fail = [&](std::size_t which, std::string const& witness) {
      auto& c = report.checks[which];
      if (c.failures++ == 0) {
        c.witness = witness;
      }
    };
    std::vector<GroupElement> atoms;
    for (std::size_t i = 0; i < G.rank(); ++i) {
      atoms.push_back(G.generator(static_cast<int>(i)));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      auto a = sample_element(G, rng);
      auto b = sample_element(G, rng);
      auto c = sample_element(G, rng);
      std::string triple = "a=" + G.to_word(a) + " b=" + G.to_word(b) + " c=" + G.to_word(c);

      auto ab = B.circ(a, b);
      auto ac = B.circ(a, c);
      if (ab != G.multiply(a, b)) {
        ++report.nontrivial_pairs;
      }
      // a o (b + c) = a o b - a + a o c
      auto lhs = B.circ(a, G.multiply(b, c));
      auto rhs = G.multiply(G.multiply(ab, G.inverse(a)), ac);
      if (lhs != rhs) {
        fail(0, triple);
      }
      auto lab = B.lambda(a, b);
      if (lab != B.act(B.alpha(a), b)) {
        fail(1, triple);
      }
      if (B.lambda(lab, c) != B.lambda(b, c) || B.alpha(lab) != B.alpha(b)) {
        fail(2, triple);
      }
      if (B.circ(ab, c) != B.circ(a, B.circ(b, c))) {
        fail(3, triple);
      }
      bool acts_trivially = std::all_of(atoms.begin(), atoms.end(),
                                        [&](auto const& x) { return B.lambda(a, x) == x; });
      if (acts_trivially != B.alpha(a).is_identity()) {
        fail(4, triple);
      }
    }
    return report;
  }

  bool TorusReport::pass() const {
    if (equal_at.size() != n || n == 0) {
      return false;
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (equal_at[k]) {
        return false;
      }
    }
    return equal_at[n - 1] && power_is_delta;
  }

  TorusReport torus_relation_check(std::size_t n) {
    if (n < 3) {
      throw DomainError("torus_relation_check: n must be at least 3");
    }
    TypeName type{'I', static_cast<int>(n)};
    ArtinGroup G(type);
    SkewBrace B(G, catalog(type).front());
    TorusReport report;
    report.n = n;
    auto s1 = G.generator(0), s2 = G.generator(1);
    GroupElement p1 = s1, p2 = s2;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k > 1) {
        p1 = B.circ(p1, s1);
        p2 = B.circ(p2, s2);
      }
      report.equal_at.push_back(p1 == p2);
    }
    report.power_is_delta = p1 == G.delta() && p2 == G.delta();
    report.sigma1_power = G.to_word(p1);
    report.sigma2_power = G.to_word(p2);
    return report;
  }

  CenterReport delta_center_check(ArtinGroup const& G, BraceSpec const& spec, std::size_t k_max,
                                  std::uint64_t seed, std::size_t samples) {
    SkewBrace B(G, spec);
    CenterReport report;
    for (std::size_t k = 1; k <= k_max && !report.k; ++k) {
      auto d = G.delta(static_cast<std::int64_t>(k));
      bool central = true;
      for (std::size_t i = 0; i < G.rank() && central; ++i) {
        auto s = G.generator(static_cast<int>(i));
        central = G.multiply(d, s) == G.multiply(s, d);
      }
      if (central && B.alpha(d).is_identity()) {
        report.k = k;
      }
    }
    if (!report.k) {
      return report;
    }
    auto d = G.delta(static_cast<std::int64_t>(*report.k));
    std::mt19937_64 rng(seed);
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
      auto g = sample_element(G, rng);
      if (B.circ(d, g) != B.circ(g, d)) {
        if (report.circ_failures++ == 0) {
          report.witness = "g=" + G.to_word(g);
        }
      }
    }
    return report;
  }

}  // namespace artin::brace
