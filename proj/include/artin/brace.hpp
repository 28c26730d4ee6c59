#pragma once

// Skew braces (G, +, o) on a spherical Artin-Tits group G whose lambda-map
// takes values in the diagram symmetries: g o h = g + alpha_g(h), with alpha
// a homomorphism determined by its values on the generators.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/garside.hpp"
#include "artin/permutation.hpp"

namespace artin::brace {

  using garside::ArtinGroup;
  using garside::GroupElement;

  //! Values of alpha on the generators, as permutations of 0-based indices.
  struct BraceSpec {
    coxeter::TypeName type;
    std::vector<Permutation> assign;

    //! True iff every generator maps to the identity.
    bool is_trivial() const;
    //! "type D 4 / alpha 1:(1 2) 2:(1 2) 3:(1 2) 4:(2 3)"
    std::string to_string() const;

    friend bool operator==(BraceSpec const&, BraceSpec const&) = default;
    friend auto operator<=>(BraceSpec const&, BraceSpec const&) = default;
  };

  //! Inverse of BraceSpec::to_string; throws ParseError.
  BraceSpec parse_brace_spec(std::string_view text);

  //! Constant assignment of p to every generator.
  BraceSpec constant_spec(coxeter::TypeName const& type, Permutation const& p);

  struct SpecViolation {
    std::string check;    // "symmetry", "homomorphism", "invariance", "oddly-laced"
    std::string witness;  // e.g. "i=1 j=2" or "phi=(1 3) i=2"
  };

  struct SpecReport {
    std::vector<SpecViolation> violations;
    bool valid() const noexcept { return violations.empty(); }
  };

  //! Diagram-symmetry membership, braid relations among the alpha_i, invariance
  //! alpha_{phi(i)} = alpha_i over the generated subgroup, and, for oddly laced
  //! types with abelian image, constancy on each connected component.
  SpecReport validate_brace_spec(BraceSpec const& spec);

  //! Non-trivial formations from the classification table. Rank-2 types I_m
  //! with m = 3 are reported as A_2 and get the constant swap.
  //! Throws DomainError for types outside the spherical catalog.
  std::vector<BraceSpec> catalog(coxeter::TypeName const& type);

  //! True when the catalog row for this type is not covered by the
  //! classification table (A_n from n = 3, I_m from m = 4) but passes every check.
  bool catalog_row_flagged(coxeter::TypeName const& type);

  //! All valid non-trivial assignments into the diagram symmetry group, sorted.
  //! Throws DomainError when the symmetry group has more than 6 elements.
  std::vector<BraceSpec> enumerate_brace_specs(coxeter::TypeName const& type);

  //! The brace (G, +, o_alpha). An invalid spec is rejected unless forced,
  //! in which case alpha is evaluated letterwise along normal-form words.
  class SkewBrace {
   public:
    SkewBrace(ArtinGroup const& G, BraceSpec spec, bool force = false);

    ArtinGroup const& group() const noexcept { return _G; }
    BraceSpec const& spec() const noexcept { return _spec; }

    //! alpha_g = alpha(Delta)^p * alpha_{x_1} * ... for g = Delta^p x_1...x_k.
    Permutation alpha(GroupElement const& g) const;
    //! Diagram symmetry applied to a group element.
    GroupElement act(Permutation const& p, GroupElement const& g) const;
    GroupElement circ(GroupElement const& g, GroupElement const& h) const;
    GroupElement circ_inv(GroupElement const& g) const;
    //! -g + g o h
    GroupElement lambda(GroupElement const& g, GroupElement const& h) const;
    //! g o g o ... o g (k >= 1 factors)
    GroupElement circ_power(GroupElement const& g, std::size_t k) const;

   private:
    ArtinGroup const& _G;
    BraceSpec _spec;
    Permutation _alpha_delta;
  };

  //! Positive word of length at most max_height, inverted with probability 1/2.
  template <class Rng>
  GroupElement sample_element(ArtinGroup const& G, Rng& rng, std::size_t max_height = 4) {
    std::size_t len = static_cast<std::size_t>(rng() % (max_height + 1));
    std::vector<int> word(len);
    for (auto& x : word) {
      x = static_cast<int>(rng() % G.rank());
    }
    GroupElement g = G.from_monoid(G.monoid_from_word(word));
    return rng() % 2 == 0 ? g : G.inverse(g);
  }

  struct BraceCheck {
    std::string name;
    std::size_t failures = 0;
    std::string witness;  // first failing triple
  };

  struct BraceVerifyReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<BraceCheck> checks;
    std::size_t nontrivial_pairs = 0;  // sampled (a, b) with a o b != a + b

    bool pass() const;
  };

  //! Checks on seeded triples: skew-brace identity, lambda = alpha,
  //! lambda_{lambda_a(b)} = lambda_b, associativity of o, and socle membership.
  BraceVerifyReport verify_brace_identity(ArtinGroup const& G, BraceSpec const& spec,
                                          std::size_t samples, std::uint64_t seed,
                                          bool force = false);

  struct TorusReport {
    std::size_t n = 0;
    std::vector<bool> equal_at;  // index k-1: sigma1^ok == sigma2^ok
    bool power_is_delta = false;
    std::string sigma1_power;
    std::string sigma2_power;

    bool pass() const;
  };

  //! Iterated o-powers of the atoms in I_n with the catalog spec.
  TorusReport torus_relation_check(std::size_t n);

  struct CenterReport {
    std::optional<std::size_t> k;
    std::size_t samples = 0;
    std::size_t circ_failures = 0;
    std::string witness;

    bool pass() const { return k.has_value() && circ_failures == 0; }
  };

  //! Least k <= k_max with Delta^k additively central and alpha(Delta^k) = id,
  //! then o-centrality of Delta^k on seeded samples.
  CenterReport delta_center_check(ArtinGroup const& G, BraceSpec const& spec, std::size_t k_max,
                                  std::uint64_t seed, std::size_t samples = 100);

}  // namespace artin::brace
