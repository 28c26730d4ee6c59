#pragma once

// Finite truncations of the left-divisibility order of a spherical
// Artin-Tits monoid: height balls, intervals, rigidity checks and
// automorphisms of the cover graph.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/garside.hpp"

namespace artin::order {

  using garside::ArtinGroup;
  using garside::GroupElement;
  using garside::MonoidElement;

  inline constexpr std::size_t kDefaultNodeLimit = 5'000'000;

  struct CoverEdge {
    std::size_t from = 0;
    int atom = 0;
    std::size_t to = 0;
  };

  //! Monoid elements of height at most h with their cover edges x -> x.s_i.
  //! Nodes are listed layer by layer in discovery order.
  struct PosetBall {
    std::size_t height_bound = 0;
    std::vector<MonoidElement> nodes;
    std::vector<std::size_t> heights;
    std::vector<CoverEdge> edges;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> in;
    std::unordered_map<MonoidElement, std::size_t, garside::MonoidElementHash> index;

    std::size_t size() const noexcept { return nodes.size(); }
    //! Node id of x, or size() when x lies outside the ball.
    std::size_t find(MonoidElement const& x) const;
    //! Number of nodes per height, starting at height 0.
    std::vector<std::size_t> layer_sizes() const;
  };

  //! Throws DomainError when the ball exceeds node_limit nodes.
  PosetBall build_ball(ArtinGroup const& G, std::size_t h,
                       std::size_t node_limit = kDefaultNodeLimit);

  //! All x with a <= x <= b, sorted by height then normal form.
  //! Throws DomainError unless a left-divides b.
  std::vector<MonoidElement> interval(ArtinGroup const& G, MonoidElement const& a,
                                      MonoidElement const& b);

  struct RigidityFailure {
    int condition = 0;  // 1 or 2
    int x = 0;
    int y = -1;         // -1 when the condition involves a single atom
    std::size_t count = 0;
  };

  struct RigidityReport {
    bool dual = false;
    std::size_t pairs_checked = 0;
    std::size_t atoms_checked = 0;
    std::vector<RigidityFailure> failures;

    bool pass() const noexcept { return failures.empty(); }
  };

  //! Rigidity of (G, <=); with dual set, of the reversed order, whose atoms
  //! are the inverted generators and whose join is the meet of G.
  RigidityReport check_rigidity(ArtinGroup const& G, bool dual);

  //! Cover-preserving bijections of the ball, one for each permutation of the
  //! atoms that extends to such a bijection, ordered by that permutation.
  //! Nodes in the top layers of a finite ball can have identical down-sets, so
  //! a given atom action may extend in several ways; only one representative
  //! is returned. e is the unique minimum and is always fixed; fix_identity
  //! only filters the result.
  std::vector<std::vector<std::size_t>> poset_automorphisms(PosetBall const& ball,
                                                            bool fix_identity = true);

  //! Atom permutation (0-based generator indices) induced by a ball automorphism.
  Permutation atom_action(PosetBall const& ball, ArtinGroup const& G,
                          std::vector<std::size_t> const& automorphism);

  //! Deterministic DOT digraph: nodes labeled by normal form, edges by atom index (1-based).
  std::string export_dot(ArtinGroup const& G, PosetBall const& ball);

}  // namespace artin::order
