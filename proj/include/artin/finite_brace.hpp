#pragma once

// Skew braces on small finite groups through the holomorph: regular
// subgroups of Hol(G) = L_G x| Aut(G) correspond to brace structures on G.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/permutation.hpp"

namespace artin::finite {

  using Table = std::vector<std::vector<int>>;

  //! A finite group given by its Cayley table on {0, ..., n-1}.
  class FiniteGroup {
   public:
    //! Validates closure, identity, inverses and associativity; throws DomainError.
    explicit FiniteGroup(Table table);

    std::size_t size() const noexcept { return _table.size(); }
    int identity() const noexcept { return _identity; }
    int op(int a, int b) const { return _table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return _inverse[static_cast<std::size_t>(a)]; }
    Table const& table() const noexcept { return _table; }
    bool is_abelian() const;
    //! Element orders, sorted.
    std::vector<std::size_t> order_profile() const;
    //! Left translation x -> a x.
    Permutation left_translation(int a) const;

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup klein();
    static FiniteGroup symmetric3();

   private:
    Table _table;
    int _identity = 0;
    std::vector<int> _inverse;
  };

  //! n x n whitespace-separated 0-based entries, '#' comments; throws ParseError.
  FiniteGroup parse_group_table(std::string_view text);

  //! Group automorphisms as permutations of the carrier, sorted.
  std::vector<Permutation> automorphisms(FiniteGroup const& G);

  //! { x -> a + f(x) : a in G, f in Aut(G) }, sorted.
  std::vector<Permutation> holomorph(FiniteGroup const& G);

  //! Subgroups of the given permutation group acting simply transitively,
  //! each as a sorted list of permutations.
  std::vector<std::vector<Permutation>> regular_subgroups(FiniteGroup const& G,
                                                          std::vector<Permutation> const& hol);

  //! Both operations as Cayley tables on the same carrier.
  struct FiniteBrace {
    Table add;
    Table circ;

    std::size_t size() const noexcept { return add.size(); }
    friend bool operator==(FiniteBrace const&, FiniteBrace const&) = default;
  };

  //! pi(e) o h = pi(h) for pi in the regular subgroup H.
  FiniteBrace brace_from_subgroup(FiniteGroup const& G, std::vector<Permutation> const& H);
  //! { h -> g o h : g }, sorted.
  std::vector<Permutation> subgroup_from_brace(FiniteBrace const& B);

  //! Both tables are groups with a common identity and the skew-brace identity holds.
  bool is_skew_brace(FiniteBrace const& B);
  //! ker(lambda) = { a : a o h = a + h for all h }, sorted.
  std::vector<int> kernel_lambda(FiniteBrace const& B);
  //! ker(lambda) intersected with the centre of (B, +): the ideal used for retractions.
  std::vector<int> socle(FiniteBrace const& B);
  //! B / Soc(B) on cosets a + Soc(B), numbered by smallest representative.
  FiniteBrace retraction(FiniteBrace const& B);
  //! Sizes of B, B^(1), B^(2), ... until the size stabilises.
  std::vector<std::size_t> retraction_series(FiniteBrace const& B);
  //! Least k with |B^(k)| = 1, if the series reaches the trivial brace.
  std::optional<std::size_t> right_nilpotency_degree(FiniteBrace const& B);

  struct BraceSummary {
    FiniteBrace brace;
    bool trivial = false;
    bool roundtrip_subgroup = false;  // subgroup -> brace -> subgroup
    bool roundtrip_brace = false;     // brace -> subgroup -> brace
    bool valid = false;               // is_skew_brace
    std::size_t kernel_lambda_size = 0;
    std::size_t socle_size = 0;
    std::vector<std::size_t> retractions;
    std::optional<std::size_t> nilpotency_degree;
    std::vector<std::size_t> circ_orders;
  };

  struct HolomorphReport {
    std::size_t carrier = 0;
    std::size_t automorphisms = 0;
    std::size_t holomorph = 0;
    std::vector<BraceSummary> braces;

    bool pass() const;
  };

  inline constexpr std::size_t kMaxCarrier = 24;

  //! Throws DomainError when the carrier exceeds kMaxCarrier.
  HolomorphReport finite_holomorph_roundtrip(FiniteGroup const& G);

}  // namespace artin::finite
