#pragma once

// Spherical Artin-Tits monoids and groups with left-weighted (greedy)
// normal forms over the simple elements, i.e. the divisors of Delta.
//
// Simples are identified with elements of the finite Coxeter group W via
// the canonical lift of reduced words. Left divisibility is the primary
// order; right-sided operations go through the reversal anti-automorphism.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/permutation.hpp"

namespace artin::garside {

  //! A divisor of Delta, given by its id in the Coxeter group table.
  struct Simple {
    std::uint32_t id = 0;

    friend bool operator==(Simple, Simple) = default;
    friend auto operator<=>(Simple, Simple) = default;
  };

  //! Element of the positive monoid in left-weighted normal form.
  //! No factor is the identity; Delta factors, if any, come first.
  struct MonoidElement {
    std::vector<Simple> factors;

    bool is_identity() const noexcept { return factors.empty(); }
    std::size_t sup() const noexcept { return factors.size(); }

    friend bool operator==(MonoidElement const&, MonoidElement const&) = default;
    friend auto operator<=>(MonoidElement const&, MonoidElement const&) = default;
  };

  //! Delta^dpow * pos, with pos not left-divisible by Delta.
  struct GroupElement {
    std::int64_t dpow = 0;
    MonoidElement pos;

    bool is_identity() const noexcept { return dpow == 0 && pos.is_identity(); }

    friend bool operator==(GroupElement const&, GroupElement const&) = default;
    friend auto operator<=>(GroupElement const&, GroupElement const&) = default;
  };

  struct MonoidElementHash {
    std::size_t operator()(MonoidElement const& x) const noexcept;
  };

  //! An Artin-Tits group of spherical type together with the enumerated
  //! Coxeter group backing its simples. Immutable; all operations are const.
  class ArtinGroup {
   public:
    explicit ArtinGroup(coxeter::CoxeterMatrix m, std::size_t bound = coxeter::kDefaultBound);
    explicit ArtinGroup(coxeter::TypeName const& type, std::size_t bound = coxeter::kDefaultBound);

    coxeter::CoxeterMatrix const& matrix() const noexcept { return _matrix; }
    coxeter::GroupTable const& table() const noexcept { return *_table; }
    std::size_t rank() const noexcept { return _matrix.rank(); }
    std::vector<coxeter::DiagramSymmetry> const& symmetries() const noexcept { return _symmetries; }

    // -- simples ----------------------------------------------------------

    Simple identity_simple() const noexcept { return {0}; }
    Simple delta_simple() const noexcept { return {_table->longest()}; }
    Simple atom_simple(int i) const { return {_table->generator(i)}; }
    Simple simple_from_word(std::vector<int> const& word) const;
    std::size_t length(Simple s) const { return _table->length(s.id); }

    //! Left gcd of two simples, by stripping common left descents.
    Simple meet_simples(Simple u, Simple v) const;
    //! Right gcd of two simples, by stripping common right descents.
    Simple right_meet_simples(Simple u, Simple v) const;
    //! Least common left-multiple of two simples.
    Simple join_simples(Simple u, Simple v) const;
    //! True iff rightDescents(s) contains leftDescents(t).
    bool left_weighted(Simple s, Simple t) const;
    //! s^-1 Delta.
    Simple right_complement(Simple s) const { return {_complement[s.id]}; }
    //! Delta^-1 s Delta.
    Simple tau(Simple s) const { return {_tau[s.id]}; }
    //! Image under word reversal.
    Simple rev(Simple s) const { return {_table->inverse(s.id)}; }
    //! True iff u left-divides v among simples.
    bool simple_divides(Simple u, Simple v) const;

    // -- monoid -----------------------------------------------------------

    MonoidElement monoid_identity() const { return {}; }
    MonoidElement atom(int i) const { return {{atom_simple(i)}}; }
    MonoidElement delta_power(std::size_t k) const;
    MonoidElement monoid_from_word(std::vector<int> const& word) const;

    //! Left-weighted normal form of the product of the given simples.
    MonoidElement normalize(std::vector<Simple> factors) const;
    MonoidElement multiply(MonoidElement const& a, MonoidElement const& b) const;
    //! Left gcd.
    MonoidElement gcd(MonoidElement const& a, MonoidElement const& b) const;
    //! Right gcd, via reversal.
    MonoidElement right_gcd(MonoidElement const& a, MonoidElement const& b) const;
    //! Least common right multiple (join for left divisibility).
    MonoidElement join(MonoidElement const& a, MonoidElement const& b) const;
    bool left_divides(MonoidElement const& a, MonoidElement const& b) const;
    MonoidElement tau(MonoidElement const& a, std::int64_t power = 1) const;
    MonoidElement rev(MonoidElement const& a) const;
    //! x^-1 Delta^k for an element with at most k factors.
    MonoidElement complement_power(MonoidElement const& x, std::size_t k) const;
    //! Delta^k y^-1 for an element right-dividing Delta^k.
    MonoidElement left_complement_power(MonoidElement const& y, std::size_t k) const;
    std::size_t height(MonoidElement const& a) const;
    std::vector<int> word(MonoidElement const& a) const;

    // -- group ------------------------------------------------------------

    GroupElement identity() const { return {}; }
    GroupElement from_monoid(MonoidElement const& a) const;
    GroupElement generator(int i, bool inverted = false) const;
    GroupElement delta(std::int64_t power = 1) const { return {power, {}}; }

    GroupElement multiply(GroupElement const& g, GroupElement const& h) const;
    GroupElement inverse(GroupElement const& g) const;
    GroupElement power(GroupElement const& g, std::int64_t n) const;
    //! g <= h iff g^-1 h is positive.
    bool leq(GroupElement const& g, GroupElement const& h) const;
    GroupElement meet(GroupElement const& g, GroupElement const& h) const;
    GroupElement join(GroupElement const& g, GroupElement const& h) const;
    bool is_positive(GroupElement const& g) const { return g.dpow >= 0; }
    //! Height of g^-1 h; throws DomainError unless g <= h.
    std::size_t relative_height(GroupElement const& g, GroupElement const& h) const;
    //! The positive element Delta^dpow * pos as a monoid element (requires dpow >= 0).
    MonoidElement to_monoid(GroupElement const& g) const;

    //! r_k(x, y): (xy)^l for k = 2l, (xy)^l x for k = 2l + 1.
    GroupElement braid_term(GroupElement const& x, GroupElement const& y, std::size_t k) const;

    // -- diagram symmetries -------------------------------------------------

    //! Relabels generators; throws DomainError if p is not a diagram symmetry.
    Simple apply_symmetry(coxeter::DiagramSymmetry const& p, Simple s) const;
    //! Factorwise relabeling followed by renormalization.
    MonoidElement apply_symmetry(coxeter::DiagramSymmetry const& p, MonoidElement const& a) const;
    GroupElement apply_symmetry(coxeter::DiagramSymmetry const& p, GroupElement const& g) const;

    // -- text -------------------------------------------------------------

    //! "s1.s2.s1", with a leading "D^p" token for Delta powers; "e" for identity.
    std::string to_word(GroupElement const& g) const;
    //! "[s1 s2][s1]", prefixed by "D^p " when the Delta power is non-zero.
    std::string to_normal_form(GroupElement const& g) const;
    std::string to_normal_form(MonoidElement const& a) const;
    //! Parses words ("s1.s2^-1.D^2", "e") and normal forms ("D^-1 [s1 s2][s2]").
    GroupElement parse(std::string_view text) const;

   private:
    GroupElement strip_delta(std::int64_t dpow, MonoidElement pos) const;
    Simple left_quotient(Simple u, Simple t) const;
    std::vector<std::uint32_t> const& symmetry_table(coxeter::DiagramSymmetry const& p) const;

    coxeter::CoxeterMatrix _matrix;
    std::shared_ptr<coxeter::GroupTable const> _table;
    std::vector<std::uint32_t> _complement;
    std::vector<std::uint32_t> _tau;
    std::vector<coxeter::DiagramSymmetry> _symmetries;
    std::vector<std::vector<std::uint32_t>> _symmetry_tables;
  };

}  // namespace artin::garside
