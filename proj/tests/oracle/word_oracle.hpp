#pragma once

// Brute-force reference for positive Artin-Tits monoids that only knows the
// presentation: words are compared by exhaustively applying braid relations,
// and least common multiples come from right subword reversing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/coxeter.hpp"

namespace oracle {

  //! Positive word, one char per letter (generator index).
  using Word = std::string;

  class WordOracle {
   public:
    explicit WordOracle(artin::coxeter::CoxeterMatrix m);

    std::size_t rank() const noexcept { return _m.rank(); }

    //! Lexicographically least word equivalent to w under the braid relations.
    Word const& canonical(Word const& w);

    //! Least common right multiple u.v' = v.u' via reversing u^-1 v.
    Word lcm(Word const& u, Word const& v) const;
    //! Equality in the monoid: u^-1 v reverses to the empty word.
    bool equal_by_reversing(Word const& u, Word const& v) const;

    std::size_t cached_words() const noexcept { return _canon.size(); }

   private:
    //! Reverses u^-1 v to P N^-1 and returns (P, N).
    std::pair<Word, Word> reverse(Word const& u, Word const& v) const;

    artin::coxeter::CoxeterMatrix _m;
    std::unordered_map<Word, Word> _canon;
  };

  //! Hasse diagram of the divisibility order on the classes of height <= h.
  struct HasseBall {
    std::vector<Word> reps;               // canonical words, by height
    std::vector<std::size_t> heights;
    std::vector<std::vector<std::size_t>> up;    // up[v][i] = class of reps[v] . i
    std::vector<std::vector<std::size_t>> down;  // lower covers
    std::unordered_map<Word, std::size_t> index;

    std::size_t size() const noexcept { return reps.size(); }
    //! Class reached from v by appending the letters of w; size() if outside.
    std::size_t walk(std::size_t v, Word const& w) const;
  };

  HasseBall build_hasse_ball(WordOracle& oracle, std::size_t h);

  //! Down-sets as bitsets over the first `limit` nodes (nodes sorted by height).
  std::vector<std::vector<std::uint64_t>> down_sets(HasseBall const& ball, std::size_t limit);

  //! Greatest common left divisor of nodes a, b (both < limit) from their down-sets;
  //! returns size() if the common divisors have no unique maximum.
  std::size_t gcd_node(HasseBall const& ball, std::vector<std::vector<std::uint64_t>> const& downs,
                       std::size_t a, std::size_t b);

  //! Word of a generator-index vector, and back.
  Word to_word(std::vector<int> const& letters);
  std::vector<int> to_letters(Word const& w);

}  // namespace oracle
