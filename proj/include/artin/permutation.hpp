#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

  //! A permutation of {0, ..., n-1}, stored as its image list.
  //!
  //! Composition follows the functional convention: (a * b)(x) = a(b(x)).
  //! Textual forms use 1-based cycle notation, e.g. "(1 4)(2 3)"; the
  //! identity renders as "()".
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, int a, int b);

    //! Parses 1-based cycle notation; "()", "id" and "" give the identity.
    static Permutation parse_cycles(std::string_view text, std::size_t n);

    std::size_t size() const noexcept { return _images.size(); }
    int operator()(int x) const { return _images[static_cast<std::size_t>(x)]; }
    std::vector<int> const& images() const noexcept { return _images; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    std::size_t order() const;
    std::string cycles() const;

    friend Permutation operator*(Permutation const& a, Permutation const& b);
    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  //! All products of the given permutations (the generated subgroup), sorted.
  std::vector<Permutation> generated_subgroup(std::vector<Permutation> const& gens,
                                              std::size_t n);

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

}  // namespace artin
