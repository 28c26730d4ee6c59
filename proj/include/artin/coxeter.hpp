#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artin/exact_arith.hpp"
#include "artin/permutation.hpp"

namespace artin::coxeter {

  //! Symmetric integer matrix with unit diagonal and off-diagonal entries >= 2.
  //! Vertices are 0-based internally and 1-based in every textual form.
  class CoxeterMatrix {
   public:
    CoxeterMatrix() = default;
    //! Validates the entries; throws DomainError on a violation.
    CoxeterMatrix(std::size_t n, std::vector<int> entries);

    std::size_t rank() const noexcept { return _n; }
    int operator()(std::size_t i, std::size_t j) const { return _m[i * _n + j]; }
    std::vector<int> const& entries() const noexcept { return _m; }

    //! Least common multiple of all entries (1 for rank <= 1).
    unsigned lcm() const;
    //! Largest off-diagonal entry (1 for rank <= 1).
    int max_label() const;
    //! Every label is 2 or odd.
    bool oddly_laced() const;
    //! Connected components of the Coxeter graph (edges where m_ij >= 3).
    std::vector<std::vector<int>> components() const;
    CoxeterMatrix submatrix(std::vector<int> const& vertices) const;

    std::string to_string() const;

    friend bool operator==(CoxeterMatrix const&, CoxeterMatrix const&) = default;

   private:
    std::size_t _n = 0;
    std::vector<int> _m;
  };

  //! Name of an irreducible spherical type, e.g. {'D', 4} or {'I', 5}.
  //! For family 'I' the number is the edge label, not the rank.
  struct TypeName {
    char family = 'A';
    int index = 1;

    std::size_t rank() const noexcept { return family == 'I' ? 2u : static_cast<std::size_t>(index); }
    std::string str() const { return std::string(1, family) + "_" + std::to_string(index); }

    friend bool operator==(TypeName const&, TypeName const&) = default;
    friend auto operator<=>(TypeName const&, TypeName const&) = default;
  };

  //! Parses "A_3", "A3", "A 3", "I_5", ...
  TypeName parse_type_name(std::string_view text);

  //! Catalog matrix of a named type, numbered as in the standard diagrams:
  //! A_n a path; B_n a path with m_{n-1,n} = 4; D_n with node n adjacent to
  //! 1, 2, 3 and a path 3 - 4 - ... - (n-1); E_n a path 1..n-1 with n
  //! attached to 3; F_4 a path with m_23 = 4; H_n a path with m_12 = 5;
  //! I_m two nodes with label m.
  CoxeterMatrix named_matrix(TypeName const& type);

  //! Order of the finite Coxeter group of an irreducible type.
  std::uint64_t classical_order(TypeName const& type);

  //! Parses the text format: "rank n" followed by n rows of n integers, or
  //! "type X k". '#' starts a comment. Errors carry line and column.
  CoxeterMatrix parse_coxeter(std::string_view text);

  struct Classification {
    bool spherical = false;
    //! Component types in order of their smallest vertex (empty if not spherical).
    std::vector<TypeName> components;
    //! Vertex sets of the components, same order.
    std::vector<std::vector<int>> vertex_sets;
    //! Per component: catalog vertex index -> input vertex index.
    std::vector<std::vector<int>> embeddings;

    std::string str() const;
  };

  Classification classify_spherical(CoxeterMatrix const& m);

  //! A label-preserving permutation of the vertices.
  using DiagramSymmetry = Permutation;

  bool is_diagram_symmetry(CoxeterMatrix const& m, Permutation const& p);

  //! All maps phi with b(phi(i), phi(j)) = a(i, j), found by backtracking.
  std::vector<Permutation> isomorphisms(CoxeterMatrix const& a, CoxeterMatrix const& b,
                                        bool first_only = false);

  //! The group of diagram symmetries, sorted, identity first.
  std::vector<DiagramSymmetry> diagram_symmetries(CoxeterMatrix const& m);

  //! Square matrix over Q(theta), entries stored flat as coefficient blocks.
  class ExactMatrix {
   public:
    ExactMatrix(exact::ContextPtr ctx, std::size_t n);
    static ExactMatrix identity(exact::ContextPtr ctx, std::size_t n);

    std::size_t size() const noexcept { return _n; }
    exact::ContextPtr const& context() const noexcept { return _ctx; }

    exact::ExactReal at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, exact::ExactReal const& x);

    ExactMatrix operator*(ExactMatrix const& other) const;
    ExactMatrix transpose() const;

    //! this * gen, for a generator that differs from the identity only in row i.
    ExactMatrix mul_generator(ExactMatrix const& gen, std::size_t i) const;

    //! Byte string that is equal for two matrices iff they are equal.
    std::string key() const;

    friend bool operator==(ExactMatrix const& a, ExactMatrix const& b) {
      return a._n == b._n && a._data == b._data;
    }

   private:
    friend class GroupTable;
    exact::Rational* block(std::size_t i, std::size_t j) { return &_data[(i * _n + j) * _deg]; }
    exact::Rational const* block(std::size_t i, std::size_t j) const {
      return &_data[(i * _n + j) * _deg];
    }

    exact::ContextPtr _ctx;
    std::size_t _n;
    std::size_t _deg;
    std::vector<exact::Rational> _data;
  };

  //! Element of a finite Coxeter group in its geometric representation.
  struct CoxElement {
    ExactMatrix matrix;
    std::size_t length;
    std::vector<int> word;  // reduced word, 0-based generator indices
  };

  //! Matrix of the bilinear form B(e_i, e_j) = -cos(pi/m_ij).
  ExactMatrix bilinear_form(CoxeterMatrix const& m, exact::ContextPtr const& ctx);

  bool preserves_form(ExactMatrix const& g, ExactMatrix const& form);

  //! Generators s_i(e_i) = -e_i, s_i(e_j) = e_j + 2cos(pi/m_ij) e_i.
  std::vector<CoxElement> geometric_generators(CoxeterMatrix const& m,
                                               exact::ContextPtr const& ctx);

  constexpr std::size_t kDefaultBound = 1'000'000;

  //! Enumerated finite Coxeter group. Elements are dense ids; id 0 is the
  //! identity. Immutable after construction.
  class GroupTable {
   public:
    std::size_t size() const noexcept { return _length.size(); }
    std::size_t rank() const noexcept { return _rank; }

    std::uint32_t identity() const noexcept { return 0; }
    std::uint32_t longest() const noexcept { return _longest; }

    std::uint32_t rmul(std::uint32_t w, int i) const { return _rmul[w * _rank + i]; }
    std::uint32_t lmul(std::uint32_t w, int i) const { return _lmul[w * _rank + i]; }
    std::uint32_t inverse(std::uint32_t w) const { return _inverse[w]; }
    std::uint32_t generator(int i) const { return _rmul[i]; }
    std::size_t length(std::uint32_t w) const { return _length[w]; }
    std::uint32_t left_descents(std::uint32_t w) const { return _ldesc[w]; }
    std::uint32_t right_descents(std::uint32_t w) const { return _rdesc[w]; }

    std::vector<int> reduced_word(std::uint32_t w) const;
    std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
    std::optional<std::uint32_t> find(ExactMatrix const& m) const;
    CoxElement element(std::uint32_t w) const;

    exact::ContextPtr const& context() const noexcept { return _ctx; }

   private:
    friend GroupTable enumerate_group(std::vector<CoxElement> const& gens, std::size_t bound);

    std::size_t _rank = 0;
    exact::ContextPtr _ctx;
    std::vector<CoxElement> _gens;
    std::uint32_t _longest = 0;
    std::vector<std::uint32_t> _rmul, _lmul, _inverse, _parent;
    std::vector<std::uint8_t> _parent_gen;
    std::vector<std::uint32_t> _length, _ldesc, _rdesc;
    std::unordered_map<std::string, std::uint32_t> _index;
  };

  //! Breadth-first closure under right multiplication by the generators.
  //! Throws NotFiniteError when more than `bound` elements appear.
  GroupTable enumerate_group(std::vector<CoxElement> const& gens, std::size_t bound = kDefaultBound);

  GroupTable enumerate_group(CoxeterMatrix const& m, std::size_t bound = kDefaultBound);

  struct DescentData {
    std::uint32_t left;
    std::uint32_t right;
    std::size_t length;
  };

  DescentData group_queries(GroupTable const& table, std::uint32_t w);
  //! Same, for an element given by its matrix; throws DomainError if absent.
  DescentData group_queries(GroupTable const& table, CoxElement const& w);

}  // namespace artin::coxeter
