#include <algorithm>
#include <limits>

#include "artin/coxeter.hpp"
#include "artin/errors.hpp"

namespace artin::coxeter {

  namespace {
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    constexpr std::size_t kMaxLength = 256;
  }

  GroupTable enumerate_group(std::vector<CoxElement> const& gens, std::size_t bound) {
    if (gens.empty() || gens.size() > 32) {
      throw DomainError("enumerate_group: rank must be between 1 and 32");
    }
    GroupTable t;
    std::size_t const r = gens.size();
    t._rank = r;
    t._ctx = gens[0].matrix.context();
    t._gens = gens;

    auto identity = ExactMatrix::identity(t._ctx, gens[0].matrix.size());
    t._index.emplace(identity.key(), 0);
    t._length.push_back(0);
    t._parent.push_back(0);
    t._parent_gen.push_back(0);
    t._rmul.assign(r, kUnset);

    std::vector<std::pair<std::uint32_t, ExactMatrix>> layer;
    layer.emplace_back(0, std::move(identity));
    while (!layer.empty()) {
      std::vector<std::pair<std::uint32_t, ExactMatrix>> next;
      for (auto const& [id, mat] : layer) {
        for (std::size_t i = 0; i < r; ++i) {
          if (t._rmul[id * r + i] != kUnset) {
            continue;
          }
          auto prod = mat.mul_generator(gens[i].matrix, i);
          auto key = prod.key();
          std::uint32_t target;
          if (auto it = t._index.find(key); it != t._index.end()) {
            target = it->second;
          } else {
            if (t._length.size() >= bound) {
              throw NotFiniteError("group is not finite within bound "
                                   + std::to_string(bound));
            }
            if (t._length[id] + 1 >= kMaxLength) {
              throw DomainError("enumerate_group: element length exceeds "
                                + std::to_string(kMaxLength));
            }
            target = static_cast<std::uint32_t>(t._length.size());
            t._index.emplace(std::move(key), target);
            t._length.push_back(t._length[id] + 1);
            t._parent.push_back(id);
            t._parent_gen.push_back(static_cast<std::uint8_t>(i));
            t._rmul.resize(t._rmul.size() + r, kUnset);
            next.emplace_back(target, std::move(prod));
          }
          // Generators are involutions.
          t._rmul[id * r + i] = target;
          t._rmul[target * r + i] = id;
        }
      }
      layer = std::move(next);
    }

    std::size_t const n = t._length.size();
    t._inverse.resize(n);
    std::vector<int> word;
    for (std::uint32_t w = 0; w < n; ++w) {
      word = t.reduced_word(w);
      std::uint32_t x = 0;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        x = t._rmul[x * r + *it];
      }
      t._inverse[w] = x;
    }
    t._lmul.resize(n * r);
    t._ldesc.assign(n, 0);
    t._rdesc.assign(n, 0);
    std::size_t max_len = 0;
    std::size_t max_count = 0;
    for (std::uint32_t w = 0; w < n; ++w) {
      for (std::size_t i = 0; i < r; ++i) {
        t._lmul[w * r + i] = t._inverse[t._rmul[t._inverse[w] * r + i]];
        if (t._length[t._rmul[w * r + i]] < t._length[w]) {
          t._rdesc[w] |= 1u << i;
        }
        if (t._length[t._lmul[w * r + i]] < t._length[w]) {
          t._ldesc[w] |= 1u << i;
        }
      }
      if (t._length[w] > max_len) {
        max_len = t._length[w];
        max_count = 0;
        t._longest = w;
      }
      if (t._length[w] == max_len) {
        ++max_count;
      }
    }
    if (max_count != 1) {
      throw Error("enumerate_group: no unique element of maximal length");
    }
    return t;
  }

  GroupTable enumerate_group(CoxeterMatrix const& m, std::size_t bound) {
    auto ctx = exact::FieldContext::make(m.lcm());
    return enumerate_group(geometric_generators(m, ctx), bound);
  }

  std::vector<int> GroupTable::reduced_word(std::uint32_t w) const {
    std::vector<int> word(_length[w]);
    for (std::size_t k = word.size(); k-- > 0;) {
      word[k] = _parent_gen[w];
      w = _parent[w];
    }
    return word;
  }

  std::uint32_t GroupTable::multiply(std::uint32_t a, std::uint32_t b) const {
    int stack[kMaxLength];
    std::size_t top = 0;
    while (b != 0) {
      stack[top++] = _parent_gen[b];
      b = _parent[b];
    }
    while (top > 0) {
      a = _rmul[a * _rank + stack[--top]];
    }
    return a;
  }

  std::optional<std::uint32_t> GroupTable::find(ExactMatrix const& m) const {
    if (auto it = _index.find(m.key()); it != _index.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  CoxElement GroupTable::element(std::uint32_t w) const {
    auto word = reduced_word(w);
    auto mat = ExactMatrix::identity(_ctx, _gens[0].matrix.size());
    for (int i : word) {
      mat = mat.mul_generator(_gens[i].matrix, static_cast<std::size_t>(i));
    }
    return {std::move(mat), word.size(), std::move(word)};
  }

  DescentData group_queries(GroupTable const& table, std::uint32_t w) {
    if (w >= table.size()) {
      throw DomainError("group_queries: element not in table");
    }
    return {table.left_descents(w), table.right_descents(w), table.length(w)};
  }

  DescentData group_queries(GroupTable const& table, CoxElement const& w) {
    auto id = table.find(w.matrix);
    if (!id) {
      throw DomainError("group_queries: element not in table");
    }
    return group_queries(table, *id);
  }

}  // namespace artin::coxeter
