#include "artin/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "artin/errors.hpp"

namespace artin {

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int x : _images) {
      if (x < 0 || static_cast<std::size_t>(x) >= _images.size() || seen[x]) {
        throw DomainError("image list is not a permutation");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  Permutation Permutation::transposition(std::size_t n, int a, int b) {
    auto p = identity(n);
    std::swap(p._images[a], p._images[b]);
    return p;
  }

  Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
    auto result = identity(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (text.substr(pos) == "id") {
      return result;
    }
    std::vector<bool> used(n, false);
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw ParseError("expected '(' in cycle notation", 1, pos + 1);
      }
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        skip_ws();
        if (pos >= text.size()) {
          throw ParseError("unterminated cycle", 1, pos + 1);
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        if (start == pos) {
          throw ParseError("expected a point in cycle", 1, pos + 1);
        }
        int point = std::stoi(std::string(text.substr(start, pos - start)));
        if (point < 1 || static_cast<std::size_t>(point) > n) {
          throw ParseError("point " + std::to_string(point) + " out of range 1.."
                               + std::to_string(n),
                           1, start + 1);
        }
        if (used[point - 1]) {
          throw ParseError("point " + std::to_string(point) + " repeated", 1, start + 1);
        }
        used[point - 1] = true;
        cycle.push_back(point - 1);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        result._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_ws();
    }
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = static_cast<int>(i);
    }
    Permutation p;
    p._images = std::move(inv);
    return p;
  }

  std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == static_cast<int>(i)) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Permutation operator*(Permutation const& a, Permutation const& b) {
    if (a.size() != b.size()) {
      throw DomainError("composing permutations of different degree");
    }
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a._images[b._images[i]];
    }
    Permutation p;
    p._images = std::move(c);
    return p;
  }

  std::vector<Permutation> generated_subgroup(std::vector<Permutation> const& gens,
                                              std::size_t n) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto const& p : frontier) {
        for (auto const& g : gens) {
          auto q = p * g;
          if (seen.insert(q).second) {
            next.push_back(std::move(q));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::size_t h = p.size();
    for (int x : p.images()) {
      h = h * 1000003u ^ static_cast<std::size_t>(x);
    }
    return h;
  }

}  // namespace artin
