#include "artin/finite_brace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>

#include "artin/errors.hpp"

namespace artin::finite {

  FiniteGroup::FiniteGroup(Table table) : _table(std::move(table)) {
    std::size_t const n = _table.size();
    if (n == 0) {
      throw DomainError("group table is empty");
    }
    for (auto const& row : _table) {
      if (row.size() != n) {
        throw DomainError("group table is not square");
      }
      for (int x : row) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw DomainError("group table entry out of range");
        }
      }
    }
    auto is_identity = [&](std::size_t e) {
      for (std::size_t x = 0; x < n; ++x) {
        if (_table[e][x] != static_cast<int>(x) || _table[x][e] != static_cast<int>(x)) {
          return false;
        }
      }
      return true;
    };
    std::size_t e = 0;
    while (e < n && !is_identity(e)) {
      ++e;
    }
    if (e == n) {
      throw DomainError("group table has no identity");
    }
    _identity = static_cast<int>(e);
    _inverse.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (_table[a][b] == _identity && _table[b][a] == _identity) {
          _inverse[a] = static_cast<int>(b);
          break;
        }
      }
      if (_inverse[a] < 0) {
        throw DomainError("element " + std::to_string(a) + " has no inverse");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (op(op(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c))
              != op(static_cast<int>(a), op(static_cast<int>(b), static_cast<int>(c)))) {
            throw DomainError("group table is not associative");
          }
        }
      }
    }
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (_table[a][b] != _table[b][a]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> FiniteGroup::order_profile() const {
    std::vector<std::size_t> orders;
    for (std::size_t a = 0; a < size(); ++a) {
      std::size_t k = 1;
      for (int x = static_cast<int>(a); x != _identity; x = op(x, static_cast<int>(a))) {
        ++k;
      }
      orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
  }

  Permutation FiniteGroup::left_translation(int a) const {
    return Permutation(_table[static_cast<std::size_t>(a)]);
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    Table t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<int>((a + b) % n);
      }
    }
    return FiniteGroup(std::move(t));
  }

  FiniteGroup FiniteGroup::klein() {
    Table t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
      }
    }
    return FiniteGroup(std::move(t));
  }

  FiniteGroup FiniteGroup::symmetric3() {
    // Elements are the permutations of {0,1,2} in lexicographic order; a*b = a(b(x)).
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto id = [&](std::vector<int> const& q) {
      return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    Table t(6, std::vector<int>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        std::vector<int> c(3);
        for (std::size_t x = 0; x < 3; ++x) {
          c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
        }
        t[a][b] = id(c);
      }
    }
    return FiniteGroup(std::move(t));
  }

  FiniteGroup parse_group_table(std::string_view text) {
    std::vector<int> values;
    std::size_t line = 1, col = 1, i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') {
          ++i;
        }
        continue;
      }
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        ++col;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
        ++i;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
      if (ec != std::errc() || ptr != text.data() + i || v < 0) {
        throw ParseError("expected a non-negative integer", line, col);
      }
      values.push_back(v);
      col += i - start;
    }
    auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(values.size()))));
    if (values.empty() || n * n != values.size()) {
      throw ParseError("expected n*n entries, got " + std::to_string(values.size()), line, col);
    }
    Table t(n, std::vector<int>(n));
    for (std::size_t k = 0; k < values.size(); ++k) {
      t[k / n][k % n] = values[k];
    }
    return FiniteGroup(std::move(t));
  }

  std::vector<Permutation> automorphisms(FiniteGroup const& G) {
    std::size_t const n = G.size();
    int const e = G.identity();
    // Greedy generating set.
    std::vector<int> gens;
    std::vector<bool> in_span(n, false);
    in_span[static_cast<std::size_t>(e)] = true;
    auto close = [&] {
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t a = 0; a < n; ++a) {
          if (!in_span[a]) {
            continue;
          }
          for (int g : gens) {
            auto b = static_cast<std::size_t>(G.op(static_cast<int>(a), g));
            if (!in_span[b]) {
              in_span[b] = grew = true;
            }
          }
        }
      }
    };
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_span[x]) {
        gens.push_back(static_cast<int>(x));
        close();
      }
    }
    auto order = [&](int a) {
      std::size_t k = 1;
      for (int x = a; x != e; x = G.op(x, a)) {
        ++k;
      }
      return k;
    };
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (std::size_t x = 0; x < n; ++x) {
        if (order(static_cast<int>(x)) == order(gens[k])) {
          candidates[k].push_back(static_cast<int>(x));
        }
      }
    }
    std::vector<Permutation> result;
    std::vector<std::size_t> choice(gens.size(), 0);
    for (;;) {
      std::vector<int> map(n, -1);
      map[static_cast<std::size_t>(e)] = e;
      std::vector<int> queue{e};
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        int y = queue[q];
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
          int z = G.op(y, gens[k]);
          int image = G.op(map[static_cast<std::size_t>(y)], candidates[k][choice[k]]);
          int& slot = map[static_cast<std::size_t>(z)];
          if (slot < 0) {
            slot = image;
            queue.push_back(z);
          } else if (slot != image) {
            ok = false;
          }
        }
      }
      if (ok) {
        std::vector<bool> hit(n, false);
        for (int v : map) {
          ok = ok && !hit[static_cast<std::size_t>(v)];
          hit[static_cast<std::size_t>(v)] = true;
        }
      }
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = map[static_cast<std::size_t>(G.op(static_cast<int>(a), static_cast<int>(b)))]
               == G.op(map[a], map[b]);
        }
      }
      if (ok) {
        result.emplace_back(std::move(map));
      }
      std::size_t k = 0;
      while (k < gens.size() && ++choice[k] == candidates[k].size()) {
        choice[k++] = 0;
      }
      if (k == gens.size()) {
        break;
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Permutation> holomorph(FiniteGroup const& G) {
    std::vector<Permutation> hol;
    for (auto const& f : automorphisms(G)) {
      for (std::size_t a = 0; a < G.size(); ++a) {
        hol.push_back(G.left_translation(static_cast<int>(a)) * f);
      }
    }
    std::sort(hol.begin(), hol.end());
    return hol;
  }

  std::vector<std::vector<Permutation>> regular_subgroups(FiniteGroup const& G,
                                                          std::vector<Permutation> const& hol) {
    std::size_t const n = G.size();
    int const e = G.identity();
    std::vector<std::vector<Permutation const*>> by_image(n);
    for (auto const& p : hol) {
      by_image[static_cast<std::size_t>(p(e))].push_back(&p);
    }

    struct State {
      std::vector<std::optional<Permutation>> chosen;
      std::vector<Permutation> members;
    };
    // Adds p and closes under products; false if two elements would send e
    // to the same point.
    auto add = [&](State& s, Permutation const& p) {
      std::vector<Permutation> stack{p};
      while (!stack.empty()) {
        Permutation r = std::move(stack.back());
        stack.pop_back();
        auto& slot = s.chosen[static_cast<std::size_t>(r(e))];
        if (slot) {
          if (*slot != r) {
            return false;
          }
          continue;
        }
        slot = r;
        std::size_t const count = s.members.size();
        for (std::size_t k = 0; k < count; ++k) {
          stack.push_back(s.members[k] * r);
          stack.push_back(r * s.members[k]);
        }
        stack.push_back(r * r);
        s.members.push_back(r);
      }
      return true;
    };

    std::vector<std::vector<Permutation>> result;
    std::function<void(State const&)> search = [&](State const& s) {
      std::size_t x = 0;
      while (x < n && s.chosen[x]) {
        ++x;
      }
      if (x == n) {
        auto members = s.members;
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
        return;
      }
      for (auto const* p : by_image[x]) {
        State next = s;
        if (add(next, *p)) {
          search(next);
        }
      }
    };
    State start{std::vector<std::optional<Permutation>>(n), {}};
    add(start, Permutation::identity(n));
    search(start);
    std::sort(result.begin(), result.end());
    return result;
  }

  FiniteBrace brace_from_subgroup(FiniteGroup const& G, std::vector<Permutation> const& H) {
    std::size_t const n = G.size();
    FiniteBrace B{G.table(), Table(n, std::vector<int>(n, -1))};
    for (auto const& p : H) {
      B.circ[static_cast<std::size_t>(p(G.identity()))] = p.images();
    }
    for (auto const& row : B.circ) {
      if (row.front() < 0) {
        throw DomainError("subgroup is not regular");
      }
    }
    return B;
  }

  std::vector<Permutation> subgroup_from_brace(FiniteBrace const& B) {
    std::vector<Permutation> H;
    for (auto const& row : B.circ) {
      H.emplace_back(row);
    }
    std::sort(H.begin(), H.end());
    return H;
  }

  bool is_skew_brace(FiniteBrace const& B) {
    std::optional<FiniteGroup> add, circ;
    try {
      add.emplace(B.add);
      circ.emplace(B.circ);
    } catch (DomainError const&) {
      return false;
    }
    if (add->identity() != circ->identity()) {
      return false;
    }
    std::size_t const n = B.size();
    for (std::size_t a = 0; a < n; ++a) {
      int const ia = add->inverse(static_cast<int>(a));
      for (std::size_t b = 0; b < n; ++b) {
        int const ab = B.circ[a][b];
        for (std::size_t c = 0; c < n; ++c) {
          int lhs = B.circ[a][static_cast<std::size_t>(B.add[b][c])];
          int rhs = add->op(add->op(ab, ia), B.circ[a][c]);
          if (lhs != rhs) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<int> kernel_lambda(FiniteBrace const& B) {
    std::vector<int> k;
    for (std::size_t a = 0; a < B.size(); ++a) {
      if (B.circ[a] == B.add[a]) {
        k.push_back(static_cast<int>(a));
      }
    }
    return k;
  }

  std::vector<int> socle(FiniteBrace const& B) {
    std::vector<int> s;
    for (int a : kernel_lambda(B)) {
      bool central = true;
      for (std::size_t x = 0; x < B.size() && central; ++x) {
        central = B.add[static_cast<std::size_t>(a)][x] == B.add[x][static_cast<std::size_t>(a)];
      }
      if (central) {
        s.push_back(a);
      }
    }
    return s;
  }

  FiniteBrace retraction(FiniteBrace const& B) {
    std::size_t const n = B.size();
    auto soc = socle(B);
    std::vector<int> coset(n, -1);
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < n; ++a) {
      if (coset[a] >= 0) {
        continue;
      }
      for (int s : soc) {
        coset[static_cast<std::size_t>(B.add[a][static_cast<std::size_t>(s)])] = static_cast<int>(reps.size());
      }
      reps.push_back(a);
    }
    std::size_t const m = reps.size();
    FiniteBrace Q{Table(m, std::vector<int>(m)), Table(m, std::vector<int>(m))};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Q.add[i][j] = coset[static_cast<std::size_t>(B.add[reps[i]][reps[j]])];
        Q.circ[i][j] = coset[static_cast<std::size_t>(B.circ[reps[i]][reps[j]])];
      }
    }
    return Q;
  }

  std::vector<std::size_t> retraction_series(FiniteBrace const& B) {
    std::vector<std::size_t> sizes{B.size()};
    FiniteBrace current = B;
    for (;;) {
      FiniteBrace next = retraction(current);
      if (next.size() == current.size()) {
        return sizes;
      }
      sizes.push_back(next.size());
      current = std::move(next);
    }
  }

  std::optional<std::size_t> right_nilpotency_degree(FiniteBrace const& B) {
    auto sizes = retraction_series(B);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (sizes[k] == 1) {
        return k;
      }
    }
    return std::nullopt;
  }

  bool HolomorphReport::pass() const {
    std::size_t trivial = 0;
    for (auto const& b : braces) {
      if (!b.valid || !b.roundtrip_brace || !b.roundtrip_subgroup) {
        return false;
      }
      trivial += b.trivial ? 1 : 0;
    }
    return trivial == 1;
  }

  HolomorphReport finite_holomorph_roundtrip(FiniteGroup const& G) {
    if (G.size() > kMaxCarrier) {
      throw DomainError("carrier larger than " + std::to_string(kMaxCarrier));
    }
    HolomorphReport report;
    report.carrier = G.size();
    report.automorphisms = automorphisms(G).size();
    auto hol = holomorph(G);
    report.holomorph = hol.size();
    for (auto const& H : regular_subgroups(G, hol)) {
      BraceSummary s;
      s.brace = brace_from_subgroup(G, H);
      s.trivial = s.brace.circ == s.brace.add;
      s.valid = is_skew_brace(s.brace);
      s.roundtrip_subgroup = subgroup_from_brace(s.brace) == H;
      auto H2 = subgroup_from_brace(s.brace);
      s.roundtrip_brace = std::all_of(H2.begin(), H2.end(),
                                      [&](auto const& p) { return std::binary_search(hol.begin(), hol.end(), p); })
                          && brace_from_subgroup(G, H2) == s.brace;
      s.kernel_lambda_size = kernel_lambda(s.brace).size();
      s.socle_size = socle(s.brace).size();
      s.retractions = retraction_series(s.brace);
      s.nilpotency_degree = right_nilpotency_degree(s.brace);
      if (s.valid) {
        s.circ_orders = FiniteGroup(s.brace.circ).order_profile();
      }
      report.braces.push_back(std::move(s));
    }
    return report;
  }

}  // namespace artin::finite
