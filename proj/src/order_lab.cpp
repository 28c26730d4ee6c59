#include "artin/order_lab.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::order {

  std::size_t PosetBall::find(MonoidElement const& x) const {
    auto it = index.find(x);
    return it == index.end() ? nodes.size() : it->second;
  }

  std::vector<std::size_t> PosetBall::layer_sizes() const {
    std::vector<std::size_t> sizes(height_bound + 1, 0);
    for (auto h : heights) {
      ++sizes[h];
    }
    return sizes;
  }

  PosetBall build_ball(ArtinGroup const& G, std::size_t h, std::size_t node_limit) {
    PosetBall ball;
    ball.height_bound = h;
    auto add_node = [&](MonoidElement x, std::size_t height) {
      std::size_t id = ball.nodes.size();
      if (id >= node_limit) {
        throw DomainError("ball exceeds node limit " + std::to_string(node_limit));
      }
      ball.index.emplace(x, id);
      ball.nodes.push_back(std::move(x));
      ball.heights.push_back(height);
      ball.out.emplace_back();
      ball.in.emplace_back();
      return id;
    };
    add_node(G.monoid_identity(), 0);
    std::size_t layer_begin = 0;
    for (std::size_t level = 0; level < h; ++level) {
      std::size_t layer_end = ball.nodes.size();
      for (std::size_t v = layer_begin; v < layer_end; ++v) {
        for (std::size_t i = 0; i < G.rank(); ++i) {
          MonoidElement y = G.multiply(ball.nodes[v], G.atom(static_cast<int>(i)));
          std::size_t w = ball.find(y);
          if (w == ball.nodes.size()) {
            w = add_node(std::move(y), level + 1);
          }
          ball.edges.push_back({v, static_cast<int>(i), w});
          ball.out[v].push_back(w);
          ball.in[w].push_back(v);
        }
      }
      layer_begin = layer_end;
    }
    return ball;
  }

  std::vector<MonoidElement> interval(ArtinGroup const& G, MonoidElement const& a,
                                      MonoidElement const& b) {
    if (!G.left_divides(a, b)) {
      throw DomainError("interval: lower end does not divide upper end");
    }
    std::vector<MonoidElement> result{a};
    std::unordered_map<MonoidElement, bool, garside::MonoidElementHash> seen{{a, true}};
    for (std::size_t k = 0; k < result.size(); ++k) {
      for (std::size_t i = 0; i < G.rank(); ++i) {
        MonoidElement y = G.multiply(result[k], G.atom(static_cast<int>(i)));
        if (!seen.contains(y) && G.left_divides(y, b)) {
          seen.emplace(y, true);
          result.push_back(std::move(y));
        }
      }
    }
    std::sort(result.begin(), result.end(), [&](auto const& x, auto const& y) {
      auto hx = G.height(x), hy = G.height(y);
      return hx != hy ? hx < hy : x < y;
    });
    return result;
  }

  RigidityReport check_rigidity(ArtinGroup const& G, bool dual) {
    RigidityReport report;
    report.dual = dual;
    std::size_t const n = G.rank();
    std::vector<GroupElement> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back(G.generator(static_cast<int>(i), dual));
    }
    auto le = [&](GroupElement const& a, GroupElement const& b) {
      return dual ? G.leq(b, a) : G.leq(a, b);
    };
    auto vee = [&](GroupElement const& a, GroupElement const& b) {
      return dual ? G.meet(a, b) : G.join(a, b);
    };

    // products[x][z] = xz, joins[x][y] = x v y
    std::vector<std::vector<GroupElement>> products(n), joins(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        products[x].push_back(G.multiply(atoms[x], atoms[y]));
        joins[x].push_back(vee(atoms[x], atoms[y]));
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        ++report.pairs_checked;
        std::size_t count = 0;
        for (std::size_t z = 0; z < n; ++z) {
          count += le(products[x][z], joins[x][y]) ? 1 : 0;
        }
        if (count != 1) {
          report.failures.push_back({1, static_cast<int>(x), static_cast<int>(y), count});
        }
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      ++report.atoms_checked;
      std::size_t count = 0;
      for (std::size_t z = 0; z < n; ++z) {
        bool below_some = false;
        for (std::size_t y = 0; y < n && !below_some; ++y) {
          below_some = le(products[x][z], joins[x][y]);
        }
        count += below_some ? 0 : 1;
      }
      if (count > 1) {
        report.failures.push_back({2, static_cast<int>(x), -1, count});
      }
    }
    return report;
  }

  namespace {

    // Joint colour refinement on two copies of the cover graph; node v of the
    // second copy is stored as v + n. Returns false if the copies end up with
    // different colour class sizes, which rules out an isomorphism.
    bool refine_pair(PosetBall const& ball, std::vector<std::size_t>& colour) {
      std::size_t const n = ball.size();
      std::size_t classes = 0;
      for (;;) {
        using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
        std::map<Signature, std::size_t> ids;
        std::vector<std::size_t> next(2 * n);
        for (std::size_t x = 0; x < 2 * n; ++x) {
          std::size_t v = x % n, shift = x - v;
          std::vector<std::size_t> ins, outs;
          for (auto u : ball.in[v]) {
            ins.push_back(colour[u + shift]);
          }
          for (auto u : ball.out[v]) {
            outs.push_back(colour[u + shift]);
          }
          std::sort(ins.begin(), ins.end());
          std::sort(outs.begin(), outs.end());
          auto [it, fresh] = ids.emplace(Signature{colour[x], std::move(ins), std::move(outs)}, ids.size());
          next[x] = it->second;
        }
        colour = std::move(next);
        if (ids.size() == classes) {
          break;
        }
        classes = ids.size();
      }
      std::vector<std::ptrdiff_t> balance(classes, 0);
      for (std::size_t v = 0; v < n; ++v) {
        ++balance[colour[v]];
        --balance[colour[v + n]];
      }
      return std::all_of(balance.begin(), balance.end(), [](auto b) { return b == 0; });
    }

    // Depth-first search for a single cover-preserving bijection compatible
    // with the refined colouring. Nodes are visited in height order, so all
    // lower covers of a node are already mapped when it is reached.
    struct ExtensionSearch {
      PosetBall const& ball;
      std::vector<std::vector<std::size_t>> candidates;
      std::vector<std::size_t> image;
      std::vector<bool> used;

      bool consistent(std::size_t v, std::size_t c) const {
        auto const& target_in = ball.in[c];
        if (target_in.size() != ball.in[v].size() || ball.out[c].size() != ball.out[v].size()) {
          return false;
        }
        for (auto u : ball.in[v]) {
          if (std::find(target_in.begin(), target_in.end(), image[u]) == target_in.end()) {
            return false;
          }
        }
        return true;
      }

      bool search(std::size_t v) {
        if (v == ball.size()) {
          return true;
        }
        for (auto c : candidates[v]) {
          if (used[c] || !consistent(v, c)) {
            continue;
          }
          used[c] = true;
          image[v] = c;
          if (search(v + 1)) {
            return true;
          }
          used[c] = false;
        }
        return false;
      }
    };

    std::optional<std::vector<std::size_t>> extend_atom_permutation(PosetBall const& ball,
                                                                     std::vector<std::size_t> const& atoms,
                                                                     std::vector<std::size_t> const& targets) {
      std::size_t const n = ball.size();
      std::size_t const top = ball.height_bound + 1;
      std::vector<std::size_t> colour(2 * n);
      for (std::size_t v = 0; v < n; ++v) {
        colour[v] = colour[v + n] = ball.heights[v];
      }
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        colour[atoms[k]] = top + k;
        colour[targets[k] + n] = top + k;
      }
      if (!refine_pair(ball, colour)) {
        return std::nullopt;
      }
      std::map<std::size_t, std::vector<std::size_t>> classes;
      for (std::size_t v = 0; v < n; ++v) {
        classes[colour[v + n]].push_back(v);
      }
      ExtensionSearch s{ball, std::vector<std::vector<std::size_t>>(n), std::vector<std::size_t>(n), std::vector<bool>(n)};
      for (std::size_t v = 0; v < n; ++v) {
        s.candidates[v] = classes[colour[v]];
      }
      if (!s.search(0)) {
        return std::nullopt;
      }
      return s.image;
    }

  }  // namespace

  std::vector<std::vector<std::size_t>> poset_automorphisms(PosetBall const& ball, bool fix_identity) {
    if (ball.size() == 0) {
      return {};
    }
    if (ball.height_bound == 0) {
      return {{0}};
    }
    // Atoms are the nodes of height 1, in generator order.
    std::vector<std::size_t> atoms;
    for (std::size_t v = 0; v < ball.size() && ball.heights[v] <= 1; ++v) {
      if (ball.heights[v] == 1) {
        atoms.push_back(v);
      }
    }
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> targets = atoms;
    do {
      if (auto image = extend_atom_permutation(ball, atoms, targets)) {
        if (!fix_identity || (*image)[0] == 0) {
          found.push_back(std::move(*image));
        }
      }
    } while (std::next_permutation(targets.begin(), targets.end()));
    return found;
  }

  Permutation atom_action(PosetBall const& ball, ArtinGroup const& G,
                          std::vector<std::size_t> const& automorphism) {
    std::vector<int> images(G.rank());
    for (std::size_t i = 0; i < G.rank(); ++i) {
      std::size_t v = ball.find(G.atom(static_cast<int>(i)));
      if (v == ball.size()) {
        throw DomainError("atom_action: ball does not contain the atoms");
      }
      auto const& target = ball.nodes[automorphism[v]];
      if (target.sup() != 1 || G.length(target.factors[0]) != 1) {
        throw DomainError("atom_action: automorphism does not preserve atoms");
      }
      images[i] = G.table().reduced_word(target.factors[0].id)[0];
    }
    return Permutation(std::move(images));
  }

  std::string export_dot(ArtinGroup const& G, PosetBall const& ball) {
    std::ostringstream out;
    out << "digraph ball {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t v = 0; v < ball.size(); ++v) {
      out << "  n" << v << " [label=\"" << G.to_normal_form(ball.nodes[v]) << "\"];\n";
    }
    for (auto const& e : ball.edges) {
      out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.atom + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace artin::order
