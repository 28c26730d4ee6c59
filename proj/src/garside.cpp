#include "artin/garside.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "artin/errors.hpp"

namespace artin::garside {

  using coxeter::CoxeterMatrix;
  using coxeter::DiagramSymmetry;

  std::size_t MonoidElementHash::operator()(MonoidElement const& x) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto s : x.factors) {
      h ^= s.id + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  ArtinGroup::ArtinGroup(CoxeterMatrix m, std::size_t bound) : _matrix(std::move(m)) {
    if (!coxeter::classify_spherical(_matrix).spherical) {
      throw DomainError("Artin-Tits group is not of spherical type");
    }
    _table = std::make_shared<coxeter::GroupTable const>(coxeter::enumerate_group(_matrix, bound));
    auto const& t = *_table;
    std::uint32_t const w0 = t.longest();
    std::size_t const n = t.size();
    _complement.resize(n);
    _tau.resize(n);
    for (std::uint32_t w = 0; w < n; ++w) {
      _complement[w] = t.multiply(t.inverse(w), w0);
      _tau[w] = t.multiply(t.multiply(w0, w), w0);
    }
    _symmetries = coxeter::diagram_symmetries(_matrix);
    for (auto const& p : _symmetries) {
      std::vector<std::uint32_t> image(n, 0);
      for (std::uint32_t w = 1; w < n; ++w) {
        int last = std::countr_zero(t.right_descents(w));
        image[w] = t.rmul(image[t.rmul(w, last)], p(last));
      }
      _symmetry_tables.push_back(std::move(image));
    }
  }

  ArtinGroup::ArtinGroup(coxeter::TypeName const& type, std::size_t bound)
      : ArtinGroup(coxeter::named_matrix(type), bound) {}

  ////////////////////////////////////////////////////////////////////////
  // Simples
  ////////////////////////////////////////////////////////////////////////

  Simple ArtinGroup::simple_from_word(std::vector<int> const& word) const {
    std::uint32_t w = 0;
    for (int i : word) {
      if (i < 0 || static_cast<std::size_t>(i) >= rank()) {
        throw DomainError("generator index out of range");
      }
      std::uint32_t next = _table->rmul(w, i);
      if (_table->length(next) < _table->length(w)) {
        throw DomainError("word is not reduced, so it is not a simple element");
      }
      w = next;
    }
    return {w};
  }

  Simple ArtinGroup::meet_simples(Simple u, Simple v) const {
    auto const& t = *_table;
    std::uint32_t res = 0, a = u.id, b = v.id;
    while (std::uint32_t common = t.left_descents(a) & t.left_descents(b)) {
      int i = std::countr_zero(common);
      res = t.rmul(res, i);
      a = t.lmul(a, i);
      b = t.lmul(b, i);
    }
    return {res};
  }

  Simple ArtinGroup::right_meet_simples(Simple u, Simple v) const {
    auto const& t = *_table;
    std::uint32_t res = 0, a = u.id, b = v.id;
    while (std::uint32_t common = t.right_descents(a) & t.right_descents(b)) {
      int i = std::countr_zero(common);
      res = t.lmul(res, i);
      a = t.rmul(a, i);
      b = t.rmul(b, i);
    }
    return {res};
  }

  Simple ArtinGroup::join_simples(Simple u, Simple v) const {
    // d(w) = w^-1 w0 reverses the order; d^-1(x) = w0 x^-1.
    Simple x = right_meet_simples(right_complement(u), right_complement(v));
    return {_table->multiply(_table->longest(), _table->inverse(x.id))};
  }

  bool ArtinGroup::left_weighted(Simple s, Simple t) const {
    std::uint32_t ld = _table->left_descents(t.id);
    return (_table->right_descents(s.id) & ld) == ld;
  }

  bool ArtinGroup::simple_divides(Simple u, Simple v) const {
    auto q = _table->multiply(_table->inverse(u.id), v.id);
    return _table->length(q) + _table->length(u.id) == _table->length(v.id);
  }

  Simple ArtinGroup::left_quotient(Simple u, Simple t) const {
    std::uint32_t x = t.id;
    for (int i : _table->reduced_word(u.id)) {
      x = _table->lmul(x, i);
    }
    return {x};
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid
  ////////////////////////////////////////////////////////////////////////

  MonoidElement ArtinGroup::delta_power(std::size_t k) const {
    return {std::vector<Simple>(k, delta_simple())};
  }

  MonoidElement ArtinGroup::monoid_from_word(std::vector<int> const& word) const {
    std::vector<Simple> f;
    f.reserve(word.size());
    for (int i : word) {
      if (i < 0 || static_cast<std::size_t>(i) >= rank()) {
        throw DomainError("generator index out of range");
      }
      f.push_back(atom_simple(i));
    }
    return normalize(std::move(f));
  }

  MonoidElement ArtinGroup::normalize(std::vector<Simple> f) const {
    auto const e = identity_simple();
    std::erase(f, e);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        Simple u = meet_simples(right_complement(f[k]), f[k + 1]);
        if (u != e) {
          f[k] = {_table->multiply(f[k].id, u.id)};
          f[k + 1] = left_quotient(u, f[k + 1]);
          changed = true;
        }
      }
      if (std::erase(f, e) > 0) {
        changed = true;
      }
    }
    return {std::move(f)};
  }

  MonoidElement ArtinGroup::multiply(MonoidElement const& a, MonoidElement const& b) const {
    if (b.is_identity()) {
      return a;
    }
    if (a.is_identity()) {
      return b;
    }
    std::vector<Simple> f = a.factors;
    f.insert(f.end(), b.factors.begin(), b.factors.end());
    return normalize(std::move(f));
  }

  MonoidElement ArtinGroup::gcd(MonoidElement const& a0, MonoidElement const& b0) const {
    auto const e = identity_simple();
    MonoidElement a = a0, b = b0;
    std::vector<Simple> result;
    for (;;) {
      Simple ha = a.is_identity() ? e : a.factors.front();
      Simple hb = b.is_identity() ? e : b.factors.front();
      Simple s = meet_simples(ha, hb);
      if (s == e) {
        break;
      }
      result.push_back(s);
      a.factors.front() = left_quotient(s, ha);
      b.factors.front() = left_quotient(s, hb);
      a = normalize(std::move(a.factors));
      b = normalize(std::move(b.factors));
    }
    return normalize(std::move(result));
  }

  MonoidElement ArtinGroup::right_gcd(MonoidElement const& a, MonoidElement const& b) const {
    return rev(gcd(rev(a), rev(b)));
  }

  MonoidElement ArtinGroup::complement_power(MonoidElement const& x, std::size_t k) const {
    if (x.sup() > k) {
      throw DomainError("complement_power: element does not divide Delta^k");
    }
    // x1...xk (padded with identities) gives tau^0(dx_k) tau^1(dx_{k-1}) ... tau^{k-1}(dx_1).
    std::vector<Simple> f;
    f.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t idx = k - 1 - j;
      Simple xi = idx < x.sup() ? x.factors[idx] : identity_simple();
      Simple c = right_complement(xi);
      f.push_back(j % 2 == 1 ? tau(c) : c);
    }
    return normalize(std::move(f));
  }

  MonoidElement ArtinGroup::left_complement_power(MonoidElement const& y, std::size_t k) const {
    return rev(complement_power(rev(y), k));
  }

  MonoidElement ArtinGroup::join(MonoidElement const& a, MonoidElement const& b) const {
    std::size_t k = std::max(a.sup(), b.sup());
    if (k == 0) {
      return {};
    }
    auto y = right_gcd(complement_power(a, k), complement_power(b, k));
    return left_complement_power(y, k);
  }

  bool ArtinGroup::left_divides(MonoidElement const& a, MonoidElement const& b) const {
    return gcd(a, b) == a;
  }

  MonoidElement ArtinGroup::tau(MonoidElement const& a, std::int64_t power) const {
    if (power % 2 == 0) {
      return a;
    }
    MonoidElement r = a;
    for (auto& s : r.factors) {
      s = tau(s);
    }
    return r;
  }

  MonoidElement ArtinGroup::rev(MonoidElement const& a) const {
    std::vector<Simple> f;
    f.reserve(a.sup());
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
      f.push_back(rev(*it));
    }
    return normalize(std::move(f));
  }

  std::size_t ArtinGroup::height(MonoidElement const& a) const {
    std::size_t h = 0;
    for (auto s : a.factors) {
      h += _table->length(s.id);
    }
    return h;
  }

  std::vector<int> ArtinGroup::word(MonoidElement const& a) const {
    std::vector<int> w;
    for (auto s : a.factors) {
      auto part = _table->reduced_word(s.id);
      w.insert(w.end(), part.begin(), part.end());
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  GroupElement ArtinGroup::strip_delta(std::int64_t dpow, MonoidElement pos) const {
    auto const d = delta_simple();
    std::size_t lead = 0;
    while (lead < pos.factors.size() && pos.factors[lead] == d) {
      ++lead;
    }
    pos.factors.erase(pos.factors.begin(), pos.factors.begin() + static_cast<std::ptrdiff_t>(lead));
    return {dpow + static_cast<std::int64_t>(lead), std::move(pos)};
  }

  GroupElement ArtinGroup::from_monoid(MonoidElement const& a) const {
    return strip_delta(0, a);
  }

  GroupElement ArtinGroup::generator(int i, bool inverted) const {
    GroupElement g = from_monoid(atom(i));
    return inverted ? inverse(g) : g;
  }

  MonoidElement ArtinGroup::to_monoid(GroupElement const& g) const {
    if (g.dpow < 0) {
      throw DomainError("to_monoid: element is not positive");
    }
    MonoidElement a = delta_power(static_cast<std::size_t>(g.dpow));
    a.factors.insert(a.factors.end(), g.pos.factors.begin(), g.pos.factors.end());
    return a;
  }

  GroupElement ArtinGroup::multiply(GroupElement const& g, GroupElement const& h) const {
    // Delta^p x Delta^q y = Delta^(p+q) tau^q(x) y.
    std::vector<Simple> f = tau(g.pos, h.dpow).factors;
    f.insert(f.end(), h.pos.factors.begin(), h.pos.factors.end());
    return strip_delta(g.dpow + h.dpow, normalize(std::move(f)));
  }

  GroupElement ArtinGroup::inverse(GroupElement const& g) const {
    // (Delta^p x)^-1 = Delta^(-p-k) tau^(-p-k)(x^-1 Delta^k), k = sup(x).
    std::size_t k = g.pos.sup();
    std::int64_t p = -g.dpow - static_cast<std::int64_t>(k);
    return strip_delta(p, tau(complement_power(g.pos, k), p));
  }

  GroupElement ArtinGroup::power(GroupElement const& g, std::int64_t n) const {
    GroupElement base = n < 0 ? inverse(g) : g;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    GroupElement result = identity();
    while (e > 0) {
      if (e & 1u) {
        result = multiply(result, base);
      }
      e >>= 1;
      if (e > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  bool ArtinGroup::leq(GroupElement const& g, GroupElement const& h) const {
    return multiply(inverse(g), h).dpow >= 0;
  }

  GroupElement ArtinGroup::meet(GroupElement const& g, GroupElement const& h) const {
    std::int64_t n = std::min(g.dpow, h.dpow);
    auto a = to_monoid({g.dpow - n, g.pos});
    auto b = to_monoid({h.dpow - n, h.pos});
    return strip_delta(n, gcd(a, b));
  }

  GroupElement ArtinGroup::join(GroupElement const& g, GroupElement const& h) const {
    std::int64_t n = std::min(g.dpow, h.dpow);
    auto a = to_monoid({g.dpow - n, g.pos});
    auto b = to_monoid({h.dpow - n, h.pos});
    return strip_delta(n, join(a, b));
  }

  std::size_t ArtinGroup::relative_height(GroupElement const& g, GroupElement const& h) const {
    auto x = multiply(inverse(g), h);
    if (x.dpow < 0) {
      throw DomainError("relative_height: g is not <= h");
    }
    return static_cast<std::size_t>(x.dpow) * length(delta_simple()) + height(x.pos);
  }

  GroupElement ArtinGroup::braid_term(GroupElement const& x, GroupElement const& y,
                                      std::size_t k) const {
    GroupElement r = identity();
    for (std::size_t i = 0; i < k; ++i) {
      r = multiply(r, i % 2 == 0 ? x : y);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram symmetries
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::uint32_t> const& ArtinGroup::symmetry_table(DiagramSymmetry const& p) const {
    auto it = std::lower_bound(_symmetries.begin(), _symmetries.end(), p);
    if (it == _symmetries.end() || *it != p) {
      throw DomainError("permutation " + p.cycles() + " is not a diagram symmetry");
    }
    return _symmetry_tables[static_cast<std::size_t>(it - _symmetries.begin())];
  }

  Simple ArtinGroup::apply_symmetry(DiagramSymmetry const& p, Simple s) const {
    return {symmetry_table(p)[s.id]};
  }

  MonoidElement ArtinGroup::apply_symmetry(DiagramSymmetry const& p, MonoidElement const& a) const {
    auto const& tab = symmetry_table(p);
    std::vector<Simple> f;
    f.reserve(a.sup());
    for (auto s : a.factors) {
      f.push_back({tab[s.id]});
    }
    return normalize(std::move(f));
  }

  GroupElement ArtinGroup::apply_symmetry(DiagramSymmetry const& p, GroupElement const& g) const {
    return strip_delta(g.dpow, apply_symmetry(p, g.pos));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string delta_token(std::int64_t p) {
      return p == 1 ? std::string("D") : "D^" + std::to_string(p);
    }

  }  // namespace

  std::string ArtinGroup::to_word(GroupElement const& g) const {
    if (g.is_identity()) {
      return "e";
    }
    std::string out;
    if (g.dpow != 0) {
      out = delta_token(g.dpow);
    }
    for (int i : word(g.pos)) {
      if (!out.empty()) {
        out += '.';
      }
      out += "s" + std::to_string(i + 1);
    }
    return out;
  }

  std::string ArtinGroup::to_normal_form(MonoidElement const& a) const {
    if (a.is_identity()) {
      return "e";
    }
    std::string out;
    for (auto s : a.factors) {
      out += '[';
      bool first = true;
      for (int i : _table->reduced_word(s.id)) {
        out += (first ? "s" : " s") + std::to_string(i + 1);
        first = false;
      }
      out += ']';
    }
    return out;
  }

  std::string ArtinGroup::to_normal_form(GroupElement const& g) const {
    if (g.dpow == 0) {
      return to_normal_form(g.pos);
    }
    if (g.pos.is_identity()) {
      return delta_token(g.dpow);
    }
    return delta_token(g.dpow) + " " + to_normal_form(g.pos);
  }

  GroupElement ArtinGroup::parse(std::string_view text) const {
    std::size_t pos = 0;
    auto fail = [&](std::string const& what) { throw ParseError(what, 1, pos + 1); };
    auto skip = [&] {
      while (pos < text.size()
             && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '.'
                 || text[pos] == '*')) {
        ++pos;
      }
    };
    auto read_int = [&](bool allow_sign) {
      std::size_t start = pos;
      if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
      }
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::string digits(text.substr(start, pos - start));
      if (digits.empty() || digits == "-" || digits == "+") {
        fail("expected an integer");
      }
      return std::stoll(digits);
    };
    auto read_exponent = [&]() -> std::int64_t {
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        return read_int(true);
      }
      return 1;
    };
    auto read_generator = [&]() -> int {
      if (pos >= text.size() || (text[pos] != 's' && text[pos] != 'S')) {
        fail("expected a generator 'sK'");
      }
      ++pos;
      auto i = read_int(false);
      if (i < 1 || static_cast<std::size_t>(i) > rank()) {
        fail("generator index out of range");
      }
      return static_cast<int>(i - 1);
    };

    GroupElement result = identity();
    skip();
    if (text.substr(pos) == "e") {
      return result;
    }
    while (pos < text.size()) {
      char c = text[pos];
      if (c == 'e' && (pos + 1 == text.size() || text[pos + 1] == '.'
                       || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;
      } else if (c == 'D') {
        ++pos;
        result = multiply(result, delta(read_exponent()));
      } else if (c == '[') {
        ++pos;
        std::vector<int> w;
        for (;;) {
          while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
          }
          if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
          }
          w.push_back(read_generator());
        }
        Simple s;
        try {
          s = simple_from_word(w);
        } catch (DomainError const& e) {
          fail(e.what());
        }
        result = multiply(result, from_monoid(normalize({s})));
      } else {
        int i = read_generator();
        result = multiply(result, power(generator(i), read_exponent()));
      }
      skip();
    }
    return result;
  }

}  // namespace artin::garside
