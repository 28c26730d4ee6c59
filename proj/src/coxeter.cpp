#include "artin/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::coxeter {

  using exact::ContextPtr;
  using exact::ExactReal;
  using exact::Rational;

  CoxeterMatrix::CoxeterMatrix(std::size_t n, std::vector<int> entries)
      : _n(n), _m(std::move(entries)) {
    if (_m.size() != n * n) {
      throw DomainError("Coxeter matrix needs " + std::to_string(n * n) + " entries");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        int v = (*this)(i, j);
        if (i == j && v != 1) {
          throw DomainError("diagonal entry m_" + std::to_string(i + 1) + std::to_string(i + 1)
                            + " must be 1");
        }
        if (i != j && v < 2) {
          throw DomainError("off-diagonal entry m_" + std::to_string(i + 1) + ","
                            + std::to_string(j + 1) + " must be >= 2");
        }
        if (v != (*this)(j, i)) {
          throw DomainError("matrix is not symmetric at (" + std::to_string(i + 1) + ","
                            + std::to_string(j + 1) + ")");
        }
      }
    }
  }

  unsigned CoxeterMatrix::lcm() const {
    unsigned L = 1;
    for (int v : _m) {
      L = std::lcm(L, static_cast<unsigned>(v));
    }
    return L;
  }

  int CoxeterMatrix::max_label() const {
    int best = 1;
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (i != j) {
          best = std::max(best, (*this)(i, j));
        }
      }
    }
    return best;
  }

  bool CoxeterMatrix::oddly_laced() const {
    return std::all_of(_m.begin(), _m.end(), [](int v) { return v == 2 || v % 2 == 1; });
  }

  std::vector<std::vector<int>> CoxeterMatrix::components() const {
    std::vector<int> comp(_n, -1);
    std::vector<std::vector<int>> result;
    for (std::size_t s = 0; s < _n; ++s) {
      if (comp[s] != -1) {
        continue;
      }
      std::vector<int> members{static_cast<int>(s)};
      comp[s] = static_cast<int>(result.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (std::size_t j = 0; j < _n; ++j) {
          if (comp[j] == -1 && (*this)(members[k], j) >= 3) {
            comp[j] = comp[s];
            members.push_back(static_cast<int>(j));
          }
        }
      }
      std::sort(members.begin(), members.end());
      result.push_back(std::move(members));
    }
    return result;
  }

  CoxeterMatrix CoxeterMatrix::submatrix(std::vector<int> const& vertices) const {
    std::size_t k = vertices.size();
    std::vector<int> e(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        e[i * k + j] = (*this)(vertices[i], vertices[j]);
      }
    }
    return CoxeterMatrix(k, std::move(e));
  }

  std::string CoxeterMatrix::to_string() const {
    std::ostringstream os;
    os << "rank " << _n << '\n';
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        os << (j ? " " : "") << (*this)(i, j);
      }
      os << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Named types
  ////////////////////////////////////////////////////////////////////////

  TypeName parse_type_name(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a type letter", 1, pos + 1);
    }
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
    while (pos < text.size()
           && (text[pos] == '_' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ParseError("expected a type index", 1, pos + 1);
    }
    int index = std::stoi(std::string(text.substr(start, pos - start)));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos != text.size()) {
      throw ParseError("trailing characters after type name", 1, pos + 1);
    }
    TypeName t{family, index};
    (void) named_matrix(t);  // validates the range
    return t;
  }

  CoxeterMatrix named_matrix(TypeName const& type) {
    int const k = type.index;
    auto bad = [&] { return DomainError("no Coxeter type " + type.str()); };
    std::size_t n = 0;
    switch (type.family) {
      case 'A': if (k < 1) throw bad(); n = k; break;
      case 'B':
      case 'C': if (k < 2) throw bad(); n = k; break;
      case 'D': if (k < 4) throw bad(); n = k; break;
      case 'E': if (k < 6 || k > 8) throw bad(); n = k; break;
      case 'F': if (k != 4) throw bad(); n = 4; break;
      case 'H': if (k < 3 || k > 4) throw bad(); n = k; break;
      case 'G': if (k != 2) throw bad(); n = 2; break;
      case 'I': if (k < 2) throw bad(); n = 2; break;
      default: throw bad();
    }
    std::vector<int> e(n * n, 2);
    auto set = [&](std::size_t i, std::size_t j, int v) {  // 1-based
      e[(i - 1) * n + (j - 1)] = v;
      e[(j - 1) * n + (i - 1)] = v;
    };
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = 1;
    }
    switch (type.family) {
      case 'A':
        for (std::size_t i = 1; i < n; ++i) set(i, i + 1, 3);
        break;
      case 'B':
      case 'C':
        for (std::size_t i = 1; i < n; ++i) set(i, i + 1, 3);
        set(n - 1, n, 4);
        break;
      case 'D':
        set(1, n, 3);
        set(2, n, 3);
        set(3, n, 3);
        for (std::size_t i = 3; i + 1 < n; ++i) set(i, i + 1, 3);
        break;
      case 'E':
        for (std::size_t i = 1; i + 1 < n; ++i) set(i, i + 1, 3);
        set(3, n, 3);
        break;
      case 'F':
        set(1, 2, 3);
        set(2, 3, 4);
        set(3, 4, 3);
        break;
      case 'H':
        set(1, 2, 5);
        for (std::size_t i = 2; i < n; ++i) set(i, i + 1, 3);
        break;
      case 'G':
        set(1, 2, 6);
        break;
      case 'I':
        set(1, 2, k);
        break;
    }
    return CoxeterMatrix(n, std::move(e));
  }

  std::uint64_t classical_order(TypeName const& type) {
    auto fact = [](std::uint64_t n) {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) f *= i;
      return f;
    };
    std::uint64_t k = static_cast<std::uint64_t>(type.index);
    switch (type.family) {
      case 'A': return fact(k + 1);
      case 'B':
      case 'C': return (std::uint64_t{1} << k) * fact(k);
      case 'D': return (std::uint64_t{1} << (k - 1)) * fact(k);
      case 'E': return k == 6 ? 51840u : k == 7 ? 2903040u : 696729600u;
      case 'F': return 1152;
      case 'G': return 12;
      case 'H': return k == 3 ? 120u : 14400u;
      case 'I': return 2 * k;
      default: throw DomainError("no Coxeter type " + type.str());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Token {
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
      std::vector<std::vector<Token>> lines;
      std::size_t line_no = 0;
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
          if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
          }
          std::size_t s = i;
          while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
          }
          toks.push_back({std::string(line.substr(s, i - s)), line_no, s + 1});
        }
        if (!toks.empty()) {
          lines.push_back(std::move(toks));
        }
        if (end == text.size()) {
          break;
        }
        pos = end + 1;
      }
      return lines;
    }

    int to_int(Token const& t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t.text, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != t.text.size() || used == 0) {
        throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
      }
      return v;
    }

  }  // namespace

  CoxeterMatrix parse_coxeter(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) {
      throw ParseError("empty input", 1, 1);
    }
    auto const& head = lines[0];
    if (head[0].text == "type") {
      if (lines.size() > 1) {
        throw ParseError("unexpected content after type line", lines[1][0].line,
                         lines[1][0].column);
      }
      std::string rest;
      for (std::size_t i = 1; i < head.size(); ++i) {
        rest += head[i].text + " ";
      }
      if (rest.empty()) {
        throw ParseError("missing type name", head[0].line, head[0].column + 4);
      }
      try {
        return named_matrix(parse_type_name(rest));
      } catch (Error const& e) {
        throw ParseError(e.what(), head[1].line, head[1].column);
      }
    }
    if (head[0].text != "rank" || head.size() != 2) {
      throw ParseError("expected 'rank <n>' or 'type <X> <k>'", head[0].line, head[0].column);
    }
    int n = to_int(head[1]);
    if (n < 1) {
      throw ParseError("rank must be positive", head[1].line, head[1].column);
    }
    if (lines.size() != static_cast<std::size_t>(n) + 1) {
      auto const& where = lines.back().back();
      throw ParseError("expected " + std::to_string(n) + " matrix rows, found "
                           + std::to_string(lines.size() - 1),
                       where.line, where.column);
    }
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r) {
      auto const& row = lines[r + 1];
      if (row.size() != static_cast<std::size_t>(n)) {
        throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size())
                             + " entries, expected " + std::to_string(n),
                         row[0].line, row[0].column);
      }
      for (auto const& t : row) {
        e.push_back(to_int(t));
      }
    }
    // Validate here to report a position.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Token const& t = lines[i + 1][j];
        int v = e[i * n + j];
        if (i == j && v != 1) {
          throw ParseError("diagonal entry must be 1", t.line, t.column);
        }
        if (i != j && v < 2) {
          throw ParseError("off-diagonal entry must be >= 2", t.line, t.column);
        }
        if (v != e[j * n + i]) {
          throw ParseError("matrix is not symmetric (entry " + std::to_string(i + 1) + ","
                               + std::to_string(j + 1) + ")",
                           t.line, t.column);
        }
      }
    }
    return CoxeterMatrix(static_cast<std::size_t>(n), std::move(e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphisms, classification, symmetries
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::vector<int>> row_signatures(CoxeterMatrix const& m) {
      std::vector<std::vector<int>> sig(m.rank());
      for (std::size_t i = 0; i < m.rank(); ++i) {
        for (std::size_t j = 0; j < m.rank(); ++j) {
          sig[i].push_back(m(i, j));
        }
        std::sort(sig[i].begin(), sig[i].end());
      }
      return sig;
    }

    void extend_iso(CoxeterMatrix const& a, CoxeterMatrix const& b,
                    std::vector<std::vector<int>> const& sa,
                    std::vector<std::vector<int>> const& sb, std::vector<int>& phi,
                    std::vector<bool>& used, std::vector<Permutation>& out, bool first_only) {
      std::size_t i = 0;
      while (i < phi.size() && phi[i] != -1) {
        ++i;
      }
      if (i == phi.size()) {
        out.emplace_back(phi);
        return;
      }
      for (std::size_t j = 0; j < b.rank(); ++j) {
        if (used[j] || sa[i] != sb[j]) {
          continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = b(phi[k], j) == a(k, i);
        }
        if (!ok) {
          continue;
        }
        phi[i] = static_cast<int>(j);
        used[j] = true;
        extend_iso(a, b, sa, sb, phi, used, out, first_only);
        phi[i] = -1;
        used[j] = false;
        if (first_only && !out.empty()) {
          return;
        }
      }
    }

    std::vector<TypeName> candidates(CoxeterMatrix const& comp) {
      std::size_t r = comp.rank();
      if (r == 1) {
        return {{'A', 1}};
      }
      if (r == 2) {
        int m = comp(0, 1);
        return {m == 3 ? TypeName{'A', 2} : TypeName{'I', m}};
      }
      std::vector<TypeName> c{{'A', static_cast<int>(r)}, {'B', static_cast<int>(r)}};
      if (r >= 4) c.push_back({'D', static_cast<int>(r)});
      if (r >= 6 && r <= 8) c.push_back({'E', static_cast<int>(r)});
      if (r == 4) c.push_back({'F', 4});
      if (r == 3 || r == 4) c.push_back({'H', static_cast<int>(r)});
      return c;
    }

  }  // namespace

  std::vector<Permutation> isomorphisms(CoxeterMatrix const& a, CoxeterMatrix const& b,
                                        bool first_only) {
    std::vector<Permutation> out;
    if (a.rank() != b.rank()) {
      return out;
    }
    auto sa = row_signatures(a), sb = row_signatures(b);
    std::vector<int> phi(a.rank(), -1);
    std::vector<bool> used(b.rank(), false);
    extend_iso(a, b, sa, sb, phi, used, out, first_only);
    return out;
  }

  bool is_diagram_symmetry(CoxeterMatrix const& m, Permutation const& p) {
    if (p.size() != m.rank()) {
      return false;
    }
    for (std::size_t i = 0; i < m.rank(); ++i) {
      for (std::size_t j = 0; j < m.rank(); ++j) {
        if (m(p(static_cast<int>(i)), p(static_cast<int>(j))) != m(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<DiagramSymmetry> diagram_symmetries(CoxeterMatrix const& m) {
    auto syms = isomorphisms(m, m);
    std::sort(syms.begin(), syms.end());  // identity is the smallest image list
    return syms;
  }

  Classification classify_spherical(CoxeterMatrix const& m) {
    Classification c;
    c.spherical = true;
    for (auto const& verts : m.components()) {
      auto sub = m.submatrix(verts);
      bool matched = false;
      for (auto const& t : candidates(sub)) {
        auto iso = isomorphisms(named_matrix(t), sub, true);
        if (!iso.empty()) {
          std::vector<int> emb(verts.size());
          for (std::size_t k = 0; k < verts.size(); ++k) {
            emb[k] = verts[iso[0](static_cast<int>(k))];
          }
          c.components.push_back(t);
          c.vertex_sets.push_back(verts);
          c.embeddings.push_back(std::move(emb));
          matched = true;
          break;
        }
      }
      if (!matched) {
        return Classification{};
      }
    }
    return c;
  }

  std::string Classification::str() const {
    if (!spherical) {
      return "not spherical";
    }
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      s += (i ? " + " : "") + components[i].str();
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact matrices and the geometric representation
  ////////////////////////////////////////////////////////////////////////

  ExactMatrix::ExactMatrix(ContextPtr ctx, std::size_t n)
      : _ctx(std::move(ctx)), _n(n), _deg(_ctx->degree()), _data(n * n * _deg) {}

  ExactMatrix ExactMatrix::identity(ContextPtr ctx, std::size_t n) {
    ExactMatrix m(std::move(ctx), n);
    for (std::size_t i = 0; i < n; ++i) {
      m.block(i, i)[0] = 1;
    }
    return m;
  }

  ExactReal ExactMatrix::at(std::size_t i, std::size_t j) const {
    exact::RatPoly p(block(i, j), block(i, j) + _deg);
    return ExactReal::from_poly(_ctx, p);
  }

  void ExactMatrix::set(std::size_t i, std::size_t j, ExactReal const& x) {
    if (x.context()->L() != _ctx->L()) {
      throw DomainError("ExactMatrix: field context mismatch");
    }
    std::copy(x.coeffs().begin(), x.coeffs().end(), block(i, j));
  }

  ExactMatrix ExactMatrix::operator*(ExactMatrix const& other) const {
    if (other._n != _n || other._ctx->L() != _ctx->L()) {
      throw DomainError("ExactMatrix: shape or context mismatch");
    }
    ExactMatrix r(_ctx, _n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        for (std::size_t k = 0; k < _n; ++k) {
          _ctx->fma_into(r.block(i, j), block(i, k), other.block(k, j));
        }
      }
    }
    return r;
  }

  ExactMatrix ExactMatrix::mul_generator(ExactMatrix const& gen, std::size_t i) const {
    // Column j of the product is col_j + gen(i, j) * col_i, column i is -col_i.
    ExactMatrix r(*this);
    for (std::size_t j = 0; j < _n; ++j) {
      if (j == i) {
        continue;
      }
      exact::Rational const* c = gen.block(i, j);
      bool zero = true;
      for (std::size_t d = 0; d < _deg; ++d) {
        zero = zero && c[d] == 0;
      }
      if (zero) {
        continue;
      }
      for (std::size_t row = 0; row < _n; ++row) {
        _ctx->fma_into(r.block(row, j), c, block(row, i));
      }
    }
    for (std::size_t row = 0; row < _n; ++row) {
      exact::Rational* b = r.block(row, i);
      for (std::size_t d = 0; d < _deg; ++d) {
        b[d] = -b[d];
      }
    }
    return r;
  }

  ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(_ctx, _n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        std::copy(block(i, j), block(i, j) + _deg, r.block(j, i));
      }
    }
    return r;
  }

  std::string ExactMatrix::key() const {
    std::string k;
    k.reserve(_data.size() * 2);
    for (auto const& q : _data) {
      mpz_srcptr num = q.get_num_mpz_t();
      mpz_srcptr den = q.get_den_mpz_t();
      bool unit_den = mpz_cmp_ui(den, 1) == 0;
      if (unit_den && mpz_cmp_si(num, -128) >= 0 && mpz_cmp_si(num, 127) <= 0) {
        k.push_back('\0');
        k.push_back(static_cast<char>(mpz_get_si(num)));
      } else if (mpz_fits_slong_p(num) && mpz_fits_slong_p(den)) {
        long v[2] = {mpz_get_si(num), mpz_get_si(den)};
        k.push_back('\1');
        k.append(reinterpret_cast<char const*>(v), sizeof(v));
      } else {
        k.push_back('\2');
        k += q.get_str(16);
        k.push_back('\0');
      }
    }
    return k;
  }

  ExactMatrix bilinear_form(CoxeterMatrix const& m, ContextPtr const& ctx) {
    ExactMatrix b(ctx, m.rank());
    ExactReal const minus_half = ExactReal::from_rational(ctx, Rational(-1, 2));
    for (std::size_t i = 0; i < m.rank(); ++i) {
      for (std::size_t j = 0; j < m.rank(); ++j) {
        b.set(i, j, minus_half * embed_two_cos(static_cast<unsigned>(m(i, j)), ctx));
      }
    }
    return b;
  }

  bool preserves_form(ExactMatrix const& g, ExactMatrix const& form) {
    return g.transpose() * form * g == form;
  }

  std::vector<CoxElement> geometric_generators(CoxeterMatrix const& m, ContextPtr const& ctx) {
    if (ctx->L() % m.lcm() != 0) {
      throw DomainError("field context L=" + std::to_string(ctx->L())
                        + " is not divisible by every Coxeter label");
    }
    std::vector<CoxElement> gens;
    std::size_t n = m.rank();
    for (std::size_t i = 0; i < n; ++i) {
      auto s = ExactMatrix::identity(ctx, n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) {
          s.set(i, i, ExactReal::from_rational(ctx, -1));
        } else {
          s.set(i, j, embed_two_cos(static_cast<unsigned>(m(i, j)), ctx));
        }
      }
      gens.push_back({std::move(s), 1, {static_cast<int>(i)}});
    }
    return gens;
  }

}  // namespace artin::coxeter
