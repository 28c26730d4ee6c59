#include "artin/exact_arith.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "artin/errors.hpp"

namespace artin::exact {

  namespace {

    void trim(RatPoly& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    RatPoly mul(RatPoly const& a, RatPoly const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      RatPoly c(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          c[i + j] += a[i] * b[j];
        }
      }
      trim(c);
      return c;
    }

    RatPoly sub(RatPoly a, RatPoly const& b) {
      if (a.size() < b.size()) {
        a.resize(b.size());
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
      }
      trim(a);
      return a;
    }

    // Quotient and remainder of a by b (b non-zero).
    std::pair<RatPoly, RatPoly> divmod(RatPoly a, RatPoly const& b) {
      trim(a);
      if (a.size() < b.size()) {
        return {{}, a};
      }
      RatPoly q(a.size() - b.size() + 1);
      for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k] == 0) {
          continue;
        }
        Rational f = a[k] / b.back();
        std::size_t shift = k - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[shift + j] -= f * b[j];
        }
      }
      trim(q);
      trim(a);
      return {q, a};
    }

    RatPoly cyclotomic(unsigned N) {
      // z^N - 1 divided by all Phi_d with d | N, d < N.
      RatPoly p(N + 1);
      p[0] = -1;
      p[N] = 1;
      for (unsigned d = 1; d < N; ++d) {
        if (N % d == 0) {
          p = divmod(p, cyclotomic(d)).first;
        }
      }
      return p;
    }

  }  // namespace

  RatPoly chebyshev_c(unsigned k) {
    RatPoly prev{Rational(2)};
    if (k == 0) {
      return prev;
    }
    RatPoly cur{Rational(0), Rational(1)};
    RatPoly const y{Rational(0), Rational(1)};
    for (unsigned i = 1; i < k; ++i) {
      RatPoly next = sub(mul(y, cur), prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  RatPoly minpoly_two_cos(unsigned L) {
    if (L == 0) {
      throw DomainError("minpoly_two_cos: L must be positive");
    }
    if (L == 1) {
      return {Rational(2), Rational(1)};  // 2cos(pi) = -2
    }
    RatPoly phi = cyclotomic(2 * L);
    std::size_t const d = (phi.size() - 1) / 2;
    RatPoly result{phi[d]};
    for (std::size_t k = 1; k <= d; ++k) {
      RatPoly term = chebyshev_c(static_cast<unsigned>(k));
      for (auto& c : term) {
        c *= phi[d + k];
      }
      if (result.size() < term.size()) {
        result.resize(term.size());
      }
      for (std::size_t i = 0; i < term.size(); ++i) {
        result[i] += term[i];
      }
    }
    trim(result);
    return result;
  }

  double evaluate(RatPoly const& p, double x) {
    double acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) {
      acc = acc * x + p[k].get_d();
    }
    return acc;
  }

  FieldContext::FieldContext(unsigned L)
      : _L(L),
        _minpoly(minpoly_two_cos(L)),
        _degree(_minpoly.size() - 1),
        _theta(2.0 * std::cos(std::numbers::pi / static_cast<double>(L))) {
    for (std::size_t k = 0; k + 2 <= _degree; ++k) {
      RatPoly x(_degree + k + 1);
      x.back() = 1;
      _high_powers.push_back(divmod(x, _minpoly).second);
      _high_powers.back().resize(_degree);
    }
  }

  void FieldContext::mul_into(Rational const* a, Rational const* b, Rational* out) const {
    for (std::size_t i = 0; i < _degree; ++i) {
      out[i] = 0;
    }
    fma_into(out, a, b);
  }

  void FieldContext::fma_into(Rational* acc, Rational const* a, Rational const* b) const {
    if (_degree == 1) {
      acc[0] += a[0] * b[0];
      return;
    }
    Rational t;
    for (std::size_t i = 0; i < _degree; ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _degree; ++j) {
        if (b[j] == 0) {
          continue;
        }
        t = a[i] * b[j];
        std::size_t k = i + j;
        if (k < _degree) {
          acc[k] += t;
        } else {
          RatPoly const& r = _high_powers[k - _degree];
          for (std::size_t m = 0; m < _degree; ++m) {
            if (r[m] != 0) {
              acc[m] += t * r[m];
            }
          }
        }
      }
    }
  }

  ExactReal::ExactReal(ContextPtr ctx) : _ctx(std::move(ctx)), _coeffs(_ctx->degree()) {}

  ExactReal ExactReal::from_rational(ContextPtr ctx, Rational const& q) {
    ExactReal r(std::move(ctx));
    r._coeffs[0] = q;
    r._coeffs[0].canonicalize();
    return r;
  }

  ExactReal ExactReal::theta(ContextPtr ctx) {
    return from_poly(std::move(ctx), {Rational(0), Rational(1)});
  }

  ExactReal ExactReal::from_poly(ContextPtr ctx, RatPoly const& p) {
    ExactReal r(ctx);
    RatPoly rem = divmod(p, ctx->minpoly()).second;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      r._coeffs[i] = rem[i];
    }
    return r;
  }

  void ExactReal::check_same_context(ExactReal const& other) const {
    if (_ctx != other._ctx && _ctx->L() != other._ctx->L()) {
      throw DomainError("ExactReal: field context mismatch (L=" + std::to_string(_ctx->L())
                        + " vs L=" + std::to_string(other._ctx->L()) + ")");
    }
  }

  bool ExactReal::is_zero() const {
    for (auto const& c : _coeffs) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  ExactReal ExactReal::operator-() const {
    ExactReal r(*this);
    for (auto& c : r._coeffs) {
      c = -c;
    }
    return r;
  }

  ExactReal& ExactReal::operator+=(ExactReal const& other) {
    check_same_context(other);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] += other._coeffs[i];
    }
    return *this;
  }

  ExactReal& ExactReal::operator-=(ExactReal const& other) {
    check_same_context(other);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] -= other._coeffs[i];
    }
    return *this;
  }

  ExactReal& ExactReal::operator*=(ExactReal const& other) {
    check_same_context(other);
    std::vector<Rational> out(_coeffs.size());
    _ctx->mul_into(_coeffs.data(), other._coeffs.data(), out.data());
    _coeffs = std::move(out);
    return *this;
  }

  ExactReal ExactReal::inverse() const {
    if (is_zero()) {
      throw DomainError("ExactReal: division by zero");
    }
    // Extended Euclid: s*a + t*minpoly = g with g a non-zero constant.
    RatPoly a(_coeffs.begin(), _coeffs.end());
    trim(a);
    RatPoly r0 = _ctx->minpoly(), r1 = a;
    RatPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
      auto [q, r2] = divmod(r0, r1);
      RatPoly s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a non-zero constant since the minimal polynomial is irreducible.
    for (auto& c : s1) {
      c /= r1[0];
    }
    return from_poly(_ctx, s1);
  }

  ExactReal& ExactReal::operator/=(ExactReal const& other) {
    check_same_context(other);
    return *this *= other.inverse();
  }

  bool operator==(ExactReal const& a, ExactReal const& b) {
    a.check_same_context(b);
    return a._coeffs == b._coeffs;
  }

  double ExactReal::to_double() const {
    RatPoly p(_coeffs.begin(), _coeffs.end());
    return evaluate(p, _ctx->theta());
  }

  std::string ExactReal::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double());
    return buf;
  }

  ExactReal embed_two_cos(unsigned m, ContextPtr const& ctx) {
    if (m == 0 || ctx->L() % m != 0) {
      throw DomainError("embed_two_cos: " + std::to_string(m) + " does not divide L="
                        + std::to_string(ctx->L()));
    }
    return ExactReal::from_poly(ctx, chebyshev_c(ctx->L() / m));
  }

}  // namespace artin::exact
