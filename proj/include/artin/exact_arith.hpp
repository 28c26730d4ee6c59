#pragma once

// Exact arithmetic in the real cyclotomic field Q(theta), theta = 2cos(pi/L).
//
// Every element is stored as its reduced residue modulo the minimal
// polynomial of theta, with rational coefficients in lowest terms, so
// structural equality is field equality.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace artin::exact {

  using Rational = mpq_class;

  //! Dense polynomial with rational coefficients; index k holds x^k.
  //! Trailing zero coefficients are trimmed, the zero polynomial is empty.
  using RatPoly = std::vector<Rational>;

  //! Minimal polynomial of 2cos(pi/L) over Q (monic).
  RatPoly minpoly_two_cos(unsigned L);

  //! The k-th Chebyshev-style polynomial C_k with z^k + z^-k = C_k(z + 1/z).
  RatPoly chebyshev_c(unsigned k);

  //! Evaluates p at x in double precision (Horner).
  double evaluate(RatPoly const& p, double x);

  class FieldContext {
   public:
    explicit FieldContext(unsigned L);

    static std::shared_ptr<FieldContext const> make(unsigned L) {
      return std::make_shared<FieldContext const>(L);
    }

    unsigned L() const noexcept { return _L; }
    RatPoly const& minpoly() const noexcept { return _minpoly; }
    std::size_t degree() const noexcept { return _degree; }

    //! Floating-point value of theta.
    double theta() const noexcept { return _theta; }

    //! Residue of x^(degree + k) modulo the minimal polynomial, 0 <= k <= degree - 2.
    RatPoly const& high_power(std::size_t k) const { return _high_powers[k]; }

    // Raw coefficient kernels on arrays of length degree(). Used by the
    // matrix code to avoid per-entry allocation.
    void mul_into(Rational const* a, Rational const* b, Rational* out) const;
    void fma_into(Rational* acc, Rational const* a, Rational const* b) const;

   private:
    unsigned _L;
    RatPoly _minpoly;
    std::size_t _degree;
    double _theta;
    std::vector<RatPoly> _high_powers;
  };

  using ContextPtr = std::shared_ptr<FieldContext const>;

  class ExactReal {
   public:
    //! Zero in the given field.
    explicit ExactReal(ContextPtr ctx);

    static ExactReal from_rational(ContextPtr ctx, Rational const& q);
    static ExactReal theta(ContextPtr ctx);
    //! Reduces an arbitrary polynomial in theta into canonical form.
    static ExactReal from_poly(ContextPtr ctx, RatPoly const& p);

    ContextPtr const& context() const noexcept { return _ctx; }
    std::vector<Rational> const& coeffs() const noexcept { return _coeffs; }

    bool is_zero() const;
    ExactReal inverse() const;
    double to_double() const;
    //! Diagnostic rendering with 12 significant digits.
    std::string to_string() const;

    ExactReal operator-() const;
    ExactReal& operator+=(ExactReal const& other);
    ExactReal& operator-=(ExactReal const& other);
    ExactReal& operator*=(ExactReal const& other);
    ExactReal& operator/=(ExactReal const& other);

    friend ExactReal operator+(ExactReal a, ExactReal const& b) { return a += b; }
    friend ExactReal operator-(ExactReal a, ExactReal const& b) { return a -= b; }
    friend ExactReal operator*(ExactReal a, ExactReal const& b) { return a *= b; }
    friend ExactReal operator/(ExactReal a, ExactReal const& b) { return a /= b; }

    //! Field equality; throws DomainError on a context mismatch.
    friend bool operator==(ExactReal const& a, ExactReal const& b);

   private:
    void check_same_context(ExactReal const& other) const;

    ContextPtr _ctx;
    std::vector<Rational> _coeffs;
  };

  //! 2cos(pi/m) as an element of the field; requires m | L.
  ExactReal embed_two_cos(unsigned m, ContextPtr const& ctx);

}  // namespace artin::exact
