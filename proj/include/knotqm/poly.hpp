#pragma once

// Exact Laurent-polynomial arithmetic in the skein variable A, rational
// functions of it, and numeric evaluation at a unit-modulus phase.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace knotqm {

using Int = mpz_class;

// Numeric evaluation point: theta = pi / (2(k+2)), A = e^{i theta},
// d = -2 cos(pi/(k+2)).  Default k = 1000 keeps d far from the Gram
// degeneracies d = 0, +-1.
struct NumericParams {
    double k = 1000.0;
    double theta = 0.0;
    std::complex<double> A_value;
    double d_value = 0.0;

    static NumericParams from_k(double k);
    static NumericParams from_theta(double theta);
};

class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly monomial(long exp, Int coeff = Int(1));
    static LaurentPoly variable() { return monomial(1); }
    // d = -A^2 - A^-2
    static LaurentPoly loop_value();

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Int>& terms() const { return terms_; }
    long min_exp() const;  // throws on zero
    long max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    LaurentPoly pow(long n) const;  // n >= 0
    // exponent negation A -> A^-1 (a ring involution)
    LaurentPoly mirror() const;
    // multiply by A^shift
    LaurentPoly shifted(long shift) const;

    // Exact division; throws std::domain_error when not divisible.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    std::complex<double> eval(const NumericParams& p) const;

    std::string str(const std::string& var = "A") const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

  private:
    // canonical: no zero coefficients stored
    std::map<long, Int> terms_;
    void set(long e, Int c);
    friend LaurentPoly poly_gcd(const LaurentPoly&, const LaurentPoly&);
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly substitute_mirror(const LaurentPoly& p);
std::complex<double> eval_at(const LaurentPoly& p, const NumericParams& params);

// gcd up to monomial factors; result has min_exp 0 and positive leading coeff
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

class RationalFunc {
  public:
    RationalFunc() : num_(0), den_(1) {}
    RationalFunc(long c) : num_(c), den_(1) {}
    RationalFunc(const LaurentPoly& n) : num_(n), den_(1) {}
    RationalFunc(const LaurentPoly& n, const LaurentPoly& d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly(1); }

    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator-() const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
    bool operator==(const RationalFunc& o) const;
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }
    bool operator<(const RationalFunc& o) const;

    std::complex<double> eval(const NumericParams& p) const;
    std::string str() const;

  private:
    LaurentPoly num_, den_;
    void normalize();
};

RationalFunc rational_normalize(const RationalFunc& r);

// Chebyshev-type quantum dimensions: D_{-1}=0, D_0=1, D_{n+1} = d D_n - D_{n-1}.
LaurentPoly delta_poly(int n);

// Pretty-print a Jones polynomial (given in A with all exponents divisible
// by 4) in the variable q via A^4 -> q^-1; falls back to q^(1/4) powers.
std::string jones_q_string(const LaurentPoly& jones_in_A);

}  // namespace knotqm
