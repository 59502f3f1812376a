#pragma once

#include <string>
#include <vector>

#include "eqc/rational.hpp"

namespace eqc {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// The polynomial is monic of degree phi(m).
const std::vector<Integer>& cyclotomic_poly(int m);

/// Element of the cyclotomic field Q(zeta_m), stored as a rational vector of
/// length m in the power basis 1, zeta, ..., zeta^{m-1} and kept canonically
/// reduced modulo the m-th cyclotomic polynomial. After reduction only the
/// first phi(m) coordinates can be nonzero, so equality of values at the same
/// conductor is coordinate-wise equality. Values at different conductors
/// compare and combine through the lcm embedding zeta_m = zeta_M^{M/m}.
class Cyc {
  public:
    /// Zero at conductor 1.
    Cyc() : m_(1), c_(1, Rational(0)) {}

    /// Rational constant at conductor 1.
    explicit Cyc(Rational q) : m_(1), c_(1, std::move(q)) {}
    explicit Cyc(long n) : Cyc(Rational(n)) {}

    /// Reduces an arbitrary coefficient vector (exponent i = zeta_m^i; any
    /// length) modulo the m-th cyclotomic polynomial. Throws InvalidInput for
    /// m < 1.
    Cyc(int m, std::vector<Rational> raw);

    /// zeta_m^k.
    static Cyc zeta(int m, long k = 1);

    int conductor() const { return m_; }

    /// Canonical coefficients; size m, zero at indices >= phi(m).
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    /// True when the value lies in Q.
    bool is_rational() const;

    /// The value as a rational. Throws NotRational otherwise.
    Rational as_rational() const;

    /// Reinterpreted at conductor M, where m | M. Throws InvalidInput else.
    Cyc rescaled(int M) const;

    /// Complex conjugate (zeta -> zeta^{-1}).
    Cyc conj() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator*=(const Rational& q);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator*(Cyc a, const Rational& q) { return a *= q; }
    friend Cyc operator*(const Rational& q, Cyc a) { return a *= q; }

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Strict total order on (conductor-aligned) canonical coefficients.
    /// Used for deterministic sorting, not meaningful as a numeric order.
    static int compare(const Cyc& a, const Cyc& b);

    /// Display form, e.g. "1/2", "z6", "1 - 2*z8^3".
    std::string str() const;

  private:
    void reduce_(std::vector<Rational> raw);

    int m_;
    std::vector<Rational> c_;
};

}  // namespace eqc
