#pragma once

// Exact arithmetic over the rationals and over cyclotomic fields Q(zeta_N).
//
// An element of Q(zeta_N) is stored in the power basis 1, z, ..., z^(phi(N)-1)
// where z is the fixed primitive N-th root of unity exp(2 pi i / N), reduced
// modulo the N-th cyclotomic polynomial. Elements of different conductors are
// combined in Q(zeta_lcm) through zeta_M -> zeta_N^(N/M).

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gi {

using Rational = mpq_class;

int euler_phi(int n);

/// Integer coefficients of Phi_N, lowest degree first.
const std::vector<Rational>& cyclotomic_polynomial(int n);

class CycloScalar {
public:
    CycloScalar();
    CycloScalar(int value); // NOLINT(google-explicit-constructor)
    CycloScalar(long value); // NOLINT(google-explicit-constructor)
    CycloScalar(Rational value); // NOLINT(google-explicit-constructor)

    /// Builds sum_k coeffs[k] * zeta_N^k; `coeffs` may be longer than phi(N),
    /// it is reduced.
    static CycloScalar from_polynomial(int conductor, std::span<const Rational> coeffs);

    int conductor() const { return conductor_; }
    std::span<const Rational> coefficients() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1; }
    /// Only valid when is_rational().
    const Rational& rational_value() const;

    /// The same element written in Q(zeta_N); N must be a multiple of conductor().
    CycloScalar promoted(int n) const;

    CycloScalar inv() const;
    CycloScalar pow(long exponent) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& rhs);
    CycloScalar& operator-=(const CycloScalar& rhs);
    CycloScalar& operator*=(const CycloScalar& rhs);
    CycloScalar& operator/=(const CycloScalar& rhs);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

    /// "a0 + a1*z + a2*z^2@N"; conductor suffix omitted for rationals.
    std::string to_string() const;
    static CycloScalar parse(std::string_view text);

private:
    CycloScalar(int conductor, std::vector<Rational> coeffs);
    void normalize();

    int conductor_ = 1;
    // empty for zero, so zero entries of a matrix own no storage
    std::vector<Rational> coeffs_;
};

/// The fixed primitive N-th root of unity exp(2 pi i / N).
CycloScalar zeta(int n);

std::ostream& operator<<(std::ostream& os, const CycloScalar& x);

} // namespace gi
