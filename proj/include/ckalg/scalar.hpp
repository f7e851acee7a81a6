// Coefficient ring: Laurent polynomials in the deformation parameter over
// exact rationals, either exact or reduced mod lambda^{K+1}.
#pragma once

#include "ckalg/rational.hpp"

#include <map>
#include <string>

namespace ckalg {

// Mode of a scalar: kExact allows any integer lambda-exponent (Laurent);
// K >= 0 restricts exponents to 0..K, products reduced mod lambda^{K+1}.
constexpr int kExact = -1;

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(int mode) : mode_(mode) {}
    Scalar(int mode, const Rat& r) : mode_(mode) { set(0, r); }

    static Scalar zero(int mode) { return Scalar(mode); }
    static Scalar one(int mode) { return Scalar(mode, Rat(1)); }
    // r * lambda^exp
    static Scalar lambda_pow(int mode, int exp, const Rat& r = Rat(1));

    int mode() const { return mode_; }
    bool truncated() const { return mode_ >= 0; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    // Coefficient of lambda^exp (zero if absent).
    Rat at(int exp) const;
    void set(int exp, const Rat& r);

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar operator-() const;
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    Scalar& scale(const Rat& r);            // multiply by a rational
    Scalar& shift(int k);                   // multiply by lambda^k (exact mode only if k<0 would underflow)
    Scalar& divide(const Rat& r);

    // Lowest/highest lambda-exponent; only valid when nonzero.
    int min_exp() const;
    int max_exp() const;

    // Reduce to mode K (drop exponents > K); requires no negative exponents.
    Scalar reduced(int k) const;

    bool operator==(const Scalar& o) const {
        return mode_ == o.mode_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return coeffs_ < o.coeffs_; }

    std::string to_string() const;  // e.g. "1/2*L^-1 - 1/2*L"

private:
    void check_mode(const Scalar& o) const;
    void normalize();

    int mode_ = kExact;
    std::map<int, Rat> coeffs_;  // exponent -> reduced rational, no zeros
};

}  // namespace ckalg
