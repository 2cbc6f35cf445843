#pragma once

#include <dasep/exact/laurent_poly.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dasep {

/**
 * Laurent polynomial with machine-integer coefficients.
 *
 * The q-independent data of the pipeline (pairings of pure words, entries of
 * word matrices in the fundamental representation and its tensor square) all
 * have small integer coefficients, so they are stored in this compact form
 * and lifted into the working scalar field on demand. Arithmetic throws
 * Error on int64 overflow instead of wrapping.
 */
class IntLaurent {
public:
    IntLaurent() = default;
    IntLaurent(std::int64_t c);  // NOLINT(google-explicit-constructor)

    static IntLaurent monomial(std::int64_t c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& dense() const { return coeffs_; }
    std::int64_t coeff(int exponent) const;

    IntLaurent shifted(int k) const;
    LaurentPoly to_laurent() const;

    IntLaurent operator-() const;
    IntLaurent& operator+=(const IntLaurent& rhs);
    IntLaurent& operator-=(const IntLaurent& rhs);
    friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
    friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
    friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
    IntLaurent& operator*=(const IntLaurent& rhs) { return *this = *this * rhs; }

    /// Adds c * q^k * rhs in place.
    void add_scaled(const IntLaurent& rhs, std::int64_t c, int k);

    friend bool operator==(const IntLaurent& a, const IntLaurent& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntLaurent& a, const IntLaurent& b) { return !(a == b); }

    std::string to_string() const { return to_laurent().to_string(); }

private:
    void trim();

    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

inline bool is_zero(const IntLaurent& p) { return p.is_zero(); }

}  // namespace dasep
