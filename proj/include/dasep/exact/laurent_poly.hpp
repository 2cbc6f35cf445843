#pragma once

#include <dasep/exact/big_rational.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dasep {

/**
 * A Laurent polynomial in one indeterminate q with rational coefficients.
 *
 * Stored densely between the lowest and highest nonzero exponents; both end
 * coefficients are nonzero, and the zero polynomial has no coefficients at
 * all. Two polynomials are equal iff their representations are equal.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const BigRational& c, int exponent);
    static LaurentPoly q_pow(int exponent) { return monomial(BigRational(1), exponent); }
    static LaurentPoly q() { return q_pow(1); }
    static LaurentPoly from_terms(const std::map<int, BigRational>& terms);
    /// Coefficients c[k] of q^(low + k).
    static LaurentPoly from_dense(int low, std::vector<BigRational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_one() const;

    /// Lowest / highest exponent with a nonzero coefficient. Zero for the zero polynomial.
    int low() const { return low_; }
    int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& dense() const { return coeffs_; }
    BigRational coeff(int exponent) const;
    std::map<int, BigRational> terms() const;
    const BigRational& leading() const { return coeffs_.back(); }
    const BigRational& trailing() const { return coeffs_.front(); }

    /// Multiplication by q^k.
    LaurentPoly shifted(int k) const;
    /// The same polynomial shifted so that its lowest exponent is 0.
    LaurentPoly normalized() const { return shifted(-low_); }

    BigRational evaluate(const BigRational& q0) const;
    double evaluate(double q0) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const BigRational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
    friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    /// Arbitrary but fixed total order, for use as a map key.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    /// Human-readable form, e.g. "q^2 - 2 + q^-2".
    std::string to_string() const;

private:
    void trim();

    int low_ = 0;
    std::vector<BigRational> coeffs_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Integer power (k >= 0).
LaurentPoly pow(const LaurentPoly& p, int k);

/// Monic gcd in Q[q] of the polynomial parts of a and b (powers of q are
/// units in the Laurent ring and are ignored). gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in Q[q, 1/q]; std::nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient and remainder of ordinary polynomial division. Both arguments
/// must be polynomials (no negative exponents); b must be nonzero.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace dasep
