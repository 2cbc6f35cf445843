#pragma once

#include <dasep/exact/laurent_poly.hpp>

#include <ostream>
#include <string>

namespace dasep {

/**
 * An element of Q(q), kept in canonical form:
 *   - the denominator is a monic polynomial with nonzero constant term,
 *   - numerator and denominator are coprime,
 *   - zero is 0/1.
 * Any power of q is absorbed into the (Laurent) numerator, so equality is
 * structural.
 */
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when den is zero.
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction q() { return RationalFunction(LaurentPoly::q()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }

    /// Throws DivisionByZero for the zero function.
    RationalFunction inverse() const;

    /// Exact value at q = q0; throws PoleAtPoint when the reduced
    /// denominator vanishes there (or q0 = 0 with negative powers present).
    BigRational evaluate_at(const BigRational& q0) const;
    double evaluate_at(double q0) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Canonical {};
    RationalFunction(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace dasep
