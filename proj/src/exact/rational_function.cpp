#include <dasep/exact/rational_function.hpp>

#include <dasep/errors.hpp>

namespace dasep {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Move the q-power of the denominator into the numerator.
    num_ = num_.shifted(-den_.low());
    den_ = den_.normalized();
    if (!den_.is_constant()) {
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    const BigRational lead = den_.leading();
    if (lead != 1) {
        const BigRational inv = BigRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

BigRational RationalFunction::evaluate_at(const BigRational& q0) const {
    if (q0.is_zero() && (num_.low() < 0))
        throw PoleAtPoint("negative power of q evaluated at q = 0");
    const BigRational d = den_.evaluate(q0);
    if (d.is_zero()) throw PoleAtPoint("denominator " + den_.to_string() + " vanishes at q = " + dasep::to_string(q0));
    return num_.evaluate(q0) / d;
}

double RationalFunction::evaluate_at(double q0) const {
    return num_.evaluate(q0) / den_.evaluate(q0);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (!den_.is_one()) canonicalize();
        else if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
    if (den_.is_one() && rhs.den_.is_one()) {
        num_ *= rhs.num_;
        return *this;
    }
    // Cross-cancel before multiplying so intermediate degrees stay small.
    const LaurentPoly g1 = den_.is_one() ? LaurentPoly(1) : gcd(rhs.num_, den_);
    const LaurentPoly g2 = rhs.den_.is_one() ? LaurentPoly(1) : gcd(num_, rhs.den_);
    LaurentPoly a = g2.is_one() ? num_ : *divide_exact(num_, g2);
    LaurentPoly b = g1.is_one() ? den_ : *divide_exact(den_, g1);
    LaurentPoly c = g1.is_one() ? rhs.num_ : *divide_exact(rhs.num_, g1);
    LaurentPoly d = g2.is_one() ? rhs.den_ : *divide_exact(rhs.den_, g2);
    num_ = a * c;
    den_ = b * d;
    const BigRational lead = den_.leading();
    if (lead != 1) {
        const BigRational inv = BigRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace dasep
