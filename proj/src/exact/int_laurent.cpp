#include <dasep/exact/int_laurent.hpp>

#include <dasep/errors.hpp>

#include <algorithm>

namespace dasep {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("IntLaurent: coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("IntLaurent: coefficient overflow");
    return r;
}

}  // namespace

IntLaurent::IntLaurent(std::int64_t c) {
    if (c != 0) coeffs_.push_back(c);
}

IntLaurent IntLaurent::monomial(std::int64_t c, int exponent) {
    IntLaurent p(c);
    if (c != 0) p.low_ = exponent;
    return p;
}

std::int64_t IntLaurent::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

IntLaurent IntLaurent::shifted(int k) const {
    IntLaurent p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

LaurentPoly IntLaurent::to_laurent() const {
    std::vector<BigRational> c;
    c.reserve(coeffs_.size());
    for (std::int64_t x : coeffs_) c.emplace_back(x);
    return LaurentPoly::from_dense(low_, std::move(c));
}

IntLaurent IntLaurent::operator-() const {
    IntLaurent p = *this;
    for (auto& c : p.coeffs_) c = checked_mul(c, -1);
    return p;
}

void IntLaurent::add_scaled(const IntLaurent& rhs, std::int64_t c, int k) {
    if (rhs.is_zero() || c == 0) return;
    const int rlow = rhs.low_ + k;
    const int rhigh = rhs.high() + k;
    if (is_zero()) {
        low_ = rlow;
        coeffs_.assign(rhs.coeffs_.size(), 0);
    } else {
        const int nlow = std::min(low_, rlow);
        const int nhigh = std::max(high(), rhigh);
        if (nlow < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - nlow), 0);
        low_ = nlow;
        coeffs_.resize(static_cast<std::size_t>(nhigh - nlow + 1), 0);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        auto& dst = coeffs_[static_cast<std::size_t>(rlow - low_) + i];
        dst = checked_add(dst, checked_mul(c, rhs.coeffs_[i]));
    }
    trim();
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& rhs) {
    add_scaled(rhs, 1, 0);
    return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& rhs) {
    add_scaled(rhs, -1, 0);
    return *this;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
    IntLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    r.trim();
    return r;
}

void IntLaurent::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
}

}  // namespace dasep
