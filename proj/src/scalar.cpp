#include "ckalg/scalar.hpp"

#include <sstream>

namespace ckalg {

Scalar Scalar::lambda_pow(int mode, int exp, const Rat& r) {
    Scalar s(mode);
    s.set(exp, r);
    return s;
}

Rat Scalar::at(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void Scalar::set(int exp, const Rat& r) {
    if (truncated() && (exp < 0 || exp > mode_)) {
        if (exp < 0) throw input_error("negative lambda exponent in truncated scalar");
        if (r != 0 && exp > mode_) return;  // reduced mod lambda^{K+1}
    }
    if (r == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = r;
}

void Scalar::check_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw input_error("scalar mode mismatch");
}

void Scalar::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        bool drop = it->second == 0 || (truncated() && it->first > mode_);
        if (truncated() && it->first < 0 && it->second != 0)
            throw input_error("negative lambda exponent in truncated scalar");
        it = drop ? coeffs_.erase(it) : std::next(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_mode(o);
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(e, c);
        if (!fresh) it->second += c;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_mode(o);
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.try_emplace(e, -c);
        if (!fresh) it->second -= c;
    }
    normalize();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r(mode_);
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_mode(b);
    Scalar r(a.mode_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            int e = ea + eb;
            if (r.truncated() && e > r.mode_) continue;
            auto [it, fresh] = r.coeffs_.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

Scalar& Scalar::scale(const Rat& r) {
    if (r == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_) c *= r;
    return *this;
}

Scalar& Scalar::shift(int k) {
    if (k == 0 || coeffs_.empty()) return *this;
    std::map<int, Rat> out;
    for (auto& [e, c] : coeffs_) {
        int ne = e + k;
        if (truncated()) {
            if (ne < 0) throw input_error("negative lambda exponent in truncated scalar");
            if (ne > mode_) continue;
        }
        out.emplace(ne, std::move(c));
    }
    coeffs_ = std::move(out);
    return *this;
}

Scalar& Scalar::divide(const Rat& r) {
    if (r == 0) throw input_error("division by zero rational");
    return scale(Rat(denominator(r), numerator(r)));
}

int Scalar::min_exp() const {
    if (coeffs_.empty()) throw input_error("min_exp of zero scalar");
    return coeffs_.begin()->first;
}

int Scalar::max_exp() const {
    if (coeffs_.empty()) throw input_error("max_exp of zero scalar");
    return coeffs_.rbegin()->first;
}

Scalar Scalar::reduced(int k) const {
    Scalar r(k);
    for (const auto& [e, c] : coeffs_) {
        if (e < 0) throw input_error("cannot reduce scalar with lambda pole");
        if (e <= k) r.coeffs_[e] = c;
    }
    return r;
}

std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        const Rat a = (!first && c < 0) ? Rat(-c) : c;
        if (first && c < 0) os << "-";
        first = false;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (mag != 1 || e == 0) {
            os << numerator(mag).str();
            if (denominator(mag) != 1) os << "/" << denominator(mag).str();
            if (e != 0) os << "*";
        }
        if (e == 1)
            os << "L";
        else if (e != 0)
            os << "L^" << e;
    }
    return os.str();
}

}  // namespace ckalg
