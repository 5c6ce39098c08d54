#include "zdinf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace zdinf {

Poly::Poly(FieldSpec field, Vec coefficients) : field_(field), coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Scalar& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative exponent in k[x]");
    Vec coeffs = zero_vec(c.field(), static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Poly(c.field(), std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Poly::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Scalar Poly::coefficient(int k) const {
    if (k < 0 || k > degree()) return Scalar::zero(field_);
    return coeffs_[static_cast<std::size_t>(k)];
}

bool Poly::is_homogeneous() const { return is_zero() || valuation() == degree(); }

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
    Vec coeffs = zero_vec(field_, std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs[k] += o.coeffs_[k];
    return Poly(field_, std::move(coeffs));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(field_);
    Vec coeffs = zero_vec(field_, coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly(field_, std::move(coeffs));
}

Poly Poly::pow(unsigned e) const {
    Poly result(field_, {Scalar::one(field_)});
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        out << (first ? "" : " + ") << coeffs_[k].to_string();
        if (k > 0) out << "*x^" << k;
        first = false;
    }
    return out.str();
}

}  // namespace zdinf
