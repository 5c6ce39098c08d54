#include "zdinf/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace zdinf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class m = v % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 62) || !is_prime(p)) throw NotPrime("field characteristic " + std::to_string(p) + " is not a supported prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(FieldSpec field, long long value) : field_(field) {
    if (field_.is_rational())
        q_ = mpq_class(static_cast<signed long>(value));
    else
        r_ = reduce_signed(value, field_.characteristic());
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value) {
    Scalar s;
    s.field_ = field;
    if (field.is_rational()) {
        s.q_ = value;
        s.q_.canonicalize();
        return s;
    }
    const std::uint64_t p = field.characteristic();
    std::uint64_t num = reduce_mpz(value.get_num(), p);
    std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes in " + field.to_string());
    s.r_ = mulmod(num, powmod(den, p - 2, p), p);
    return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
    mpq_class value;
    if (value.set_str(std::string(text), 10) != 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (value.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return from_rational(field, value);
}

Scalar Scalar::random(FieldSpec field, std::mt19937_64& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<int> dist(-3, 3);
        return Scalar(field, dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
    Scalar s(field, 0);
    s.r_ = dist(rng);
    return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("mixing scalars over " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        const std::uint64_t p = field_.characteristic();
        r_ = (r_ + o.r_) % p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        q_ -= o.q_;
    } else {
        const std::uint64_t p = field_.characteristic();
        r_ = (r_ + p - o.r_) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = mulmod(r_, o.r_, field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

}  // namespace zdinf
