#include "homcat/scalar.hpp"

#include <cctype>

namespace homcat {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s && comp; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!homcat::is_prime(p)) throw Error("InvalidField", std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p = p;
    return f;
}

std::string FieldSpec::str() const { return p ? "Fp:" + std::to_string(p) : "Q"; }

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw Error("InvalidField", s);
        return prime(std::stoull(num));
    }
    throw Error("InvalidField", s);
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw Error("DivisionByZero", "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

void Scalar::lift(std::uint64_t p) {
    if (p_ == p || p == 0) return;
    if (p_ != 0) throw Error("FieldMismatch", "F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
    const std::uint64_t den = reduce(q_.get_den(), p);
    if (den == 0) throw Error("DivisionByZero", "denominator vanishes mod " + std::to_string(p));
    r_ = mulmod(reduce(q_.get_num(), p), powmod(den, p - 2, p), p);
    q_ = 0;
    p_ = p;
}

Scalar Scalar::in(const FieldSpec& f, const Scalar& s) {
    Scalar r = s;
    r.lift(f.p);
    return r;
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& f) {
    // integer or integer/integer, optional leading sign, nothing else
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error("InvalidScalar", "not an exact rational literal: '" + s + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
    if (d == 0) throw Error("InvalidScalar", "zero denominator in '" + s + "'");
    Scalar r{mpq_class(n, d)};
    r.lift(f.p);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_) r.r_ = r_ ? p_ - r_ : 0;
    else r.q_ = -q_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (p_ || o.p_) {
        if (p_ != o.p_) {
            if (!p_) lift(o.p_);
            else if (o.p_) lift(o.p_);  // throws
            else return *this += in(FieldSpec{p_}, o);
        }
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    q_ += o.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (p_ || o.p_) {
        if (p_ != o.p_) {
            if (!p_) lift(o.p_);
            else if (o.p_) lift(o.p_);
            else return *this *= in(FieldSpec{p_}, o);
        }
        r_ = mulmod(r_, o.r_, p_);
        return *this;
    }
    q_ *= o.q_;
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    Scalar r = *this;
    if (p_) r.r_ = powmod(r_, p_ - 2, p_);
    else r.q_ = 1 / q_;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (p_ && !o.p_) return *this *= in(FieldSpec{p_}, o).inv();
    return *this *= o.inv();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ == o.p_) return p_ ? r_ == o.r_ : q_ == o.q_;
    if (!p_) return in(FieldSpec{o.p_}, *this) == o;
    if (!o.p_) return *this == in(FieldSpec{p_}, o);
    return false;
}

std::string Scalar::str() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

}  // namespace homcat
