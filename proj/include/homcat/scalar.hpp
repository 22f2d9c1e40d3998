#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcat {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Ground field: Q or F_p.
struct FieldSpec {
    std::uint64_t p = 0;  // 0 means Q

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p);
    bool is_prime() const { return p != 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
    static FieldSpec parse(const std::string& s);  // "Q" or "Fp:7"
};

// Exact field element. Over F_p the residue is kept in r_; over Q in q_.
// A scalar built without a modulus (p = 0) adopts the modulus of the other
// operand in mixed arithmetic, so integer literals work in either field.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(int v) : q_(v) {}
    explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    Scalar(long num, long den);

    static Scalar in(const FieldSpec& f, const Scalar& s);
    static Scalar parse(const std::string& s, const FieldSpec& f = {});

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
    explicit operator bool() const { return !is_zero(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "num/den" (or "num"); residues over F_p print as integers in [0, p).
    std::string str() const;
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    void lift(std::uint64_t p);
    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace homcat
