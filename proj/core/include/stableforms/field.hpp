#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stableforms {

enum class FieldKind { Rationals, QuadExt };

/// Coefficient field descriptor: Q, or the real quadratic extension Q(sqrt(d))
/// with d >= 2 squarefree.
struct FieldDesc {
    FieldKind kind = FieldKind::Rationals;
    unsigned radicand = 0;  // d; 0 when kind == Rationals

    static FieldDesc rationals() { return {}; }
    static FieldDesc quad_ext(unsigned d);

    bool operator==(const FieldDesc&) const = default;
};

/// Smallest common field of a and b. Throws if both are distinct quadratic
/// extensions (mixed radicands are out of scope).
FieldDesc join_fields(const FieldDesc& a, const FieldDesc& b);

std::string to_string(const FieldDesc& f);

/// Parses "q" or "qsqrt:D".
FieldDesc field_from_string(const std::string& s);

/// Exact field element a + b*sqrt(d). b is identically zero over Q.
/// Both parts are kept canonical (reduced, positive denominator).
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(long value) : rat_(value) {}
    explicit Scalar(const mpq_class& value) : rat_(value) { canonicalize(rat_); }
    Scalar(mpq_class rational_part, mpq_class radical_part, FieldDesc field);

    static Scalar ratio(long num, long den);
    /// coeff * sqrt(d)
    static Scalar radical(const mpq_class& coeff, unsigned d);

    const mpq_class& rational_part() const { return rat_; }
    const mpq_class& radical_part() const { return rad_; }
    const FieldDesc& field() const { return field_; }

    bool is_zero() const { return rat_ == 0 && rad_ == 0; }
    bool is_rational() const { return rad_ == 0; }

    /// Exact sign of the real number a + b*sqrt(d): -1, 0 or +1.
    /// Decided by case analysis on the signs of a, b and comparison of
    /// a^2 with b^2 d; no floating point is involved.
    int sign() const;

    Scalar abs() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    /// Values compare across fields: a rational embedded in Q(sqrt(d))
    /// equals the same rational over Q.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact order in the real embedding (sqrt(d) > 0).
    bool operator<(const Scalar& o) const;

    /// "0", "-3/2", "1/2r3", "2-1r3", ... (the `r d` suffix means *sqrt(d)).
    std::string str() const;

private:
    static void canonicalize(mpq_class& q);

    mpq_class rat_ = 0;
    mpq_class rad_ = 0;
    FieldDesc field_ = FieldDesc::rationals();
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

}  // namespace stableforms
