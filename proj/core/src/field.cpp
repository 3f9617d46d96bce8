#include "stableforms/field.hpp"

#include <sstream>

namespace stableforms {

namespace {

bool is_squarefree(unsigned d) {
    for (unsigned p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

FieldDesc FieldDesc::quad_ext(unsigned d) {
    if (d < 2 || !is_squarefree(d))
        throw std::invalid_argument("quadratic extension requires a squarefree radicand >= 2");
    return FieldDesc{FieldKind::QuadExt, d};
}

FieldDesc join_fields(const FieldDesc& a, const FieldDesc& b) {
    if (a.kind == FieldKind::Rationals) return b;
    if (b.kind == FieldKind::Rationals) return a;
    if (a.radicand != b.radicand)
        throw std::invalid_argument("cannot mix Q(sqrt(" + std::to_string(a.radicand) +
                                    ")) with Q(sqrt(" + std::to_string(b.radicand) + "))");
    return a;
}

std::string to_string(const FieldDesc& f) {
    if (f.kind == FieldKind::Rationals) return "q";
    return "qsqrt:" + std::to_string(f.radicand);
}

FieldDesc field_from_string(const std::string& s) {
    if (s == "q") return FieldDesc::rationals();
    if (s.rfind("qsqrt:", 0) == 0) {
        const std::string tail = s.substr(6);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad field spec '" + s + "'");
        return FieldDesc::quad_ext(static_cast<unsigned>(std::stoul(tail)));
    }
    throw std::invalid_argument("bad field spec '" + s + "' (expected q or qsqrt:D)");
}

void Scalar::canonicalize(mpq_class& q) { q.canonicalize(); }

Scalar::Scalar(mpq_class rational_part, mpq_class radical_part, FieldDesc field)
    : rat_(std::move(rational_part)), rad_(std::move(radical_part)), field_(field) {
    canonicalize(rat_);
    canonicalize(rad_);
    if (field_.kind == FieldKind::Rationals && rad_ != 0)
        throw std::invalid_argument("radical part requires a quadratic extension field");
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::radical(const mpq_class& coeff, unsigned d) {
    return Scalar(mpq_class(0), coeff, FieldDesc::quad_ext(d));
}

int Scalar::sign() const {
    const int sa = sgn(rat_);
    const int sb = sgn(rad_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|sqrt(d) decided by a^2 vs b^2 d.
    mpq_class a2 = rat_ * rat_;
    mpq_class b2d = rad_ * rad_ * static_cast<long>(field_.radicand);
    if (a2 == b2d)
        // would make sqrt(d) rational
        throw std::logic_error("radicand is not squarefree");
    return a2 > b2d ? sa : sb;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (rad_ == 0) return Scalar(mpq_class(1) / rat_, mpq_class(0), field_);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is
    // nonzero for (a,b) != 0 because d is squarefree.
    mpq_class norm = rat_ * rat_ - rad_ * rad_ * static_cast<long>(field_.radicand);
    return Scalar(rat_ / norm, -rad_ / norm, field_);
}

Scalar Scalar::operator-() const { return Scalar(-rat_, -rad_, field_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    field_ = join_fields(field_, o.field_);
    rat_ += o.rat_;
    rad_ += o.rad_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    field_ = join_fields(field_, o.field_);
    rat_ -= o.rat_;
    rad_ -= o.rad_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    field_ = join_fields(field_, o.field_);
    mpq_class a = rat_ * o.rat_;
    if (rad_ != 0 && o.rad_ != 0) a += rad_ * o.rad_ * static_cast<long>(field_.radicand);
    mpq_class b = rat_ * o.rad_ + rad_ * o.rat_;
    rat_ = std::move(a);
    rad_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (rat_ != o.rat_) return false;
    if (rad_ == 0 && o.rad_ == 0) return true;
    return rad_ == o.rad_ && field_.radicand == o.field_.radicand;
}

bool Scalar::operator<(const Scalar& o) const { return (*this - o).sign() < 0; }

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (rat_ != 0) out << rat_.get_str();
    if (rad_ != 0) {
        if (rat_ != 0) out << (sgn(rad_) < 0 ? "-" : "+") << mpq_class(::abs(rad_)).get_str();
        else out << rad_.get_str();
        out << 'r' << field_.radicand;
    }
    return out.str();
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

}  // namespace stableforms
