#include "recess/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

namespace recess {

namespace {
std::atomic<double> g_tolerance{kDefaultTolerance};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
    g_tolerance.store(tol, std::memory_order_relaxed);
}

Scalar Scalar::sqrt_of(const Rational& square)
{
    if (square.sign() < 0) throw Error(ErrorCode::InvalidInput, "square root of a negative value");
    if (auto r = exact_sqrt(square)) return Scalar(*r);
    return approximate(std::sqrt(to_double(square)));
}

const Rational& Scalar::exact() const
{
    if (!is_exact()) throw Error(ErrorCode::InvalidInput, "scalar is approximate, not exact");
    return std::get<Rational>(value_);
}

double Scalar::value() const
{
    if (is_exact()) return to_double(std::get<Rational>(value_));
    return std::get<double>(value_);
}

bool Scalar::is_infinite() const { return !is_exact() && std::isinf(std::get<double>(value_)); }

std::string Scalar::decimal() const
{
    if (is_exact()) return to_decimal_string(std::get<Rational>(value_));
    return to_decimal_string(std::get<double>(value_));
}

int compare(const Scalar& a, const Scalar& b, double tol)
{
    if (a.is_exact() && b.is_exact()) {
        const auto& x = a.exact();
        const auto& y = b.exact();
        return x < y ? -1 : (y < x ? 1 : 0);
    }
    const double x = a.value();
    const double y = b.value();
    if (std::isinf(x) || std::isinf(y)) return x < y ? -1 : (y < x ? 1 : 0);
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x - y) <= tol * scale) return 0;
    return x < y ? -1 : 1;
}

NormKind dual(NormKind kind)
{
    switch (kind) {
    case NormKind::L1: return NormKind::Linf;
    case NormKind::L2: return NormKind::L2;
    case NormKind::Linf: return NormKind::L1;
    }
    return NormKind::L2;
}

std::string_view to_string(NormKind kind)
{
    switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
    }
    return "l2";
}

NormKind parse_norm_kind(std::string_view text)
{
    if (text == "l1") return NormKind::L1;
    if (text == "l2") return NormKind::L2;
    if (text == "linf") return NormKind::Linf;
    throw Error(ErrorCode::InvalidInput, "unknown norm '" + std::string(text) + "' (expected l1, l2, linf)");
}

Vector Vector::unit(std::size_t d, std::size_t i)
{
    Vector e(d);
    e[i] = 1;
    return e;
}

bool Vector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.sign() == 0; });
}

Vector& Vector::operator+=(const Vector& o)
{
    require_same_dim(size(), o.size(), "vector addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    require_same_dim(size(), o.size(), "vector subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& s)
{
    for (auto& c : coords_) c *= s;
    return *this;
}

std::vector<double> Vector::to_doubles() const
{
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(to_double(c));
    return out;
}

Vector Vector::from_doubles(const std::vector<double>& v)
{
    std::vector<Rational> coords;
    coords.reserve(v.size());
    for (double x : v) coords.push_back(from_double(x));
    return Vector(std::move(coords));
}

Rational dot(const Vector& a, const Vector& b)
{
    require_same_dim(a.size(), b.size(), "pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational Functional::operator()(const Vector& x) const { return dot(coefficients_, x); }

NormValue NormValue::of(const Rational& value, NormKind kind)
{
    return NormValue(kind, kind == NormKind::L2 ? Rational(value * value) : value);
}

int NormValue::compare(const Rational& r) const
{
    if (r.sign() < 0) return 1;
    const Rational rhs = kind_ == NormKind::L2 ? Rational(r * r) : r;
    return power_ < rhs ? -1 : (rhs < power_ ? 1 : 0);
}

int NormValue::compare(const NormValue& other) const
{
    if (kind_ != other.kind_) throw Error(ErrorCode::InvalidInput, "comparing norms of different kinds");
    return power_ < other.power_ ? -1 : (other.power_ < power_ ? 1 : 0);
}

Scalar NormValue::scalar() const
{
    return kind_ == NormKind::L2 ? Scalar::sqrt_of(power_) : Scalar(power_);
}

Rational NormValue::lower(unsigned digits) const
{
    return kind_ == NormKind::L2 ? sqrt_lower(power_, digits) : power_;
}

Rational NormValue::upper(unsigned digits) const
{
    return kind_ == NormKind::L2 ? sqrt_upper(power_, digits) : power_;
}

NormValue NormValue::concatenate(const NormValue& y, const NormValue& z)
{
    if (y.kind_ != z.kind_) throw Error(ErrorCode::InvalidInput, "concatenating norms of different kinds");
    switch (y.kind_) {
    case NormKind::L1:
    case NormKind::L2: return NormValue(y.kind_, y.power_ + z.power_);
    case NormKind::Linf: return NormValue(y.kind_, std::max(y.power_, z.power_));
    }
    return y;
}

NormValue norm_value(const Vector& x, NormKind kind)
{
    if (x.empty()) throw Error(ErrorCode::InvalidInput, "norm of a dimension-0 vector");
    Rational acc = 0;
    for (const auto& c : x) {
        switch (kind) {
        case NormKind::L1: acc += abs(c); break;
        case NormKind::L2: acc += c * c; break;
        case NormKind::Linf: acc = std::max(acc, abs(c)); break;
        }
    }
    return NormValue(kind, acc);
}

Scalar norm(const Vector& x, NormKind kind) { return norm_value(x, kind).scalar(); }

NormValue dual_norm_value(const Functional& a, NormKind kind)
{
    return norm_value(a.coefficients(), dual(kind));
}

Scalar dual_norm(const Functional& a, NormKind kind) { return dual_norm_value(a, kind).scalar(); }

Vector normalize(const Vector& u, NormKind kind)
{
    if (u.empty()) throw Error(ErrorCode::InvalidInput, "normalizing a dimension-0 vector");
    if (u.is_zero()) throw Error(ErrorCode::ZeroDirection, "cannot normalize the zero vector");
    const Scalar n = norm(u, kind);
    if (n.is_exact()) return u * Rational(1 / n.exact());
    std::vector<double> d = u.to_doubles();
    const double s = n.value();
    for (auto& x : d) x /= s;
    return Vector::from_doubles(d);
}

double norm(const std::vector<double>& x, NormKind kind)
{
    double acc = 0.0;
    for (double c : x) {
        switch (kind) {
        case NormKind::L1: acc += std::abs(c); break;
        case NormKind::L2: acc += c * c; break;
        case NormKind::Linf: acc = std::max(acc, std::abs(c)); break;
        }
    }
    return kind == NormKind::L2 ? std::sqrt(acc) : acc;
}

void require_same_dim(std::size_t expected, std::size_t actual, std::string_view what)
{
    if (expected != actual)
        throw Error(ErrorCode::InvalidInput, std::string(what) + ": dimension mismatch (" +
                                                 std::to_string(expected) + " vs " + std::to_string(actual) + ")");
}

}  // namespace recess
