#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "recess/error.hpp"
#include "recess/rational.hpp"

namespace recess {

/// Comparison tolerance for approximate (binary64) quantities.
inline constexpr double kDefaultTolerance = 1e-9;

/// Process-wide tolerance used when no explicit one is passed. Set once at
/// startup; reads are atomic.
double tolerance();
void set_tolerance(double tol);

/**
 * A scalar that is either an exact rational or an approximate binary64
 * value. Exact values stay exact through every operation that admits it;
 * square roots of non-squares fall back to approximate mode.
 */
class Scalar
{
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit exact scalar
    Scalar(int v) : value_(Rational(v)) {}        // NOLINT

    static Scalar approximate(double v) { return Scalar(v, 0); }
    static Scalar sqrt_of(const Rational& square);

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const;
    double value() const;
    bool is_infinite() const;

    std::string decimal() const;

private:
    Scalar(double v, int) : value_(v) {}
    std::variant<Rational, double> value_;
};

/// -1, 0, +1 comparing a and b; approximate operands compare within tol.
int compare(const Scalar& a, const Scalar& b, double tol = tolerance());

enum class NormKind { L1, L2, Linf };

NormKind dual(NormKind kind);
std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view text);

/// A point or direction in R^d with exact rational coordinates.
class Vector
{
public:
    Vector() = default;
    explicit Vector(std::size_t d) : coords_(d, Rational(0)) {}
    explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Vector unit(std::size_t d, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& s);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
    friend Vector operator-(Vector a) { return a *= Rational(-1); }
    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

    std::vector<double> to_doubles() const;
    static Vector from_doubles(const std::vector<double>& v);

private:
    std::vector<Rational> coords_;
};

Rational dot(const Vector& a, const Vector& b);

/// A linear functional x -> sum_i a_i x_i.
class Functional
{
public:
    Functional() = default;
    explicit Functional(Vector coefficients) : coefficients_(std::move(coefficients)) {}
    Functional(std::initializer_list<Rational> coefficients) : coefficients_(coefficients) {}

    std::size_t size() const { return coefficients_.size(); }
    const Vector& coefficients() const { return coefficients_; }
    const Rational& operator[](std::size_t i) const { return coefficients_[i]; }

    Rational operator()(const Vector& x) const;

    friend bool operator==(const Functional& a, const Functional& b) = default;

private:
    Vector coefficients_;
};

/**
 * Exact encoding of a norm value: the value itself for L1 and Linf, its
 * square for L2. Keeps norm comparisons exact when the L2 norm is
 * irrational.
 */
class NormValue
{
public:
    NormValue(NormKind kind, Rational power) : kind_(kind), power_(std::move(power)) {}

    static NormValue of(const Rational& value, NormKind kind);

    NormKind kind() const { return kind_; }
    const Rational& power() const { return power_; }

    /// sign(value - r), exact.
    int compare(const Rational& r) const;
    int compare(const NormValue& other) const;

    Scalar scalar() const;
    Rational lower(unsigned digits = 40) const;
    Rational upper(unsigned digits = 40) const;
    double approx() const { return scalar().value(); }

    /// Norm of the concatenation (y, z) given norms of y and z.
    static NormValue concatenate(const NormValue& y, const NormValue& z);

private:
    NormKind kind_;
    Rational power_;
};

NormValue norm_value(const Vector& x, NormKind kind);

/// ||x||_kind. Exact for L1, Linf, and L2 when the squared norm is a square.
Scalar norm(const Vector& x, NormKind kind);

/// Operator norm of a with respect to the primal norm `kind`.
Scalar dual_norm(const Functional& a, NormKind kind);
NormValue dual_norm_value(const Functional& a, NormKind kind);

/// u / ||u||. Exact when the norm is rational; otherwise coordinates are the
/// binary64 quotients converted exactly.
Vector normalize(const Vector& u, NormKind kind);

/// Double-precision norm of a double vector (used by clustering and reports).
double norm(const std::vector<double>& x, NormKind kind);

void require_same_dim(std::size_t expected, std::size_t actual, std::string_view what);

}  // namespace recess
