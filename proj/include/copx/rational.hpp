#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "copx/errors.hpp"

namespace copx {

/// Exact rational scalar backed by GMP. Every value is canonical: the
/// denominator is positive, gcd(|num|, den) == 1, and zero is 0/1. Structural
/// equality of canonical forms is value equality, so Rat can key containers.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// num/den with canonicalization. Throws std::domain_error on den == 0.
  Rat(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p", or "p/q" with integer p and positive integer q.
  /// Anything else (including "1/0" and "1/-2") throws ParseError.
  static Rat parse(const std::string& text);

  /// Canonical text form; the denominator is omitted when it is 1.
  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sgn() const { return ::sgn(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

using RatVec = std::vector<Rat>;

Rat parse_rat(const std::string& text);

/// Exact inner product. Throws DimensionError on length mismatch.
Rat dot(const RatVec& a, const RatVec& b);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& a);
bool vec_is_zero(const RatVec& a);

/// Rank of the linear span of `rows`. Empty input has rank 0.
int linear_rank(std::vector<RatVec> rows);

/// Dimension of the affine hull of `points` plus one (so a single point has
/// affine rank 1, a segment 2, ...). Throws std::invalid_argument on empty
/// input and DimensionError on ragged rows.
int affine_rank(const std::vector<RatVec>& points);

/// Canonical basis of the row space: reduced row echelon form, each row scaled
/// to coprime integers with positive leading entry, ordered by pivot column.
std::vector<RatVec> row_space_basis(std::vector<RatVec> rows);

/// Scales a nonzero rational vector by a positive rational so all entries are
/// integers with gcd 1. The zero vector is returned unchanged.
RatVec primitive_scale(const RatVec& v);

std::string vec_str(const RatVec& v);

}  // namespace copx
