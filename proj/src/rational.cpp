#include "copx/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace copx {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  const auto fail = [&]() -> Rat {
    throw ParseError("malformed rational '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();
  mpz_class num(text.substr(0, i));
  if (i == text.size()) return Rat(num, 1);
  if (text[i] != '/') return fail();
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != text.size()) return fail();
  mpz_class den(text.substr(den_begin));
  if (den == 0) return fail();
  return Rat(num, den);
}

std::string Rat::str() const { return v_.get_str(); }

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat parse_rat(const std::string& text) { return Rat::parse(text); }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw DimensionError("dot: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_add: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// In-place Gaussian elimination to reduced row echelon form. Returns the
// pivot columns. Deterministic: scans columns left to right, picks the first
// row with a nonzero entry.
std::vector<int> rref(std::vector<RatVec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionError("rref: ragged rows");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rat inv = Rat(1) / rows[rank][c];
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Rat f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

int linear_rank(std::vector<RatVec> rows) {
  return static_cast<int>(rref(rows).size());
}

int affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("affine_rank of empty point set");
  std::vector<RatVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(vec_sub(points[i], points[0]));
  return linear_rank(std::move(diffs)) + 1;
}

std::vector<RatVec> row_space_basis(std::vector<RatVec> rows) {
  rref(rows);
  for (auto& r : rows) r = primitive_scale(r);
  return rows;
}

RatVec primitive_scale(const RatVec& v) {
  mpz_class den_lcm = 1;
  for (const Rat& x : v) {
    mpz_class d = x.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  mpz_class num_gcd = 0;
  for (const Rat& x : v) {
    mpz_class scaled = x.num() * (den_lcm / x.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rat factor(den_lcm, num_gcd);
  return vec_scale(factor, v);
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace copx
