#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aflt/poly.hpp"

namespace aflt {

// Half-open isolating interval (lo, hi] for a real root; lo == hi marks an
// exact rational root.
struct RootInterval {
  mpq_class lo, hi;
};

struct FieldData;

// K = Q[x]/(f) for a monic irreducible integer polynomial f of degree <= 6.
class NumberField {
 public:
  // Errors: DegreeZero, NotMonic, Reducible, Unsupported (degree above 6).
  static NumberField make(const ZPoly& f);
  static NumberField parse(std::string_view text);

  int degree() const;
  const ZPoly& poly() const;
  const mpz_class& poly_disc() const;
  int r1() const;
  int r2() const;
  bool totally_real() const;
  const std::vector<RootInterval>& real_roots() const;
  std::string poly_string() const;

  // Real root j refined to width below 2^-bits, as an interval.
  RootInterval refined_root(int j, unsigned bits) const;

  const FieldData& data() const { return *d_; }
  bool operator==(const NumberField& other) const;
  bool operator!=(const NumberField& other) const { return !(*this == other); }

 private:
  explicit NumberField(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const FieldData> d_;
};

struct FieldData {
  ZPoly poly;
  QPoly qpoly;
  int n = 0;
  mpz_class poly_disc;
  int r1 = 0, r2 = 0;
  std::vector<RootInterval> roots;       // isolating intervals, ascending
  std::vector<RootInterval> fine_roots;  // width below 2^-128
  std::vector<QPoly> sturm;
};

class FieldElement {
 public:
  explicit FieldElement(NumberField k);
  FieldElement(NumberField k, std::vector<mpq_class> coords);
  FieldElement(NumberField k, const mpq_class& r);

  static FieldElement theta(const NumberField& k);
  static FieldElement from_poly(const NumberField& k, const QPoly& p);

  const NumberField& field() const { return k_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  QPoly as_poly() const;

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational() const { return c_[0]; }
  bool is_integral_coords() const;
  // Least positive integer d with d * x having integer coordinates.
  mpz_class denominator() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  mpq_class norm() const;
  mpq_class trace() const;
  std::vector<std::vector<mpq_class>> mult_matrix() const;
  QPoly charpoly() const;

  // Sign of the image under the j-th real embedding, exact.
  int sign_at(int j) const;
  // Errors: NotTotallyReal, ZeroElement.
  bool is_totally_positive() const;
  // Approximate log |sigma_j(x)| over the real embeddings. Used for search
  // guidance only, never for decisions.
  std::vector<double> log_abs_real() const;

  std::string to_string(char var = 't') const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.c_ < b.c_; }

 private:
  void check_same(const FieldElement& y) const;
  NumberField k_;
  std::vector<mpq_class> c_;
};

FieldElement operator+(FieldElement a, const FieldElement& b);
FieldElement operator-(FieldElement a, const FieldElement& b);
FieldElement operator*(FieldElement a, const FieldElement& b);
FieldElement operator/(FieldElement a, const FieldElement& b);

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement element_arith(const FieldElement& x, const FieldElement& y, ArithOp op);

// log |q| for a nonzero rational, accurate to double precision.
double log_abs(const mpq_class& q);

}  // namespace aflt
