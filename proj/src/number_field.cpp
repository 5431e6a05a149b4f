#include "aflt/number_field.hpp"

#include <cmath>
#include <sstream>

#include "aflt/errors.hpp"
#include "aflt/zfactor.hpp"

namespace aflt {

namespace {

constexpr int kMaxDegree = 6;
constexpr unsigned kFineBits = 128;

int roots_in(const std::vector<QPoly>& sturm, const mpq_class& lo, const mpq_class& hi) {
  return poly::sign_variations(sturm, lo) - poly::sign_variations(sturm, hi);
}

void isolate(const std::vector<QPoly>& sturm, mpq_class lo, mpq_class hi,
             std::vector<RootInterval>& out) {
  int k = roots_in(sturm, lo, hi);
  if (k == 0) return;
  if (k == 1) {
    out.push_back({lo, hi});
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  isolate(sturm, lo, mid, out);
  isolate(sturm, mid, hi, out);
}

RootInterval refine(const std::vector<QPoly>& sturm, RootInterval iv, const mpq_class& width) {
  while (iv.hi - iv.lo >= width) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    if (roots_in(sturm, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

mpq_class width_for(unsigned bits) {
  mpz_class den = mpz_class(1) << bits;
  return mpq_class(1, den);
}

// Interval Horner evaluation of p over [lo, hi].
std::pair<mpq_class, mpq_class> eval_interval(const QPoly& p, const mpq_class& lo,
                                              const mpq_class& hi) {
  mpq_class a = 0, b = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    mpq_class c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
    mpq_class mn = c1, mx = c1;
    for (const auto* c : {&c2, &c3, &c4}) {
      if (*c < mn) mn = *c;
      if (*c > mx) mx = *c;
    }
    a = mn + *it;
    b = mx + *it;
  }
  return {a, b};
}

void reduce_mod(std::vector<mpq_class>& r, const ZPoly& f) {
  const int n = poly::degree(f);
  for (int i = static_cast<int>(r.size()) - 1; i >= n; --i) {
    if (r[i] == 0) continue;
    mpq_class c = r[i];
    for (int j = 0; j <= n; ++j) r[i - n + j] -= c * f[j];
  }
  r.resize(n);
}

}  // namespace

double log_abs(const mpq_class& q) {
  long e1 = 0, e2 = 0;
  double m1 = mpz_get_d_2exp(&e1, q.get_num_mpz_t());
  double m2 = mpz_get_d_2exp(&e2, q.get_den_mpz_t());
  return std::log(std::fabs(m1)) - std::log(m2) + static_cast<double>(e1 - e2) * std::log(2.0);
}

NumberField NumberField::make(const ZPoly& f_in) {
  ZPoly f = f_in;
  poly::trim(f);
  if (poly::degree(f) < 1) throw Error(ErrorCode::DegreeZero, "defining polynomial must have degree >= 1");
  if (f.back() != 1)
    throw Error(ErrorCode::NotMonic, "defining polynomial " + poly::to_string(f) + " is not monic");
  if (poly::degree(f) > kMaxDegree)
    throw Error(ErrorCode::Unsupported, "degree " + std::to_string(poly::degree(f)) +
                                            " exceeds the supported maximum of 6");
  auto fs = zfactor::factor_monic(f);
  if (fs.size() != 1 || fs[0].multiplicity != 1)
    throw Error(ErrorCode::Reducible, poly::to_string(f) + " is reducible: factor " +
                                          poly::to_string(fs[0].poly) + " found over Q");
  auto d = std::make_shared<FieldData>();
  d->poly = f;
  d->qpoly = poly::to_q(f);
  d->n = poly::degree(f);
  d->poly_disc = poly::discriminant(f);
  if (d->n == 1) {
    mpq_class r = -d->qpoly[0];
    d->roots.push_back({r, r});
    d->fine_roots.push_back({r, r});
    d->sturm = {d->qpoly};
  } else {
    d->sturm = poly::sturm_chain(d->qpoly);
    mpq_class b = poly::root_bound(d->qpoly);
    isolate(d->sturm, -b, b, d->roots);
    for (const auto& iv : d->roots) d->fine_roots.push_back(refine(d->sturm, iv, width_for(kFineBits)));
  }
  d->r1 = static_cast<int>(d->roots.size());
  d->r2 = (d->n - d->r1) / 2;
  return NumberField(std::move(d));
}

NumberField NumberField::parse(std::string_view text) {
  QPoly q = poly::parse(text);
  if (q.empty() || poly::degree(q) < 1) throw Error(ErrorCode::DegreeZero, "defining polynomial must have degree >= 1");
  ZPoly z(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1)
      throw Error(ErrorCode::Parse, "defining polynomial must have integer coefficients");
    z[i] = q[i].get_num();
  }
  return make(z);
}

int NumberField::degree() const { return d_->n; }
const ZPoly& NumberField::poly() const { return d_->poly; }
const mpz_class& NumberField::poly_disc() const { return d_->poly_disc; }
int NumberField::r1() const { return d_->r1; }
int NumberField::r2() const { return d_->r2; }
bool NumberField::totally_real() const { return d_->r2 == 0; }
const std::vector<RootInterval>& NumberField::real_roots() const { return d_->roots; }
std::string NumberField::poly_string() const { return poly::to_string(d_->poly); }

RootInterval NumberField::refined_root(int j, unsigned bits) const {
  const RootInterval& iv = d_->fine_roots.at(j);
  if (iv.lo == iv.hi) return iv;
  return refine(d_->sturm, iv, width_for(bits));
}

bool NumberField::operator==(const NumberField& other) const {
  return d_ == other.d_ || d_->poly == other.d_->poly;
}

FieldElement::FieldElement(NumberField k) : k_(std::move(k)), c_(k_.degree()) {}

FieldElement::FieldElement(NumberField k, std::vector<mpq_class> coords)
    : k_(std::move(k)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) < k_.degree()) c_.resize(k_.degree());
  if (static_cast<int>(c_.size()) > k_.degree()) reduce_mod(c_, k_.poly());
}

FieldElement::FieldElement(NumberField k, const mpq_class& r) : FieldElement(std::move(k)) {
  c_[0] = r;
}

FieldElement FieldElement::theta(const NumberField& k) {
  std::vector<mpq_class> c(2);
  c[1] = 1;
  return FieldElement(k, c);
}

FieldElement FieldElement::from_poly(const NumberField& k, const QPoly& p) {
  std::vector<mpq_class> c(p.begin(), p.end());
  return FieldElement(k, c);
}

QPoly FieldElement::as_poly() const {
  QPoly p(c_.begin(), c_.end());
  poly::trim(p);
  return p;
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElement::is_integral_coords() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

mpz_class FieldElement::denominator() const {
  mpz_class d = 1;
  for (const auto& c : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

void FieldElement::check_same(const FieldElement& y) const {
  if (k_ != y.k_) throw Error(ErrorCode::InvalidArgument, "elements of different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  check_same(y);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  check_same(y);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= y.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  check_same(y);
  const std::size_t n = c_.size();
  std::vector<mpq_class> r(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y.c_[j] != 0) r[i + j] += c_[i] * y.c_[j];
  }
  reduce_mod(r, k_.poly());
  c_ = std::move(r);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in " + k_.poly_string());
  if (is_rational()) return FieldElement(k_, 1 / c_[0]);
  auto [g, s] = poly::gcd_cofactor(as_poly(), k_.data().qpoly);
  return from_poly(k_, s);
}

FieldElement& FieldElement::operator/=(const FieldElement& y) {
  check_same(y);
  return *this *= y.inverse();
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc(k_, mpq_class(1));
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::vector<std::vector<mpq_class>> FieldElement::mult_matrix() const {
  const int n = k_.degree();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  FieldElement col(*this);
  FieldElement t = theta(k_);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
    if (j + 1 < n) col *= t;
  }
  return m;
}

mpq_class FieldElement::norm() const {
  if (is_rational()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), c_[0].get_num_mpz_t(), k_.degree());
    mpz_pow_ui(den.get_mpz_t(), c_[0].get_den_mpz_t(), k_.degree());
    return mpq_class(num, den);
  }
  return poly::determinant(mult_matrix());
}

mpq_class FieldElement::trace() const {
  auto m = mult_matrix();
  mpq_class t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

QPoly FieldElement::charpoly() const { return poly::charpoly(mult_matrix()); }

int FieldElement::sign_at(int j) const {
  if (is_zero()) return 0;
  const FieldData& d = k_.data();
  RootInterval iv = d.fine_roots.at(j);
  QPoly p = as_poly();
  if (iv.lo == iv.hi) return sgn(poly::eval(p, iv.lo));
  for (;;) {
    auto [a, b] = eval_interval(p, iv.lo, iv.hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    mpq_class mid = (iv.lo + iv.hi) / 2;
    if (roots_in(d.sturm, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

bool FieldElement::is_totally_positive() const {
  if (!k_.totally_real())
    throw Error(ErrorCode::NotTotallyReal, k_.poly_string() + " is not totally real");
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "total positivity of zero");
  for (int j = 0; j < k_.r1(); ++j)
    if (sign_at(j) < 0) return false;
  return true;
}

std::vector<double> FieldElement::log_abs_real() const {
  std::vector<double> out;
  QPoly p = as_poly();
  for (int j = 0; j < k_.r1(); ++j) {
    const RootInterval& iv = k_.data().fine_roots[j];
    mpq_class mid = (iv.lo + iv.hi) / 2;
    mpq_class v = poly::eval(p, mid);
    out.push_back(v == 0 ? -HUGE_VAL : log_abs(v));
  }
  return out;
}

std::string FieldElement::to_string(char var) const {
  QPoly p = as_poly();
  return poly::to_string(p, var);
}

FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

FieldElement element_arith(const FieldElement& x, const FieldElement& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

}  // namespace aflt
