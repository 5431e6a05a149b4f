#include "aflt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aflt/errors.hpp"

namespace aflt::poly {

QPoly to_q(const ZPoly& p) {
  QPoly out(p.begin(), p.end());
  return out;
}

ZPoly primitive_part(const QPoly& p) {
  if (p.empty()) return {};
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(p.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class scaled = p[i] * den;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly scale(const QPoly& a, const mpq_class& s) {
  if (s == 0) return {};
  QPoly out(a);
  for (auto& c : out) c *= s;
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly r(a);
  trim(r);
  if (r.size() < b.size()) return {QPoly{}, r};
  QPoly q(r.size() - b.size() + 1);
  const mpq_class& lead = b.back();
  for (int i = degree(r); i >= degree(b); --i) {
    if (r[i] == 0) continue;
    mpq_class coef = r[i] / lead;
    int shift = i - degree(b);
    q[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= coef * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  trim(out);
  return out;
}

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = a;
  trim(r1);
  QPoly s0{}, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {r0, s0};
  mpq_class inv = 1 / r0.back();
  return {scale(r0, inv), divmod(scale(s0, inv), m).second};
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  trim(out);
  return out;
}

mpz_class eval(const ZPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool is_squarefree(const ZPoly& f) {
  QPoly fq = to_q(f);
  return degree(gcd(fq, derivative(fq))) == 0;
}

namespace {

// Matrix of multiplication by g in Q[x]/(f), columns are x^j * g mod f.
std::vector<std::vector<mpq_class>> mult_matrix(const QPoly& g, const QPoly& f) {
  const int n = degree(f);
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  QPoly col = divmod(g, f).second;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n && i < static_cast<int>(col.size()); ++i) m[i][j] = col[i];
    col.insert(col.begin(), mpq_class(0));
    col = divmod(col, f).second;
  }
  return m;
}

}  // namespace

mpz_class discriminant(const ZPoly& f) {
  const int n = degree(f);
  if (n < 1) throw Error(ErrorCode::DegreeZero, "discriminant of a constant");
  if (n == 1) return 1;
  QPoly fq = to_q(f);
  mpq_class res = determinant(mult_matrix(derivative(fq), fq));
  long k = static_cast<long>(n) * (n - 1) / 2;
  if (k % 2 == 1) res = -res;
  return res.get_num();
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

QPoly charpoly(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  QPoly coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<std::vector<mpq_class>> mk(n, std::vector<mpq_class>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- a * mk + c_{n-k+1} I
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    mk = std::move(next);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    coeffs[n - k] = -tr / static_cast<long>(k);
  }
  return coeffs;
}

namespace {

template <class T>
std::string render(const std::vector<T>& p, char var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    T c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (c == 1);
    if (!unit || i == 0) {
      os << c.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QPoly expression() {
    QPoly acc;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      skip();
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      QPoly t = term();
      acc = add(acc, scale(t, sign));
      skip();
    }
    if (first) fail("empty polynomial");
    return acc;
  }

 private:
  QPoly term() {
    QPoly acc{mpq_class(1)};
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        acc = scale(acc, number());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        if (var_ == 0) var_ = c;
        if (c != var_) fail(std::string("unexpected second variable '") + c + "'");
        ++pos_;
        long e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = integer();
        }
        QPoly mono(e + 1);
        mono[e] = 1;
        acc = mul(acc, mono);
      } else if (c == '(') {
        ++pos_;
        std::size_t depth = 1, start = pos_;
        while (pos_ < s_.size() && depth > 0) {
          if (s_[pos_] == '(') ++depth;
          if (s_[pos_] == ')') --depth;
          ++pos_;
        }
        if (depth != 0) fail("unbalanced parenthesis");
        Parser inner(s_.substr(start, pos_ - start - 1));
        inner.var_ = var_;
        QPoly sub = inner.expression();
        if (var_ == 0) var_ = inner.var_;
        skip();
        long e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          e = integer();
        }
        for (long i = 0; i < e; ++i) acc = mul(acc, sub);
      } else {
        break;
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == '/') {
        ++pos_;
        skip();
        mpq_class d = number();
        if (d == 0) fail("division by zero");
        acc = scale(acc, 1 / d);
      }
    }
    if (!any) fail("expected a term");
    return acc;
  }

  mpq_class number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    mpq_class v(mpz_class(std::string(s_.substr(start, pos_ - start))));
    return v;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("bad exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "cannot parse polynomial '" + std::string(s_) + "': " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char var_ = 0;
};

mpq_class parse_rational(std::string_view tok, std::string_view whole) {
  std::string t;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  try {
    if (t.empty()) throw std::invalid_argument("empty");
    if (t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    mpz_class num(t.substr(0, slash));
    mpz_class den = 1;
    if (slash != std::string::npos) den = mpz_class(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "cannot parse coefficient '" + std::string(tok) + "' in '" +
                                      std::string(whole) + "'");
  }
}

}  // namespace

std::string to_string(const QPoly& p, char var) { return render(p, var); }
std::string to_string(const ZPoly& p, char var) { return render(p, var); }

QPoly parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  bool list = s.front() == '[' || s.find(',') != std::string_view::npos;
  if (!list) return Parser(s).expression();
  if (s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::Parse, "unterminated coefficient list");
    s = s.substr(1, s.size() - 2);
  }
  QPoly out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  trim(out);
  return out;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, derivative(f)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

mpq_class root_bound(const QPoly& f) {
  mpq_class m = 0;
  for (int i = 0; i < degree(f); ++i) {
    mpq_class r = abs(f[i] / f.back());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace aflt::poly
