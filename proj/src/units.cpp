#include "aflt/units.hpp"

#include <array>
#include <cmath>

#include "aflt/errors.hpp"
#include "aflt/int_factor.hpp"
#include "aflt/lattice.hpp"

namespace aflt {

namespace {

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// floor((p + sqrt(d)) / q) for nonsquare d > 0 and q != 0.
mpz_class floor_quadratic(const mpz_class& p, const mpz_class& d, const mpz_class& q) {
  mpz_class s = isqrt(d), out;
  if (q > 0) {
    mpz_class num = p + s;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
  } else {
    mpz_class num = -p - s - 1, den = -q;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

FieldElement real_quadratic_unit(const QuadraticData& qd) {
  const NumberField& k = qd.omega.field();
  mpz_class P = qd.omega_trace == 1 ? 1 : 0;
  mpz_class Q = qd.omega_trace == 1 ? 2 : 1;
  mpz_class p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  for (int iter = 0; iter < 1000000; ++iter) {
    mpz_class a = floor_quadratic(P, qd.d, Q);
    mpz_class p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
    mpz_class x = p - q * qd.omega_trace, y = q;
    mpz_class nrm = x * x + x * y * qd.omega_trace + y * y * qd.omega_norm;
    if (nrm == 1 || nrm == -1)
      return FieldElement(k, mpq_class(x)) + FieldElement(k, mpq_class(y)) * qd.omega;
    P = a * Q - P;
    Q = (qd.d - P * P) / Q;
  }
  throw Error(ErrorCode::SearchExhausted, "continued fraction did not reach a unit");
}

// Integer multiplication matrices for fast norms of elements of Z[theta].
struct NormKernel {
  int n;
  std::vector<std::vector<std::vector<long>>> powers;  // theta^i as matrices
  bool fast = true;

  explicit NormKernel(const NumberField& k) : n(k.degree()) {
    FieldElement t = FieldElement::theta(k), acc(k, mpq_class(1));
    for (int i = 0; i < n; ++i) {
      auto m = acc.mult_matrix();
      std::vector<std::vector<long>> mi(n, std::vector<long>(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          if (!m[r][c].get_num().fits_slong_p() || std::labs(m[r][c].get_num().get_si()) > (1L << 20))
            fast = false;
          else
            mi[r][c] = m[r][c].get_num().get_si();
        }
      powers.push_back(std::move(mi));
      acc *= t;
    }
  }

  // Returns false when the fast path cannot be used.
  bool norm(const std::vector<long>& v, __int128& out) const {
    if (!fast || n > 3) return false;
    __int128 m[3][3] = {};
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r][c] += static_cast<__int128>(v[i]) * powers[i][r][c];
    if (n == 1) out = m[0][0];
    if (n == 2) out = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
      out = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return true;
  }
};

using Vec = std::vector<double>;

Vec log_vec(const FieldElement& u, int rank) {
  Vec l = u.log_abs_real();
  l.resize(rank);
  return l;
}

bool unit_equal_up_to_sign(const FieldElement& a, const FieldElement& b) {
  return a == b || a == -b;
}

// Smallest N <= 1000 with N*c_i all within tol of integers.
bool rational_relation(const Vec& c, long& N, std::vector<long>& m) {
  for (N = 1; N <= 1000; ++N) {
    bool ok = true;
    m.assign(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      double x = c[i] * static_cast<double>(N);
      double r = std::round(x);
      if (std::fabs(x - r) > 1e-6) {
        ok = false;
        break;
      }
      m[i] = static_cast<long>(r);
    }
    if (ok) return true;
  }
  return false;
}

class UnitLattice {
 public:
  UnitLattice(const NumberField& k, int rank) : k_(k), rank_(rank) {}

  void insert(const FieldElement& u) {
    Vec lu = log_vec(u, rank_);
    if (norm2(lu) < 1e-18) return;
    if (basis_.empty()) {
      basis_.push_back(u);
      return;
    }
    Vec c;
    if (!coordinates(lu, c)) {
      // Independent of the current basis.
      basis_.push_back(u);
      reduce();
      return;
    }
    long N;
    std::vector<long> m;
    if (!rational_relation(c, N, m)) return;
    if (N == 1) return;  // already in the lattice up to torsion
    const std::size_t b = basis_.size();
    std::vector<std::vector<long>> rows(b + 1, std::vector<long>(b, 0));
    for (std::size_t i = 0; i < b; ++i) rows[i][i] = N;
    for (std::size_t i = 0; i < b; ++i) rows[b][i] = m[i];
    auto U = hermite(rows, static_cast<int>(b));
    std::vector<FieldElement> gens = basis_;
    gens.push_back(u);
    std::vector<FieldElement> fresh;
    for (std::size_t i = 0; i < b; ++i) {
      FieldElement w(k_, mpq_class(1));
      for (std::size_t j = 0; j <= b; ++j)
        if (U[i][j] != 0) w *= gens[j].pow(U[i][j]);
      fresh.push_back(w);
    }
    // Exact verification that every old generator lies in the new lattice.
    for (const auto& g : gens)
      if (!expressible(g, fresh)) return;
    basis_ = fresh;
    reduce();
  }

  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<FieldElement>& basis() const { return basis_; }

 private:
  static double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  static double norm2(const Vec& a) { return dot(a, a); }

  // Coordinates of l in the span of the basis logs; false when independent.
  bool coordinates(const Vec& l, Vec& c) const {
    const std::size_t b = basis_.size();
    std::vector<Vec> ls;
    for (const auto& g : basis_) ls.push_back(log_vec(g, rank_));
    if (b == 1) {
      double t = dot(l, ls[0]) / norm2(ls[0]);
      Vec r = l;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= t * ls[0][i];
      if (norm2(r) > 1e-12 * (1 + norm2(l))) return false;
      c = {t};
      return true;
    }
    // b == rank == 2: solve the 2x2 system.
    double det = ls[0][0] * ls[1][1] - ls[1][0] * ls[0][1];
    c = {(l[0] * ls[1][1] - ls[1][0] * l[1]) / det, (ls[0][0] * l[1] - l[0] * ls[0][1]) / det};
    return true;
  }

  bool expressible(const FieldElement& g, const std::vector<FieldElement>& basis) const {
    std::vector<Vec> ls;
    for (const auto& w : basis) ls.push_back(log_vec(w, rank_));
    Vec l = log_vec(g, rank_);
    std::vector<long> e;
    if (basis.size() == 1) {
      e = {std::lround(dot(l, ls[0]) / norm2(ls[0]))};
    } else {
      double det = ls[0][0] * ls[1][1] - ls[1][0] * ls[0][1];
      e = {std::lround((l[0] * ls[1][1] - ls[1][0] * l[1]) / det),
           std::lround((ls[0][0] * l[1] - l[0] * ls[0][1]) / det)};
    }
    FieldElement prod(k_, mpq_class(1));
    for (std::size_t i = 0; i < basis.size(); ++i) prod *= basis[i].pow(e[i]);
    return unit_equal_up_to_sign(prod, g);
  }

  void reduce() {
    if (basis_.size() < 2) return;
    for (int guard = 0; guard < 100; ++guard) {
      Vec l0 = log_vec(basis_[0], rank_), l1 = log_vec(basis_[1], rank_);
      if (norm2(l1) < norm2(l0)) {
        std::swap(basis_[0], basis_[1]);
        std::swap(l0, l1);
      }
      long mu = std::lround(dot(l1, l0) / norm2(l0));
      if (mu == 0) break;
      basis_[1] *= basis_[0].pow(-mu);
    }
  }

  NumberField k_;
  int rank_;
  std::vector<FieldElement> basis_;
};

FieldElement normalize_unit(FieldElement u) {
  if (u.field().r1() > 0) {
    if (u.sign_at(0) < 0) u = -u;
    if (u.log_abs_real()[0] < 0) u = u.inverse();
  }
  return u;
}

UnitGroup search_units(const NumberField& k, const Config& cfg) {
  UnitGroup g(k);
  g.rank = k.r1() + k.r2() - 1;
  g.completeness = Completeness::BoundedSearch;
  NormKernel kernel(k);
  UnitLattice lattice(k, g.rank);
  long h_cap = cfg.unit_height_bound.fits_slong_p() ? cfg.unit_height_bound.get_si() : (1L << 40);
  long stop_at = h_cap;
  long reached = 0;
  enumerate_shells(k.degree(), h_cap, cfg.max_candidates, [&](const std::vector<long>& v, long h) {
    if (h > stop_at) return false;
    reached = h;
    __int128 nrm = 0;
    bool is_unit;
    FieldElement u(k, std::vector<mpq_class>(v.begin(), v.end()));
    if (kernel.norm(v, nrm))
      is_unit = (nrm == 1 || nrm == -1);
    else
      is_unit = abs(u.norm()) == 1;
    if (!is_unit) return true;
    lattice.insert(u);
    if (lattice.size() == g.rank && stop_at == h_cap) stop_at = std::min(h_cap, 2 * h + 2);
    return true;
  });
  g.height_searched = reached;
  if (lattice.size() < g.rank)
    throw Error(ErrorCode::SearchExhausted,
                "found " + std::to_string(lattice.size()) + " of " + std::to_string(g.rank) +
                    " independent units up to coordinate height " + std::to_string(reached));
  for (const auto& u : lattice.basis()) g.fundamental_units.push_back(normalize_unit(u));
  return g;
}

}  // namespace

std::optional<QuadraticData> quadratic_data(const NumberField& k) {
  if (k.degree() != 2) return std::nullopt;
  const mpz_class& b = k.poly()[1];
  mpz_class pd = k.poly_disc();
  auto fac = intfac::factor(pd);
  if (!fac.complete) throw Error(ErrorCode::Unsupported, "cannot factor the discriminant " + pd.get_str());
  mpz_class d = pd < 0 ? -1 : 1, kk = 1;
  for (const auto& [p, e] : fac.factors) {
    if (e % 2) d *= p;
    for (unsigned i = 0; i < e / 2; ++i) kk *= p;
  }
  FieldElement sqrt_d = (FieldElement(k, mpq_class(2)) * FieldElement::theta(k) +
                         FieldElement(k, mpq_class(b))) *
                        FieldElement(k, mpq_class(1, kk));
  bool one_mod_4 = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
  QuadraticData qd{d, one_mod_4 ? d : 4 * d, sqrt_d, sqrt_d, 0, 0};
  if (one_mod_4) {
    qd.omega = (FieldElement(k, mpq_class(1)) + sqrt_d) * FieldElement(k, mpq_class(1, 2));
    qd.omega_trace = 1;
    qd.omega_norm = (1 - d) / 4;
  } else {
    qd.omega_trace = 0;
    qd.omega_norm = -d;
  }
  return qd;
}

UnitGroup fundamental_units(const NumberField& k, const Config& cfg) {
  UnitGroup g(k);
  if (k.degree() == 1) return g;
  if (k.degree() == 2) {
    QuadraticData qd = *quadratic_data(k);
    if (qd.d > 0) {
      g.rank = 1;
      g.fundamental_units.push_back(real_quadratic_unit(qd));
      return g;
    }
    if (qd.d == -1) {
      g.torsion = qd.sqrt_d;
      g.torsion_order = 4;
    } else if (qd.d == -3) {
      g.torsion = qd.omega;
      g.torsion_order = 6;
    }
    return g;
  }
  if (k.degree() == 3) return search_units(k, cfg);
  throw Error(ErrorCode::Unsupported,
              "unit groups are supported up to degree 3; got degree " + std::to_string(k.degree()));
}

}  // namespace aflt
