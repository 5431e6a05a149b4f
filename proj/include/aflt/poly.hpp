#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aflt {

// Dense univariate polynomials, coefficients stored low-to-high and trimmed so
// that the leading coefficient is nonzero. The zero polynomial is empty.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

namespace poly {

template <class T>
void trim(std::vector<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
int degree(const std::vector<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

QPoly to_q(const ZPoly& p);

// Scale to coprime integer coefficients with positive leading coefficient.
ZPoly primitive_part(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& s);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
QPoly monic(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);

// Returns (g, s) with g = gcd(a, m) monic and s*a == g (mod m).
std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& m);

mpq_class eval(const QPoly& p, const mpq_class& x);

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
mpz_class eval(const ZPoly& p, const mpz_class& x);
bool is_squarefree(const ZPoly& f);

// Discriminant of a monic integer polynomial, (-1)^{n(n-1)/2} Res(f, f').
mpz_class discriminant(const ZPoly& f);

// Characteristic polynomial det(xI - M) of a square rational matrix
// (Faddeev-LeVerrier), returned monic low-to-high.
QPoly charpoly(const std::vector<std::vector<mpq_class>>& m);

mpq_class determinant(std::vector<std::vector<mpq_class>> m);

// Human-readable form, e.g. "x^3 - x^2 + 1".
std::string to_string(const QPoly& p, char var = 'x');
std::string to_string(const ZPoly& p, char var = 'x');

// Accepts an expression in one variable ("x^3 - x^2 + 1", "1/2*x + 3") or a
// coefficient list low-to-high ("1,0,-1,1" or "[1, 0, -1, 1]").
QPoly parse(std::string_view text);

// Sturm chain of a squarefree polynomial; roots in (a, b] are
// variations(a) - variations(b).
std::vector<QPoly> sturm_chain(const QPoly& f);
int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x);

// Cauchy bound: every real root lies strictly inside (-B, B).
mpq_class root_bound(const QPoly& f);

}  // namespace poly
}  // namespace aflt
