#include "octa/rational.hpp"

#include <stdexcept>

namespace octa {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

int to_halves(const Rational& q) {
  Rational twice = q * 2;
  if (twice.get_den() != 1)
    throw std::invalid_argument("exponent denominator must be 1 or 2: " + to_string(q));
  if (!twice.get_num().fits_sint_p()) throw std::invalid_argument("exponent out of range");
  return static_cast<int>(twice.get_num().get_si());
}

Rational from_halves(int halves) { return make_rational(halves, 2); }

Rational binomial(const Rational& x, int k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (x - i);
    r /= (i + 1);
  }
  return r;
}

LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                            std::size_t n) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    std::swap(b[rank], b[p]);
    Rational inv = 1 / a[rank][col];
    for (std::size_t c = col; c < n; ++c) a[rank][c] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  LinearSolution out;
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return out;
  out.consistent = true;
  out.unique = rank == n;
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) out.x[pivot_col[r]] = b[r];
  return out;
}

}  // namespace octa
