#include "bforge/linear_system.hpp"

#include <stdexcept>
#include <utility>

#include "bforge/errors.hpp"

namespace bforge {

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row i scaled by the lcm of its denominators.
IntMatrix to_integer_rows(const LinearSystem& sys) {
  const Matrix& m = sys.matrix;
  const std::size_t width = m.cols() + (sys.rhs ? 1 : 0);
  IntMatrix out(m.rows(), std::vector<mpz_class>(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    auto entry = [&](std::size_t c) -> const Rational& {
      return c < m.cols() ? m(r, c) : (*sys.rhs)[r];
    };
    for (std::size_t c = 0; c < width; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), entry(c).den().get_mpz_t());
    for (std::size_t c = 0; c < width; ++c) out[r][c] = entry(c).num() * (l / entry(c).den());
  }
  return out;
}

}  // namespace

Solution solve_linear(const LinearSystem& sys) {
  const Matrix& m = sys.matrix;
  if (sys.rhs && sys.rhs->size() != m.rows())
    throw std::invalid_argument("right-hand side has " + std::to_string(sys.rhs->size()) +
                                " entries for " + std::to_string(m.rows()) + " rows");

  IntMatrix a = to_integer_rows(sys);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t width = cols + (sys.rhs ? 1 : 0);

  // Fraction-free forward elimination; every division below is exact because
  // each entry is a minor of the original integer matrix.
  std::vector<std::size_t> pivot_cols;
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), previous.get_mpz_t()))
          throw std::logic_error("Bareiss step not exact");
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  Solution sol;
  sol.rank = pivot_cols.size();

  if (sys.rhs) {
    for (std::size_t i = sol.rank; i < rows; ++i)
      if (a[i][cols] != 0) throw Inconsistent("right-hand side is outside the column space");
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  // Back substitution; free variables keep the values already in x.
  auto back_substitute = [&](std::vector<Rational> x, bool use_rhs) {
    for (std::size_t i = sol.rank; i-- > 0;) {
      const std::size_t pc = pivot_cols[i];
      Rational acc = use_rhs ? Rational(a[i][cols]) : Rational(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (a[i][j] != 0) acc -= Rational(a[i][j]) * x[j];
      x[pc] = acc / Rational(a[i][pc]);
    }
    return x;
  };

  if (sys.rhs) sol.particular = back_substitute(std::vector<Rational>(cols), true);

  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    sol.null_space.push_back(back_substitute(std::move(x), false));
  }
  return sol;
}

}  // namespace bforge
