#include "wreath/degree.hpp"

#include "wreath/classes.hpp"

#include <map>

namespace wreath {

namespace {

using Row = std::vector<Integer>;
using Matrix = std::vector<Row>;

void remove_content(Row& row) {
  Integer g = 0;
  for (const auto& v : row)
    if (v != 0)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row)
      if (v != 0)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free forward elimination on columns [0, limit). Row k of the result
// has its leading entry in column pivots[k]; rows past the rank vanish on [0, limit).
std::vector<std::size_t> eliminate(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < limit && rank < m.size(); ++col) {
    std::size_t found = rank;
    while (found < m.size() && m[found][col] == 0)
      ++found;
    if (found == m.size())
      continue;
    std::swap(m[rank], m[found]);
    const Row& pivot = m[rank];
    const Integer a = pivot[col];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0)
        continue;
      const Integer e = m[i][col];
      Row& row = m[i];
      for (std::size_t j = col; j < row.size(); ++j) {
        if (pivot[j] == 0 && row[j] == 0)
          continue;
        row[j] = a * row[j] - e * pivot[j];
      }
      remove_content(row);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

struct Basis {
  std::map<std::vector<Constraint>, std::size_t> index;
  std::vector<Pcp> pcps; // column 0 is the constant
};

Basis make_basis(int n, int r, int m) {
  Basis b;
  b.pcps.emplace_back(n, r, std::vector<Constraint>{});
  b.index[{}] = 0;
  for (int s = 1; s <= m; ++s)
    for (auto& pcp : enumerate_pcps(n, r, s)) {
      b.index[pcp.constraints()] = b.pcps.size();
      b.pcps.push_back(std::move(pcp));
    }
  return b;
}

// Columns of the basis indicators satisfied by p.
std::vector<std::size_t> satisfied_columns(const ColoredPermutation& p, int m, const Basis& basis) {
  std::vector<std::size_t> cols{0};
  const int n = p.n();
  std::vector<Constraint> chosen;
  auto rec = [&](auto&& self, int start) -> void {
    if (!chosen.empty())
      cols.push_back(basis.index.at(chosen));
    if (static_cast<int>(chosen.size()) == m)
      return;
    for (int i = start; i <= n; ++i) {
      chosen.push_back({i, p.image(i), p.color_of(p.image(i))});
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return cols;
}

} // namespace

SpanCertificate in_degree_span(const Statistic& x, int m, const ComputeLimits& limits) {
  const int n = x.n();
  const int r = x.r();
  if (m < 0)
    throw PreconditionError("degree bound must be nonnegative");
  m = std::min(m, n);
  const Integer order = group_order(n, r);
  const Integer budget(std::to_string(limits.budget));
  if (order > budget)
    throw BudgetExceeded("S_{" + std::to_string(n) + "," + std::to_string(r) + "} has " + to_string(order) +
                         " elements, budget is " + std::to_string(limits.budget));
  Integer basis_size = 1;
  for (int s = 1; s <= m; ++s)
    basis_size += binomial(n, static_cast<unsigned long>(s)) * binomial(n, static_cast<unsigned long>(s)) *
                  factorial(static_cast<unsigned long>(s)) * power(r, static_cast<unsigned long>(s));
  if (order * basis_size > budget)
    throw BudgetExceeded("span matrix has " + to_string(order) + " x " + to_string(basis_size) +
                         " entries, budget is " + std::to_string(limits.budget));

  const Basis basis = make_basis(n, r, m);
  const std::size_t cols = basis.pcps.size();
  std::vector<ColoredPermutation> elements;
  std::vector<Rational> values;
  Integer scale = 1;
  for_each_group_element(n, r, [&](const ColoredPermutation& p) {
    elements.push_back(p);
    values.push_back(evaluate_fast(x, p));
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), values.back().get_den_mpz_t());
  });
  const std::size_t rows = elements.size();

  auto build = [&](bool with_identity) {
    Matrix mat(rows, Row(cols + 1 + (with_identity ? rows : 0), 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t c : satisfied_columns(elements[i], m, basis))
        mat[i][c] = 1;
      mat[i][cols] = Integer(values[i] * scale);
      if (with_identity)
        mat[i][cols + 1 + i] = 1;
    }
    return mat;
  };

  SpanCertificate cert;
  cert.rows = rows;
  cert.columns = cols;
  Matrix mat = build(false);
  const auto pivots = eliminate(mat, cols);
  cert.rank = pivots.size();
  bool consistent = true;
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (mat[i][cols] != 0)
      consistent = false;

  if (consistent) {
    std::vector<Rational> coeff(cols, 0);
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational acc = mat[k][cols];
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (mat[k][j] != 0)
          acc -= Rational(mat[k][j]) * coeff[j];
      coeff[pc] = acc / Rational(mat[k][pc]);
    }
    std::vector<Term> terms;
    for (std::size_t c = 1; c < cols; ++c)
      if (coeff[c] != 0)
        terms.push_back({coeff[c] / Rational(scale), basis.pcps[c]});
    cert.decomposition = Statistic(n, r, coeff[0] / Rational(scale), std::move(terms));
    for (std::size_t i = 0; i < rows; ++i)
      if (evaluate(cert.decomposition, elements[i]) != values[i])
        throw Error("span decomposition failed verification");
    cert.in_span = true;
    return cert;
  }

  // Rerun with the row operations recorded to extract a separating functional.
  mat = build(true);
  const auto again = eliminate(mat, cols);
  for (std::size_t i = again.size(); i < rows; ++i) {
    if (mat[i][cols] == 0)
      continue;
    std::vector<Rational> y(rows);
    for (std::size_t e = 0; e < rows; ++e)
      y[e] = mat[i][cols + 1 + e];
    std::vector<Rational> against(cols, 0);
    Rational pairing = 0;
    for (std::size_t e = 0; e < rows; ++e) {
      if (y[e] == 0)
        continue;
      for (std::size_t c : satisfied_columns(elements[e], m, basis))
        against[c] += y[e];
      pairing += y[e] * values[e];
    }
    for (const auto& v : against)
      if (v != 0)
        throw Error("span witness failed verification");
    if (pairing == 0)
      throw Error("span witness failed verification");
    for (std::size_t e = 0; e < rows; ++e) {
      if (y[e] == 0)
        continue;
      cert.witness_elements.push_back(elements[e]);
      cert.witness_weights.push_back(y[e]);
    }
    return cert;
  }
  throw Error("span elimination lost its inconsistent row");
}

} // namespace wreath
