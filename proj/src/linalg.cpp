#include "polystack/linalg.hpp"

#include "polystack/errors.hpp"

namespace polystack {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += a[i] * b[i];
  return sum;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("add: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sub: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = s * a[i];
  return out;
}

Side classify_point(const Hyperplane& plane, const Vec& point) {
  Rational value = dot(plane.normal, point) - plane.offset;
  int sign = sgn(value);
  if (sign < 0)
    return Side::Beyond;
  if (sign == 0)
    return Side::On;
  return Side::Beneath;
}

Hyperplane canonicalized(const Hyperplane& plane) {
  bool nonzero = false;
  for (const Rational& entry : plane.normal)
    if (entry != 0)
      nonzero = true;
  if (!nonzero)
    throw std::invalid_argument("canonicalized: zero normal");

  // Positive scaling only: multiply by the lcm of denominators, then divide
  // by the gcd of the resulting integers. The orientation never flips.
  mpz_class lcm_den = 1;
  auto fold_den = [&](const Rational& value) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), value.get_den().get_mpz_t());
    lcm_den = l;
  };
  for (const Rational& entry : plane.normal)
    fold_den(entry);
  fold_den(plane.offset);

  mpz_class gcd_num = 0;
  auto fold_num = [&](const Rational& value) {
    mpz_class scaled_num = value.get_num() * (lcm_den / value.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled_num.get_mpz_t());
    gcd_num = g;
  };
  for (const Rational& entry : plane.normal)
    fold_num(entry);
  fold_num(plane.offset);

  Rational factor(lcm_den, gcd_num);
  factor.canonicalize();

  Hyperplane out;
  out.normal.reserve(plane.normal.size());
  for (const Rational& entry : plane.normal)
    out.normal.push_back(entry * factor);
  out.offset = plane.offset * factor;
  return out;
}

std::optional<Vec> solve_square(const std::vector<Vec>& rows, const Vec& rhs) {
  std::size_t n = rows.size();
  if (rhs.size() != n)
    throw std::invalid_argument("solve_square: rhs size mismatch");
  std::vector<Vec> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("solve_square: matrix not square");
    m[i] = rows[i];
    m[i].push_back(rhs[i]);
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0)
        continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c)
        m[r][c] -= factor * m[col][c];
    }
  }

  Vec solution(n);
  for (std::size_t i = 0; i < n; ++i)
    solution[i] = m[i][n] / m[i][i];
  return solution;
}

int linear_rank(std::vector<Vec> rows) {
  if (rows.empty())
    return 0;
  std::size_t cols = rows[0].size();
  for (const Vec& row : rows)
    if (row.size() != cols)
      throw std::invalid_argument("linear_rank: ragged rows");

  int rank = 0;
  std::size_t row_at = 0;
  for (std::size_t col = 0; col < cols && row_at < rows.size(); ++col) {
    std::size_t pivot = row_at;
    while (pivot < rows.size() && rows[pivot][col] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[row_at], rows[pivot]);
    for (std::size_t r = row_at + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0)
        continue;
      Rational factor = rows[r][col] / rows[row_at][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] -= factor * rows[row_at][c];
    }
    ++row_at;
    ++rank;
  }
  return rank;
}

int affine_rank(const std::vector<Vec>& points) {
  if (points.empty())
    return -1;
  std::vector<Vec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(sub(points[i], points[0]));
  return linear_rank(std::move(diffs));
}

Vec barycenter(const std::vector<Vec>& points) {
  if (points.empty())
    throw std::invalid_argument("barycenter: no points");
  Vec sum(points[0].size(), Rational(0));
  for (const Vec& p : points)
    sum = add(sum, p);
  Rational inv = rat(1, static_cast<long>(points.size()));
  return scale(inv, sum);
}

std::optional<Hyperplane> hyperplane_span(const std::vector<Vec>& points) {
  if (points.empty())
    return std::nullopt;
  std::size_t dim = points[0].size();

  // Solve <n, p> - c = 0 for all p: the nullspace of the matrix with rows
  // (p, -1) over variables (n, c) must be a line.
  std::vector<Vec> m;
  m.reserve(points.size());
  for (const Vec& p : points) {
    if (p.size() != dim)
      throw std::invalid_argument("hyperplane_span: ragged points");
    Vec row = p;
    row.push_back(Rational(-1));
    m.push_back(std::move(row));
  }

  std::size_t cols = dim + 1;
  std::vector<std::size_t> pivot_col;
  std::size_t row_at = 0;
  for (std::size_t col = 0; col < cols && row_at < m.size(); ++col) {
    std::size_t pivot = row_at;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row_at], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row_at || m[r][col] == 0)
        continue;
      Rational factor = m[r][col] / m[row_at][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] -= factor * m[row_at][c];
    }
    pivot_col.push_back(col);
    ++row_at;
  }

  if (pivot_col.size() != dim)
    return std::nullopt;

  std::size_t free_col = cols;
  for (std::size_t col = 0, k = 0; col < cols; ++col) {
    if (k < pivot_col.size() && pivot_col[k] == col)
      ++k;
    else
      free_col = col;
  }

  Vec solution(cols, Rational(0));
  solution[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    std::size_t col = pivot_col[r];
    // Row is reduced: only the pivot column and the free column survive.
    solution[col] = -m[r][free_col] / m[r][col];
  }

  Hyperplane plane;
  plane.normal.assign(solution.begin(), solution.begin() + dim);
  plane.offset = solution[dim];
  return canonicalized(plane);
}

Hyperplane hyperplane_through(const std::vector<Vec>& points,
                              const Vec& beneath_ref) {
  std::optional<Hyperplane> span = hyperplane_span(points);
  if (!span)
    fail(ErrorKind::Invariant,
         "hyperplane_through: points do not span a hyperplane");
  Hyperplane plane = std::move(*span);

  Rational side = dot(plane.normal, beneath_ref) - plane.offset;
  if (side == 0)
    fail(ErrorKind::Invariant,
         "hyperplane_through: reference point lies on the hyperplane");
  if (side < 0) {
    // Negating keeps the entries coprime integers, so the result stays
    // canonical.
    for (Rational& entry : plane.normal)
      entry = -entry;
    plane.offset = -plane.offset;
  }
  return plane;
}

} // namespace polystack
