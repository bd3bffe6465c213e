#include "tlrep/recoupling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "tlrep/errors.hpp"
#include "tlrep/networks.hpp"

namespace tlrep {

namespace {

using Key = std::array<int, 6>;

struct Cache {
  std::shared_mutex mutex;
  std::map<Key, std::shared_ptr<const RecouplingMatrix>> table;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::optional<int> find_label(const std::vector<int>& labels, int label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

std::string describe(int a, int b, int c, int d) {
  std::ostringstream os;
  os << "M[" << a << "," << b << "," << c << "," << d << "]";
  return os.str();
}

void assert_consistent(const RecouplingMatrix& m, double tol) {
  if (m.imag_residue >= tol)
    throw ConventionError(describe(m.a, m.b, m.c, m.d) + " is not real: residue " +
                          std::to_string(m.imag_residue));
  if (m.orthogonality_residue >= tol) {
    std::ostringstream os;
    os << describe(m.a, m.b, m.c, m.d) << " is not orthogonal at (r=" << m.params.r()
       << ", k=" << m.params.k() << "): max|MM^T - I| = " << m.orthogonality_residue;
    throw ConventionError(os.str());
  }
}

}  // namespace

std::optional<int> RecouplingMatrix::row_index(int label) const {
  return find_label(row_labels, label);
}

std::optional<int> RecouplingMatrix::col_index(int label) const {
  return find_label(col_labels, label);
}

double RecouplingMatrix::at(int row_label, int col_label) const {
  const auto r = row_index(row_label);
  const auto c = col_index(col_label);
  if (!r || !c) return 0.0;
  return entries(*r, *c);
}

std::vector<int> recoupling_col_labels(const BracketParams& p, int a, int b, int c, int d) {
  std::vector<int> out;
  for (int i = 0; i <= p.max_label(); ++i)
    if (admissible(p, c, a, i) && admissible(p, i, b, d)) out.push_back(i);
  return out;
}

std::vector<int> recoupling_row_labels(const BracketParams& p, int a, int b, int c, int d) {
  std::vector<int> out;
  for (int j = 0; j <= p.max_label(); ++j)
    if (admissible(p, a, b, j) && admissible(p, c, j, d)) out.push_back(j);
  return out;
}

double recoupling_denominator(const BracketParams& p, int a, int b, int c, int d, int j) {
  const double magnitude = std::sqrt(std::abs(delta(p, a) * delta(p, b) * delta(p, c) * delta(p, d)));
  const double sign_source = delta(p, j) * theta(p, a, b, j) * theta(p, c, j, d);
  return sign_source < 0 ? -magnitude : magnitude;
}

double recoupling_denominator_by_row(const BracketParams& p, int a, int b, int c, int d, int j) {
  const double dj = std::abs(delta(p, j));
  return std::sqrt(std::abs(delta(p, a) * delta(p, b)) / dj) *
         std::sqrt(std::abs(delta(p, c) * delta(p, d)) / dj) * dj;
}

namespace {

RecouplingMatrix build(const BracketParams& p, int a, int b, int c, int d) {
  RecouplingMatrix m{p, a, b, c, d, recoupling_row_labels(p, a, b, c, d),
                     recoupling_col_labels(p, a, b, c, d), {}, 0.0, 0.0};
  if (m.row_labels.empty() || m.col_labels.empty())
    throw std::invalid_argument(describe(a, b, c, d) + " has no admissible internal label");
  if (m.row_labels.size() != m.col_labels.size())
    throw ConventionError(describe(a, b, c, d) + " is not square");

  const int n = m.dim();
  m.entries.resize(n, n);
  for (int r = 0; r < n; ++r) {
    const int j = m.row_labels[r];
    const double denom = recoupling_denominator(p, a, b, c, d, j);
    for (int col = 0; col < n; ++col) {
      const int i = m.col_labels[col];
      // vertices (c,a,i), (b,d,i), (a,b,j), (c,d,j)
      m.entries(r, col) = mod_tet(p, c, a, i, b, d, j) / denom;
    }
  }

  int top = std::max({a, b, c, d});
  for (int x : m.row_labels) top = std::max(top, x);
  for (int x : m.col_labels) top = std::max(top, x);
  for (int q = 1; q <= top + (a + b + c + d) / 2 + 2; ++q)
    m.imag_residue = std::max(m.imag_residue, std::abs(qint_bracket_form(p, q).imag()));

  const Eigen::MatrixXd gram = m.entries * m.entries.transpose();
  m.orthogonality_residue = (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return m;
}

}  // namespace

RecouplingMatrix fmatrix_uncached(const BracketParams& p, int a, int b, int c, int d) {
  RecouplingMatrix m = build(p, a, b, c, d);
  assert_consistent(m, p.tol());
  return m;
}

RecouplingMatrix fmatrix_unchecked(const BracketParams& p, int a, int b, int c, int d) {
  const Key key{p.r(), p.k(), a, b, c, d};
  auto& store = cache();
  std::shared_ptr<const RecouplingMatrix> found;
  {
    std::shared_lock lock(store.mutex);
    auto it = store.table.find(key);
    if (it != store.table.end()) found = it->second;
  }
  if (!found) {
    // Built outside the lock; a racing duplicate is identical and discarded.
    auto built = std::make_shared<const RecouplingMatrix>(build(p, a, b, c, d));
    std::unique_lock lock(store.mutex);
    found = store.table.try_emplace(key, std::move(built)).first->second;
  }
  RecouplingMatrix out = *found;
  out.params = p;
  return out;
}

RecouplingMatrix fmatrix(const BracketParams& p, int a, int b, int c, int d) {
  RecouplingMatrix out = fmatrix_unchecked(p, a, b, c, d);
  assert_consistent(out, p.tol());
  return out;
}

TransposeCheck transpose_relation_check(const BracketParams& p, int a, int b, int c, int d) {
  TransposeCheck result;
  RecouplingMatrix m = fmatrix_unchecked(p, a, b, c, d);
  RecouplingMatrix rotated = fmatrix_unchecked(p, b, d, a, c);
  if (m.row_labels != rotated.col_labels || m.col_labels != rotated.row_labels) {
    result.residual = INFINITY;
    result.diagnostic = "label sets differ between " + describe(a, b, c, d) + "^T and " +
                        describe(b, d, a, c);
    return result;
  }
  const Eigen::MatrixXd diff = m.entries.transpose() - rotated.entries;
  result.residual = diff.cwiseAbs().maxCoeff();
  result.ok = result.residual < p.tol();
  if (!result.ok) {
    std::ostringstream os;
    os << describe(a, b, c, d) << "^T - " << describe(b, d, a, c) << " =\n" << diff;
    result.diagnostic = os.str();
  }
  return result;
}

void clear_recoupling_cache() {
  std::unique_lock lock(cache().mutex);
  cache().table.clear();
}

std::size_t recoupling_cache_size() {
  std::shared_lock lock(cache().mutex);
  return cache().table.size();
}

}  // namespace tlrep
