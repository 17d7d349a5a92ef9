#include "lbi/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace lbi {

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const Int numerator = parse_integer(num);
  Int denominator = 1;
  if (slash != std::string::npos) {
    denominator = parse_integer(text.substr(slash + 1));
    if (denominator == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + text + "'");
  }
  return make_rat(numerator, denominator);
}

Int parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw Error(ErrorCode::MalformedInput, "expected an integer, got '" + text + "'");
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorCode::MalformedInput, "expected an integer, got '" + text + "'");
    }
  }
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::MalformedInput, "ragged rows: row " + std::to_string(i + 1) + " has " +
                                                 std::to_string(rows[i].size()) + " entries, expected " +
                                                 std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (long v : row) r.emplace_back(v);
    converted.push_back(std::move(r));
  }
  return from_rows(converted);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
  }
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied.
std::size_t bareiss(IntMatrix& m, int& sign) {
  sign = 1;
  std::size_t rank = 0;
  Int previous = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      m.swap_rows(pivot, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Int value = m(i, j) * m(rank, col) - m(i, col) * m(rank, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = value;
      }
      m(i, col) = 0;
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign = 1;
  return bareiss(work, sign);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  if (bareiss(work, sign) < m.rows()) return 0;
  Int det = work(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? det : Int(-det);
}

std::vector<Int> SmithForm::elementary_divisors() const {
  std::vector<Int> out;
  for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) out.push_back(D(k, k));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = f.D;
  const std::size_t diag = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (!best || abs_int(d(i, j)) < abs_int(d(best->first, best->second)))) best = {i, j};
    if (!best) break;
    d.swap_rows(t, best->first);
    f.U.swap_rows(t, best->first);
    d.swap_cols(t, best->second);
    f.V.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs_int(d(i, t)) < abs_int(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs_int(d(t, j)) < abs_int(d(bi, bj))) bi = t, bj = j;
        d.swap_rows(t, bi);
        f.U.swap_rows(t, bi);
        d.swap_cols(t, bj);
        f.V.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold any offending row into the pivot row and redo.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row_multiple(t, *offender, 1);
      f.U.add_row_multiple(t, *offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm f{IntMatrix::identity(m.rows()), m};
  IntMatrix& h = f.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < h.rows(); ++i)
        if (h(i, col) != 0 && (!best || abs_int(h(i, col)) < abs_int(h(*best, col)))) best = i;
      if (!best) break;
      h.swap_rows(row, *best);
      f.U.swap_rows(row, *best);
      bool reduced = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const Int q = h(i, col) / h(row, col);
        h.add_row_multiple(i, row, -q);
        f.U.add_row_multiple(i, row, -q);
        if (h(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      f.U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
      h.add_row_multiple(i, row, -q);
      f.U.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return f;
}

BMatrix::BMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.cols() != 2) {
    throw Error(ErrorCode::MalformedInput,
                "expected 2 columns, got " + std::to_string(entries_.cols()));
  }
  if (entries_.rows() < 2) {
    throw Error(ErrorCode::MalformedInput, "expected at least 2 rows, got " + std::to_string(entries_.rows()));
  }
  if (rank(entries_) != 2) throw Error(ErrorCode::RankDeficient, "matrix has rank < 2");
}

bool is_valid_grading(const IntMatrix& a, const BMatrix& b) {
  const std::size_t n = b.n();
  if (a.cols() != n || a.rows() != n - 2) return false;
  if (n == 2) return true;
  if (!(a * b.matrix()).is_zero()) return false;
  const auto divisors = smith_normal_form(a).elementary_divisors();
  return std::all_of(divisors.begin(), divisors.end(), [](const Int& v) { return v == 1; });
}

AMatrix::AMatrix(IntMatrix entries, const BMatrix& b) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 && b.n() == 2) entries_ = IntMatrix(0, 2);
  if (!is_valid_grading(entries_, b)) {
    throw Error(ErrorCode::InvalidA, "A must be (n-2) x n with A*B = 0 and unit elementary divisors");
  }
}

namespace {

IntMatrix parse_json_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "JSON matrix must be {\"rows\": [[...], ...]}");
  }
  std::vector<std::vector<Int>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw Error(ErrorCode::MalformedInput, "each JSON row must be an array");
    std::vector<Int> parsed;
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        parsed.push_back(parse_integer(entry.dump()));
      } else if (entry.is_string()) {
        parsed.push_back(parse_integer(entry.get<std::string>()));
      } else {
        throw Error(ErrorCode::MalformedInput, "non-integer JSON entry " + entry.dump());
      }
    }
    rows.push_back(std::move(parsed));
  }
  if (rows.empty()) throw Error(ErrorCode::MalformedInput, "empty matrix");
  return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorCode::MalformedInput, "empty matrix");
  if (text[first] == '{') return parse_json_matrix(text);

  std::vector<std::vector<Int>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<Int> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_integer(token));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::MalformedInput, "empty matrix");
  return IntMatrix::from_rows(rows);
}

BMatrix parse_matrix(std::string_view text) { return BMatrix(parse_int_matrix(text)); }

AMatrix cokernel(const BMatrix& b) {
  const std::size_t n = b.n();
  if (n == 2) return AMatrix(IntMatrix(0, 2), b);
  const SmithForm snf = smith_normal_form(b.matrix());
  IntMatrix kernel(n - 2, n);
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel(i - 2, j) = snf.U(i, j);
  return AMatrix(hermite_normal_form(kernel).H, b);
}

namespace {

int sign_of(const Int& v) { return sgn(v); }

}  // namespace

std::vector<PairAnalysis> analyze_pairs(const BMatrix& b) {
  std::vector<PairAnalysis> out;
  for (std::size_t i = 0; i < b.n(); ++i) {
    for (std::size_t j = i + 1; j < b.n(); ++j) {
      PairAnalysis pair;
      pair.i = i;
      pair.j = j;
      const int si1 = sign_of(b(i, 0)), si2 = sign_of(b(i, 1));
      const int sj1 = sign_of(b(j, 0)), sj2 = sign_of(b(j, 1));
      pair.opposite_open_quadrants = si1 != 0 && si2 != 0 && sj1 == -si1 && sj2 == -si2;
      pair.dependent = b(i, 0) * b(j, 1) - b(i, 1) * b(j, 0) == 0;
      if (pair.dependent && pair.opposite_open_quadrants) {
        pair.lambda = make_rat(-b(j, 0), b(i, 0));
        pair.d = gcd_int(b(i, 0), b(i, 1));
      }
      out.push_back(pair);
    }
  }
  return out;
}

namespace {

// Rays (alpha, beta) bounding the half-planes alpha*b_k1 + beta*b_k2 >= 0
// that satisfy every such constraint.
std::vector<std::pair<Int, Int>> feasible_boundary_rays(const BMatrix& b) {
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t k = 0; k < b.n(); ++k) {
    if (b(k, 0) == 0 && b(k, 1) == 0) continue;
    for (int s : {1, -1}) {
      const Int alpha = s * b(k, 1);
      const Int beta = -s * b(k, 0);
      bool feasible = true;
      for (std::size_t m = 0; m < b.n() && feasible; ++m) feasible = alpha * b(m, 0) + beta * b(m, 1) >= 0;
      if (feasible) out.emplace_back(alpha, beta);
    }
  }
  return out;
}

}  // namespace

bool has_nonneg_column_span_direction(const BMatrix& b) { return !feasible_boundary_rays(b).empty(); }

bool grading_cone_is_pointed(const BMatrix& b) {
  const std::size_t n = b.n();
  // e_k lies in the column span of B iff the other rows have rank <= 1; the
  // corresponding column of every grading matrix is then zero.
  std::vector<bool> zero_grading_column(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix rest(n - 1, 2);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
      if (i == k) continue;
      rest(r, 0) = b(i, 0);
      rest(r, 1) = b(i, 1);
      ++r;
    }
    zero_grading_column[k] = rank(rest) <= 1;
  }
  for (const auto& [alpha, beta] : feasible_boundary_rays(b)) {
    for (std::size_t m = 0; m < n; ++m) {
      if (!zero_grading_column[m] && alpha * b(m, 0) + beta * b(m, 1) > 0) return false;
    }
  }
  return true;
}

}  // namespace lbi
