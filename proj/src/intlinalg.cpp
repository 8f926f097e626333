#include "surfsub/intlinalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace surfsub {

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("IntMatrix: ragged rows");
      }
      for (long long x : row) {
        entries_.emplace_back(x);
      }
    }
  }

  IntMatrix::IntMatrix(std::size_t cols, std::vector<std::vector<BigInt>> const& rows)
      : rows_(rows.size()), cols_(cols) {
    entries_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("IntMatrix: ragged rows");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  IntMatrix IntMatrix::permuted(std::span<std::size_t const> row_order,
                                std::span<std::size_t const> col_order) const {
    IntMatrix p(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        p(r, c) = (*this)(row_order[r], col_order[c]);
      }
    }
    return p;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        BigInt const& x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          c(i, j) += x * b(k, j);
        }
      }
    }
    return c;
  }

  std::string to_string(IntMatrix const& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out << (c ? ", " : "") << m(r, c);
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Working state: a = left * m * right throughout.
    struct Reducer {
      IntMatrix a, left, right;

      void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
          std::swap(a(i, c), a(j, c));
        }
        for (std::size_t c = 0; c < left.cols(); ++c) {
          std::swap(left(i, c), left(j, c));
        }
      }
      void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
          std::swap(a(r, i), a(r, j));
        }
        for (std::size_t r = 0; r < right.rows(); ++r) {
          std::swap(right(r, i), right(r, j));
        }
      }
      // row_i += c * row_j
      void add_row(std::size_t i, std::size_t j, BigInt const& c) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
          a(i, k) += c * a(j, k);
        }
        for (std::size_t k = 0; k < left.cols(); ++k) {
          left(i, k) += c * left(j, k);
        }
      }
      // col_i += c * col_j
      void add_col(std::size_t i, std::size_t j, BigInt const& c) {
        for (std::size_t k = 0; k < a.rows(); ++k) {
          a(k, i) += c * a(k, j);
        }
        for (std::size_t k = 0; k < right.rows(); ++k) {
          right(k, i) += c * right(k, j);
        }
      }
      void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
          a(i, k) = -a(i, k);
        }
        for (std::size_t k = 0; k < left.cols(); ++k) {
          left(i, k) = -left(i, k);
        }
      }

      // Least nonzero |entry| in the block [t.., t..], if any.
      std::optional<std::pair<std::size_t, std::size_t>> least_in_block(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = t; r < a.rows(); ++r) {
          for (std::size_t c = t; c < a.cols(); ++c) {
            if (a(r, c) != 0
                && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) {
              best = {r, c};
            }
          }
        }
        return best;
      }

      // Least nonzero |entry| in row t and column t beyond the pivot block.
      std::optional<std::pair<std::size_t, std::size_t>> least_in_cross(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        auto consider = [&](std::size_t r, std::size_t c) {
          if (a(r, c) != 0
              && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) {
            best = {r, c};
          }
        };
        for (std::size_t r = t; r < a.rows(); ++r) {
          consider(r, t);
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          consider(t, c);
        }
        return best;
      }
    };
  }  // namespace

  IntMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < invariants.size(); ++i) {
      d(i, i) = invariants[i];
    }
    return d;
  }

  SmithForm smith_normal_form(IntMatrix const& m) {
    Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    std::size_t const lim = std::min(m.rows(), m.cols());
    std::size_t       t   = 0;
    for (; t < lim; ++t) {
      auto start = red.least_in_block(t);
      if (!start) {
        break;
      }
      red.swap_rows(t, start->first);
      red.swap_cols(t, start->second);
      while (true) {
        bool clean = true;
        for (std::size_t r = t + 1; r < m.rows(); ++r) {
          if (red.a(r, t) != 0) {
            BigInt q = red.a(r, t) / red.a(t, t);
            red.add_row(r, t, -q);
            clean = clean && red.a(r, t) == 0;
          }
        }
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (red.a(t, c) != 0) {
            BigInt q = red.a(t, c) / red.a(t, t);
            red.add_col(c, t, -q);
            clean = clean && red.a(t, c) == 0;
          }
        }
        if (!clean) {
          auto p = red.least_in_cross(t);
          red.swap_rows(t, p->first);
          red.swap_cols(t, p->second);
          continue;
        }
        // Pivot must divide the rest of the block; otherwise fold the
        // offending row into the pivot row and go again.
        std::optional<std::size_t> bad_row;
        for (std::size_t r = t + 1; r < m.rows() && !bad_row; ++r) {
          for (std::size_t c = t + 1; c < m.cols(); ++c) {
            if (red.a(r, c) % red.a(t, t) != 0) {
              bad_row = r;
              break;
            }
          }
        }
        if (!bad_row) {
          break;
        }
        red.add_row(t, *bad_row, 1);
      }
      if (red.a(t, t) < 0) {
        red.negate_row(t);
      }
    }
    SmithForm snf;
    snf.rank = t;
    for (std::size_t i = 0; i < t; ++i) {
      snf.invariants.push_back(red.a(i, i));
    }
    snf.left  = std::move(red.left);
    snf.right = std::move(red.right);
    return snf;
  }

  BigInt Cokernel::torsion_order() const {
    BigInt order = 1;
    for (auto const& d : torsion) {
      order *= d;
    }
    return order;
  }

  Cokernel cokernel_invariants(IntMatrix const& m) {
    auto     snf = smith_normal_form(m);
    Cokernel result;
    result.free_rank = m.cols() - snf.rank;
    for (auto const& d : snf.invariants) {
      if (d > 1) {
        result.torsion.push_back(d);
      }
    }
    return result;
  }

  std::size_t rank(IntMatrix const& m) {
    return smith_normal_form(m).rank;
  }

  BigInt determinant(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("determinant: matrix not square");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = m;
    BigInt    prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && a(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(k, c), a(r, c));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  bool in_row_lattice(IntMatrix const& m, std::span<BigInt const> v) {
    if (v.size() != m.cols()) {
      throw std::invalid_argument("in_row_lattice: length mismatch");
    }
    // v = y * m  <=>  v * right = (y * left^-1) * diag.
    auto snf = smith_normal_form(m);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt x = 0;
      for (std::size_t k = 0; k < m.cols(); ++k) {
        x += v[k] * snf.right(k, j);
      }
      if (j < snf.rank) {
        if (x % snf.invariants[j] != 0) {
          return false;
        }
      } else if (x != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace surfsub
