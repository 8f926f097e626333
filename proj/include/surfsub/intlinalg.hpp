// Exact integer linear algebra: Smith normal form with unimodular
// witnesses, determinants, cokernels. Rows are relations, columns are
// generators, project-wide.

#ifndef SURFSUB_INTLINALG_HPP_
#define SURFSUB_INTLINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfsub {

  using BigInt = boost::multiprecision::cpp_int;

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    // Every row must have length cols.
    IntMatrix(std::size_t cols, std::vector<std::vector<BigInt>> const& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    BigInt& operator()(std::size_t r, std::size_t c) {
      return entries_[r * cols_ + c];
    }
    BigInt const& operator()(std::size_t r, std::size_t c) const {
      return entries_[r * cols_ + c];
    }
    std::span<BigInt const> entries() const noexcept {
      return entries_;
    }

    IntMatrix transposed() const;
    IntMatrix permuted(std::span<std::size_t const> row_order,
                       std::span<std::size_t const> col_order) const;

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<BigInt> entries_;
  };

  std::string to_string(IntMatrix const& m);

  //! left * M * right == diag(invariants, 0, ...), with invariants[i]
  //! dividing invariants[i+1], all positive, and left/right unimodular.
  struct SmithForm {
    std::vector<BigInt> invariants;
    std::size_t         rank = 0;
    IntMatrix           left;
    IntMatrix           right;

    IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
  };

  SmithForm smith_normal_form(IntMatrix const& m);

  struct Cokernel {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    BigInt torsion_order() const;
  };

  // The abelian group with generators = columns and relations = rows.
  Cokernel    cokernel_invariants(IntMatrix const& m);
  std::size_t rank(IntMatrix const& m);
  // Fraction-free (Bareiss) elimination; square input only.
  BigInt determinant(IntMatrix const& m);
  // Is v an integer combination of the rows of m?
  bool in_row_lattice(IntMatrix const& m, std::span<BigInt const> v);

}  // namespace surfsub

#endif  // SURFSUB_INTLINALG_HPP_
