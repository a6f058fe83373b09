#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "twistspin/laurent.hpp"

namespace twistspin {

// Dense rows x cols matrix over Z[t, t^-1], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const LaurentPoly> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

// One "[p11, p12, ...]" line per row.
std::string render_matrix(const PolyMatrix& m);

}  // namespace twistspin
