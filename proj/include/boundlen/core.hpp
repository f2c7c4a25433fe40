#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boundlen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No binary image can have the requested line sums.
class InconsistentError : public Error {
 public:
  using Error::Error;
};

// An operation's precondition on the instance shape is not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidSplitPointError : public Error {
 public:
  using Error::Error;
};

class EmptyAllowedSetError : public Error {
 public:
  using Error::Error;
};

// Malformed instance or image text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Row and column sums of a binary image; the problem instance.
// Entries are validated non-negative at construction. Whether the sums are
// "well-bounded" (r_i <= n and c_j <= m) is a separate predicate so that
// arbitrary input can still be represented and rejected with a reason.
class LineSums {
 public:
  LineSums(std::vector<int> rows, std::vector<int> cols);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  int height() const { return static_cast<int>(rows_.size()); }
  int width() const { return static_cast<int>(cols_.size()); }
  long long row_total() const;
  long long col_total() const;
  bool well_bounded() const;

  bool operator==(const LineSums&) const = default;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

// An m x n grid of {0,1}. Cell access is 0-based with row 0 on top; all
// reports and witnesses use 1-based indices. Everything outside the box is
// implicitly 0 when boundary is counted.
class BinaryImage {
 public:
  BinaryImage(int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }
  bool get(int row, int col) const { return cells_[index(row, col)] != 0; }
  void set(int row, int col, bool value) { cells_[index(row, col)] = value ? 1 : 0; }
  int count_ones() const;

  bool operator==(const BinaryImage&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(col);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Differing adjacent pairs, split by orientation. Pairs stacked in the same
// column make up the horizontal boundary; pairs side by side in the same row
// make up the vertical boundary. Both counts include the zero ring around
// the box, so each is even.
struct BoundaryReport {
  int horizontal = 0;
  int vertical = 0;
  int total = 0;
};

LineSums projections(const BinaryImage& image);
BoundaryReport boundary_report(const BinaryImage& image);
BinaryImage complement(const BinaryImage& image);
BinaryImage transpose(const BinaryImage& image);
LineSums transpose(const LineSums& ls);

// ASCII image format: one line per row, '#' for 1 and '.' for 0, row 1
// first, trailing newline optional. Bit-exact for golden tests.
std::string to_ascii(const BinaryImage& image);
BinaryImage parse_ascii(std::string_view text);

}  // namespace boundlen
