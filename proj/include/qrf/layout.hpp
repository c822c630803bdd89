// Copyright 2026 The qrf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrf {

/// Ordered list of register dimensions for a composite Hilbert space,
/// with big-endian index packing: register 0 is the most significant
/// digit, so for local dimensions (d_0, ..., d_{n-1}) a basis index is
///
///   index = digit_0 * (d_1 * ... * d_{n-1}) + ... + digit_{n-1}.
///
/// An empty layout describes the one-dimensional (scalar) space, which
/// shows up naturally as the residual space left over after removing
/// every system register.
class RegisterLayout {
 public:
  RegisterLayout() = default;

  explicit RegisterLayout(std::vector<int> dims) : dims_(std::move(dims)) {
    long long total = 1;
    for (int d : dims_) {
      if (d < 2) {
        throw std::invalid_argument(
            "RegisterLayout: every register dimension must be >= 2");
      }
      total *= d;
      if (total > kMaxTotalDim) {
        throw std::invalid_argument(
            "RegisterLayout: total dimension exceeds supported range");
      }
    }
    total_ = static_cast<int>(total);
  }

  /// Layout of `registers` registers that all share one local dimension.
  static RegisterLayout uniform(int registers, int local_dim) {
    if (registers < 0) {
      throw std::invalid_argument("RegisterLayout: negative register count");
    }
    return RegisterLayout(std::vector<int>(registers, local_dim));
  }

  int registers() const { return static_cast<int>(dims_.size()); }
  int total_dim() const { return total_; }

  int local_dim(int r) const {
    check_register(r);
    return dims_[r];
  }

  const std::vector<int>& dims() const { return dims_; }

  /// True when all registers share one local dimension (vacuously true
  /// for the empty layout).
  bool is_homogeneous() const {
    for (int d : dims_) {
      if (d != dims_[0]) return false;
    }
    return true;
  }

  /// The common local dimension of a homogeneous, non-empty layout.
  int homogeneous_dim() const {
    if (dims_.empty() || !is_homogeneous()) {
      throw std::invalid_argument(
          "RegisterLayout: homogeneous local dimension is undefined");
    }
    return dims_[0];
  }

  /// Product of the local dimensions of all registers after `r`.
  int stride(int r) const {
    check_register(r);
    int s = 1;
    for (std::size_t i = r + 1; i < dims_.size(); ++i) s *= dims_[i];
    return s;
  }

  /// Digit of `index` at register `r`.
  int digit(int index, int r) const {
    check_index(index);
    return (index / stride(r)) % dims_[r];
  }

  /// Index in the layout `without(r)` obtained by deleting register r's
  /// digit from `index`.
  int remove_digit(int index, int r) const {
    check_index(index);
    const int s = stride(r);
    return (index / (s * dims_[r])) * s + (index % s);
  }

  /// Inverse of remove_digit: re-insert `value` as register r's digit
  /// into an index of the layout `without(r)`.
  int insert_digit(int residual, int r, int value) const {
    check_register(r);
    if (value < 0 || value >= dims_[r]) {
      throw std::out_of_range("RegisterLayout: digit value out of range");
    }
    const int s = stride(r);
    if (residual < 0 || residual >= total_ / dims_[r]) {
      throw std::out_of_range("RegisterLayout: residual index out of range");
    }
    return (residual / s) * (s * dims_[r]) + value * s + (residual % s);
  }

  /// Index with register r's digit replaced by `value`.
  int replace_digit(int index, int r, int value) const {
    return insert_digit(remove_digit(index, r), r, value);
  }

  /// Layout with register r removed; the remaining registers keep their
  /// relative order.
  RegisterLayout without(int r) const {
    check_register(r);
    std::vector<int> rest = dims_;
    rest.erase(rest.begin() + r);
    return RegisterLayout(std::move(rest));
  }

  /// Layout with a register of dimension `local_dim` inserted so that it
  /// ends up at position `r`.
  RegisterLayout with_inserted(int r, int local_dim) const {
    if (r < 0 || r > registers()) {
      throw std::out_of_range("RegisterLayout: insertion position out of range");
    }
    std::vector<int> dims = dims_;
    dims.insert(dims.begin() + r, local_dim);
    return RegisterLayout(std::move(dims));
  }

  /// Concatenation: the registers of `other` appended after this layout's.
  RegisterLayout concatenated(const RegisterLayout& other) const {
    std::vector<int> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return RegisterLayout(std::move(dims));
  }

  bool operator==(const RegisterLayout& other) const {
    return dims_ == other.dims_;
  }
  bool operator!=(const RegisterLayout& other) const {
    return !(*this == other);
  }

  /// Digits of `index`, most significant first.
  std::vector<int> digits(int index) const {
    check_index(index);
    std::vector<int> out(dims_.size());
    for (int r = registers() - 1; r >= 0; --r) {
      out[r] = index % dims_[r];
      index /= dims_[r];
    }
    return out;
  }

  /// Index packing the given digits, most significant first.
  int pack(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != registers()) {
      throw std::invalid_argument("RegisterLayout: wrong number of digits");
    }
    int index = 0;
    for (int r = 0; r < registers(); ++r) {
      if (digits[r] < 0 || digits[r] >= dims_[r]) {
        throw std::out_of_range("RegisterLayout: digit value out of range");
      }
      index = index * dims_[r] + digits[r];
    }
    return index;
  }

  /// Basis label of `index`, e.g. "011" for qubit registers or "0.2.1"
  /// when some local dimension needs more than one character.
  std::string label(int index) const {
    const std::vector<int> ds = digits(index);
    bool wide = false;
    for (int d : dims_) wide = wide || d > 10;
    std::ostringstream out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (wide && i > 0) out << '.';
      out << ds[i];
    }
    return out.str();
  }

  std::string describe() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i > 0) out << ',';
      out << dims_[i];
    }
    out << ']';
    return out.str();
  }

 private:
  static constexpr long long kMaxTotalDim = 1 << 24;

  void check_register(int r) const {
    if (r < 0 || r >= registers()) {
      throw std::out_of_range("RegisterLayout: register index out of range");
    }
  }
  void check_index(int index) const {
    if (index < 0 || index >= total_) {
      throw std::out_of_range("RegisterLayout: basis index out of range");
    }
  }

  std::vector<int> dims_;
  int total_ = 1;
};

}  // namespace qrf
