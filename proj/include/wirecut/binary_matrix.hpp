// Copyright 2026 The wirecut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wirecut {

/// Dense matrix over GF(2), row-major, one byte per entry.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
    void flip(std::size_t r, std::size_t c) { bits_[r * cols_ + c] ^= 1u; }

    std::vector<std::uint8_t> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<std::uint8_t>& v);
    void swap_columns(std::size_t a, std::size_t b);
    /// column[dst] ^= column[src]
    void add_column(std::size_t dst, std::size_t src);

    BinaryMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    bool is_symmetric() const;
    bool is_identity() const;
    bool is_zero() const;

    std::size_t rank() const;

    std::string str() const;
    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

}  // namespace wirecut
